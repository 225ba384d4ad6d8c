#include "zgpd/serialize.hpp"

#include <json.hpp>

#include <unordered_map>

namespace zgpd {

using Json = nlohmann::json;

namespace {

[[noreturn]] void violation(const std::string& path, const std::string& message) {
  throw Error(ErrorCode::SchemaViolation, message + " at " + path, {path});
}

// ---- writing ----

Json groupoid_body(const Groupoid& g) {
  const RawGroupoid raw = g.raw();
  Json body;
  body["objects"] = raw.objects;
  Json morphisms = Json::array();
  for (const auto& a : raw.morphisms) morphisms.push_back({a.name, a.source, a.target});
  body["morphisms"] = std::move(morphisms);
  Json identities = Json::array();
  for (const auto& [o, m] : raw.identities) identities.push_back({o, m});
  body["identities"] = std::move(identities);
  Json inverses = Json::array();
  for (const auto& [m, inv] : raw.inverses) inverses.push_back({m, inv});
  body["inverses"] = std::move(inverses);
  Json composition = Json::array();
  for (const auto& c : raw.composition) composition.push_back({c.second, c.first, c.result});
  body["composition"] = std::move(composition);
  return body;
}

Json ztwo_body(const ZTwoGroupoid& a) {
  const Groupoid& g = a.g();
  Json objects = Json::array();
  for (ObjectId x : g.objects()) objects.push_back({g.object_name(x), g.object_name(a.alpha(x))});
  Json morphisms = Json::array();
  for (MorphismId m : g.morphisms()) morphisms.push_back({g.morphism_name(m), g.morphism_name(a.alpha(m))});
  Json body;
  body["groupoid"] = groupoid_body(g);
  body["involution"] = {{"objects", std::move(objects)}, {"morphisms", std::move(morphisms)}};
  return body;
}

Json map_body(const EquivariantFunctor& f) {
  const Groupoid& s = f.source->g();
  const Groupoid& t = f.target->g();
  Json objects = Json::array();
  for (ObjectId x : s.objects()) objects.push_back({s.object_name(x), t.object_name(f(x))});
  Json morphisms = Json::array();
  for (MorphismId m : s.morphisms()) morphisms.push_back({s.morphism_name(m), t.morphism_name(f(m))});
  Json body;
  body["source"] = ztwo_body(*f.source);
  body["target"] = ztwo_body(*f.target);
  body["objects"] = std::move(objects);
  body["morphisms"] = std::move(morphisms);
  return body;
}

std::string document(std::string_view kind, Json body) {
  Json doc;
  doc["version"] = kDocumentVersion;
  doc["kind"] = kind;
  doc["body"] = std::move(body);
  return doc.dump(1) + "\n";
}

// ---- reading ----

const Json& field(const Json& j, const std::string& path, const char* key) {
  if (!j.is_object()) violation(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) violation(path + "/" + key, "missing field");
  return *it;
}

const Json& array_at(const Json& j, const std::string& path, const char* key) {
  const Json& a = field(j, path, key);
  if (!a.is_array()) violation(path + "/" + key, "expected an array");
  return a;
}

const std::string& string_at(const Json& j, const std::string& path) {
  if (!j.is_string()) violation(path, "expected a string");
  return j.get_ref<const std::string&>();
}

// [s0, s1, ...] with exactly n strings.
std::vector<std::string> tuple_at(const Json& j, const std::string& path, std::size_t n) {
  if (!j.is_array() || j.size() != n) violation(path, "expected an array of " + std::to_string(n) + " strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(string_at(j[i], path + "/" + std::to_string(i)));
  return out;
}

void require_known(const std::unordered_map<std::string, std::size_t>& names, const std::string& name,
                   const std::string& path, const char* what) {
  if (!names.count(name)) violation(path, std::string("unknown ") + what + " id '" + name + "'");
}

GroupoidPtr read_groupoid(const Json& j, const std::string& path) {
  RawGroupoid raw;
  std::unordered_map<std::string, std::size_t> objects;
  std::unordered_map<std::string, std::size_t> morphisms;
  const Json& obs = array_at(j, path, "objects");
  for (std::size_t i = 0; i < obs.size(); ++i) {
    raw.objects.push_back(string_at(obs[i], path + "/objects/" + std::to_string(i)));
    objects.emplace(raw.objects.back(), i);
  }
  const Json& ms = array_at(j, path, "morphisms");
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const std::string p = path + "/morphisms/" + std::to_string(i);
    auto t = tuple_at(ms[i], p, 3);
    require_known(objects, t[1], p + "/1", "object");
    require_known(objects, t[2], p + "/2", "object");
    morphisms.emplace(t[0], i);
    raw.morphisms.push_back({t[0], t[1], t[2]});
  }
  const Json& ids = array_at(j, path, "identities");
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const std::string p = path + "/identities/" + std::to_string(i);
    auto t = tuple_at(ids[i], p, 2);
    require_known(objects, t[0], p + "/0", "object");
    require_known(morphisms, t[1], p + "/1", "morphism");
    raw.identities.emplace_back(t[0], t[1]);
  }
  const Json& invs = array_at(j, path, "inverses");
  for (std::size_t i = 0; i < invs.size(); ++i) {
    const std::string p = path + "/inverses/" + std::to_string(i);
    auto t = tuple_at(invs[i], p, 2);
    require_known(morphisms, t[0], p + "/0", "morphism");
    require_known(morphisms, t[1], p + "/1", "morphism");
    raw.inverses.emplace_back(t[0], t[1]);
  }
  const Json& comp = array_at(j, path, "composition");
  for (std::size_t i = 0; i < comp.size(); ++i) {
    const std::string p = path + "/composition/" + std::to_string(i);
    auto t = tuple_at(comp[i], p, 3);
    for (std::size_t k = 0; k < 3; ++k) require_known(morphisms, t[k], p + "/" + std::to_string(k), "morphism");
    raw.composition.push_back({t[0], t[1], t[2]});
  }
  return validate_groupoid(raw);
}

// A total table [[x, y], ...] from the ids of `from` to the ids of `to`.
template <class IdT>
std::vector<IdT> read_table(const Json& j, const std::string& path, std::size_t count,
                            const std::function<std::optional<IdT>(const std::string&)>& from,
                            const std::function<std::optional<IdT>(const std::string&)>& to, const char* what) {
  if (!j.is_array()) violation(path, "expected an array");
  std::vector<IdT> out(count, IdT(UINT32_MAX));
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "/" + std::to_string(i);
    auto t = tuple_at(j[i], p, 2);
    const auto x = from(t[0]);
    if (!x) violation(p + "/0", std::string("unknown ") + what + " id '" + t[0] + "'");
    const auto y = to(t[1]);
    if (!y) violation(p + "/1", std::string("unknown ") + what + " id '" + t[1] + "'");
    if (out[x->index()].value != UINT32_MAX) violation(p + "/0", std::string("duplicate entry for ") + what + " '" + t[0] + "'");
    out[x->index()] = *y;
  }
  for (std::size_t i = 0; i < count; ++i)
    if (out[i].value == UINT32_MAX) violation(path, std::string("table is not total on ") + what + "s");
  return out;
}

template <class T>
T standard_of(const Json& j, const std::string& path) {
  const std::string& name = string_at(j, path);
  auto v = standard(name);
  if (!std::holds_alternative<T>(v)) violation(path, "standard '" + name + "' has the wrong kind");
  return std::get<T>(std::move(v));
}

ZTwoPtr read_ztwo(const Json& j, const std::string& path) {
  if (j.is_object() && j.contains("standard")) return standard_of<ZTwoPtr>(j["standard"], path + "/standard");
  GroupoidPtr g = read_groupoid(field(j, path, "groupoid"), path + "/groupoid");
  const Json& inv = field(j, path, "involution");
  const std::string ip = path + "/involution";
  auto obj = [&](const std::string& n) { return g->find_object(n); };
  auto mor = [&](const std::string& n) { return g->find_morphism(n); };
  auto objects = read_table<ObjectId>(field(inv, ip, "objects"), ip + "/objects", g->object_count(), obj, obj, "object");
  auto morphisms =
      read_table<MorphismId>(field(inv, ip, "morphisms"), ip + "/morphisms", g->morphism_count(), mor, mor, "morphism");
  return make_ztwo(g, std::move(objects), std::move(morphisms));
}

EquivariantFunctor read_map(const Json& j, const std::string& path) {
  if (j.is_object() && j.contains("standard")) return standard_of<EquivariantFunctor>(j["standard"], path + "/standard");
  ZTwoPtr s = read_ztwo(field(j, path, "source"), path + "/source");
  ZTwoPtr t = read_ztwo(field(j, path, "target"), path + "/target");
  auto objects = read_table<ObjectId>(
      field(j, path, "objects"), path + "/objects", s->g().object_count(),
      [&](const std::string& n) { return s->g().find_object(n); },
      [&](const std::string& n) { return t->g().find_object(n); }, "object");
  auto morphisms = read_table<MorphismId>(
      field(j, path, "morphisms"), path + "/morphisms", s->g().morphism_count(),
      [&](const std::string& n) { return s->g().find_morphism(n); },
      [&](const std::string& n) { return t->g().find_morphism(n); }, "morphism");
  return make_equivariant(s, t, std::move(objects), std::move(morphisms));
}

LiftingProblem read_square(const Json& j, const std::string& path) {
  LiftingProblem p{read_map(field(j, path, "left"), path + "/left"), read_map(field(j, path, "right"), path + "/right"),
                   read_map(field(j, path, "top"), path + "/top"), read_map(field(j, path, "bottom"), path + "/bottom")};
  validate_square(p);
  return p;
}

BundleConfig read_config(const Json& j, const std::string& path) {
  const Json& pool = field(j, path, "pool");
  if (!pool.is_number_unsigned()) violation(path + "/pool", "expected a non-negative integer");
  return BundleConfig{pool.get<std::size_t>()};
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

std::string_view document_kind(const Document& d) {
  static constexpr std::string_view kinds[] = {"groupoid", "ztwo-groupoid", "map", "square", "bundle-config"};
  return kinds[d.index()];
}

std::string serialize(const Groupoid& g) { return document("groupoid", groupoid_body(g)); }
std::string serialize(const ZTwoGroupoid& a) { return document("ztwo-groupoid", ztwo_body(a)); }
std::string serialize(const EquivariantFunctor& f) { return document("map", map_body(f)); }

std::string serialize(const LiftingProblem& p) {
  Json body;
  body["left"] = map_body(p.left);
  body["right"] = map_body(p.right);
  body["top"] = map_body(p.top);
  body["bottom"] = map_body(p.bottom);
  return document("square", std::move(body));
}

std::string serialize(const BundleConfig& c) { return document("bundle-config", Json{{"pool", c.pool}}); }

std::string serialize(const Document& d) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, GroupoidPtr> || std::is_same_v<T, ZTwoPtr>)
          return serialize(*v);
        else
          return serialize(v);
      },
      d);
}

Document deserialize(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    const std::string where = line_column(text, e.byte);
    throw Error(ErrorCode::SchemaViolation, "not valid JSON at " + where, {where});
  }
  if (!doc.is_object()) violation("", "expected a document object");
  const Json& version = field(doc, "", "version");
  if (!version.is_number_integer() || version.get<int>() != kDocumentVersion)
    violation("/version", "unsupported version");
  const std::string& kind = string_at(field(doc, "", "kind"), "/kind");
  const Json& body = field(doc, "", "body");
  if (kind == "groupoid") return read_groupoid(body, "/body");
  if (kind == "ztwo-groupoid") return read_ztwo(body, "/body");
  if (kind == "map") return read_map(body, "/body");
  if (kind == "square") return read_square(body, "/body");
  if (kind == "bundle-config") return read_config(body, "/body");
  violation("/kind", "unknown kind '" + kind + "'");
}

namespace {

template <class T>
T expect_kind(Document d, std::string_view want) {
  if (!std::holds_alternative<T>(d))
    violation("/kind", "expected a " + std::string(want) + " document, got " + std::string(document_kind(d)));
  return std::get<T>(std::move(d));
}

}  // namespace

ZTwoPtr deserialize_ztwo(std::string_view text) { return expect_kind<ZTwoPtr>(deserialize(text), "ztwo-groupoid"); }
EquivariantFunctor deserialize_map(std::string_view text) {
  return expect_kind<EquivariantFunctor>(deserialize(text), "map");
}
LiftingProblem deserialize_square(std::string_view text) {
  return expect_kind<LiftingProblem>(deserialize(text), "square");
}

}  // namespace zgpd
