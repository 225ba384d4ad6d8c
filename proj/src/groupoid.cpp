#include "zgpd/groupoid.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

namespace zgpd {

namespace {

std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) { return (std::uint64_t{a} << 32) | b; }

}  // namespace

std::optional<ObjectId> Groupoid::find_object(std::string_view name) const {
  auto it = object_lookup_.find(std::string(name));
  if (it == object_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<MorphismId> Groupoid::find_morphism(std::string_view name) const {
  auto it = morphism_lookup_.find(std::string(name));
  if (it == morphism_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<MorphismId> Groupoid::try_compose(MorphismId g, MorphismId f) const {
  const ObjectId x = source(f);
  const ObjectId y = target(f);
  if (source(g) != y) return std::nullopt;
  const ObjectId z = target(g);
  const auto& comp = components_[object_component_[x.index()]];
  const std::size_t n = comp.objects.size();
  const std::size_t order = comp.group_order;
  const std::uint32_t a = morphism_element_[f.index()];
  const std::uint32_t b = morphism_element_[g.index()];
  const std::size_t lx = object_local_[x.index()];
  const std::size_t lz = object_local_[z.index()];
  return comp.blocks[(lx * n + lz) * order + comp.mult[b * order + a]];
}

MorphismId Groupoid::compose(MorphismId g, MorphismId f) const {
  if (auto r = try_compose(g, f)) return *r;
  throw Error(ErrorCode::Incompatible, "morphisms are not composable",
              {morphism_name(g), morphism_name(f)});
}

std::span<const MorphismId> Groupoid::hom(ObjectId x, ObjectId y) const {
  const auto cx = object_component_[x.index()];
  if (cx != object_component_[y.index()]) return {};
  const auto& comp = components_[cx];
  const std::size_t n = comp.objects.size();
  const std::size_t offset = (object_local_[x.index()] * n + object_local_[y.index()]) * comp.group_order;
  return std::span<const MorphismId>(comp.blocks.data() + offset, comp.group_order);
}

MorphismId Groupoid::transport(ObjectId x) const {
  const auto c = component_of(x);
  const ObjectId b = component_base(c);
  return hom(b, x)[element(identity(b))];
}

MorphismId Groupoid::automorphism(std::size_t c, std::uint32_t e) const {
  const ObjectId b = component_base(c);
  return hom(b, b)[e];
}

std::size_t Groupoid::composable_pair_count() const {
  std::size_t total = 0;
  for (const auto& c : components_) {
    const std::size_t n = c.objects.size();
    total += n * n * n * c.group_order * c.group_order;
  }
  return total;
}

void Groupoid::for_each_composable(const std::function<void(MorphismId, MorphismId, MorphismId)>& fn) const {
  for (MorphismId f : morphisms()) {
    const ObjectId y = target(f);
    for (ObjectId z : component_objects(component_of(y))) {
      for (MorphismId g : hom(y, z)) fn(g, f, compose(g, f));
    }
  }
}

RawGroupoid Groupoid::raw() const {
  RawGroupoid r;
  r.objects = object_names_;
  r.morphisms.reserve(morphism_count());
  for (MorphismId m : morphisms()) {
    r.morphisms.push_back({morphism_name(m), object_name(source(m)), object_name(target(m))});
  }
  for (ObjectId x : objects()) r.identities.emplace_back(object_name(x), morphism_name(identity(x)));
  for (MorphismId m : morphisms()) r.inverses.emplace_back(morphism_name(m), morphism_name(inverse(m)));
  r.composition.reserve(composable_pair_count());
  for_each_composable([&](MorphismId g, MorphismId f, MorphismId gf) {
    r.composition.push_back({morphism_name(g), morphism_name(f), morphism_name(gf)});
  });
  return r;
}

bool operator==(const Groupoid& a, const Groupoid& b) {
  if (&a == &b) return true;
  if (a.object_names_ != b.object_names_ || a.morphism_names_ != b.morphism_names_) return false;
  if (a.source_ != b.source_ || a.target_ != b.target_) return false;
  if (a.identity_ != b.identity_ || a.inverse_ != b.inverse_) return false;
  if (a.object_component_ != b.object_component_ || a.object_local_ != b.object_local_) return false;
  if (a.morphism_element_ != b.morphism_element_) return false;
  if (a.components_.size() != b.components_.size()) return false;
  for (std::size_t i = 0; i < a.components_.size(); ++i) {
    const auto& ca = a.components_[i];
    const auto& cb = b.components_[i];
    if (ca.objects != cb.objects || ca.group_order != cb.group_order || ca.mult != cb.mult ||
        ca.blocks != cb.blocks)
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------------------------
// Builder

void GroupoidBuilder::reserve(std::size_t objects, std::size_t morphisms) {
  object_names_.reserve(objects);
  identity_.reserve(objects);
  morphism_names_.reserve(morphisms);
  source_.reserve(morphisms);
  target_.reserve(morphisms);
  inverse_.reserve(morphisms);
}

ObjectId GroupoidBuilder::add_object(std::string name) {
  object_names_.push_back(std::move(name));
  identity_.emplace_back();
  return id_at<ObjectId>(object_names_.size() - 1);
}

MorphismId GroupoidBuilder::add_morphism(std::string name, ObjectId source, ObjectId target) {
  morphism_names_.push_back(std::move(name));
  source_.push_back(source);
  target_.push_back(target);
  inverse_.emplace_back();
  return id_at<MorphismId>(morphism_names_.size() - 1);
}

void GroupoidBuilder::set_identity(ObjectId x, MorphismId m) { identity_[x.index()] = m; }
void GroupoidBuilder::set_inverse(MorphismId m, MorphismId inv) { inverse_[m.index()] = inv; }

GroupoidPtr GroupoidBuilder::build(const ComposeRule& compose, std::size_t cross_check_limit) && {
  auto g = std::shared_ptr<Groupoid>(new Groupoid());
  const std::size_t n_obj = object_names_.size();
  const std::size_t n_mor = morphism_names_.size();

  auto fail = [](const std::string& what) -> Error {
    return Error(ErrorCode::Internal, "groupoid construction: " + what);
  };

  g->identity_.resize(n_obj);
  for (std::size_t i = 0; i < n_obj; ++i) {
    if (!identity_[i]) throw fail("object '" + object_names_[i] + "' has no identity");
    g->identity_[i] = *identity_[i];
  }
  g->inverse_.resize(n_mor);
  for (std::size_t i = 0; i < n_mor; ++i) {
    if (!inverse_[i]) throw fail("morphism '" + morphism_names_[i] + "' has no inverse");
    g->inverse_[i] = *inverse_[i];
  }

  // Outgoing adjacency in CSR form.
  std::vector<std::uint32_t> out_start(n_obj + 1, 0);
  for (std::size_t m = 0; m < n_mor; ++m) ++out_start[source_[m].index() + 1];
  for (std::size_t i = 0; i < n_obj; ++i) out_start[i + 1] += out_start[i];
  std::vector<MorphismId> out(n_mor);
  {
    auto cursor = out_start;
    for (std::size_t m = 0; m < n_mor; ++m) out[cursor[source_[m].index()]++] = id_at<MorphismId>(m);
  }

  g->object_component_.assign(n_obj, UINT32_MAX);
  g->object_local_.assign(n_obj, 0);
  g->morphism_element_.assign(n_mor, UINT32_MAX);
  std::vector<MorphismId> transport(n_obj);
  std::vector<std::int64_t> aut_element(n_mor, -1);
  std::vector<ObjectId> bases;

  for (std::size_t start = 0; start < n_obj; ++start) {
    if (g->object_component_[start] != UINT32_MAX) continue;
    const auto c = static_cast<std::uint32_t>(g->components_.size());
    g->components_.emplace_back();
    auto& comp = g->components_.back();
    const ObjectId base = id_at<ObjectId>(start);
    bases.push_back(base);
    std::deque<ObjectId> queue{base};
    g->object_component_[start] = c;
    transport[start] = g->identity_[start];
    comp.objects.push_back(base);
    while (!queue.empty()) {
      const ObjectId u = queue.front();
      queue.pop_front();
      for (auto k = out_start[u.index()]; k < out_start[u.index() + 1]; ++k) {
        const MorphismId m = out[k];
        const ObjectId v = target_[m.index()];
        if (g->object_component_[v.index()] != UINT32_MAX) continue;
        g->object_component_[v.index()] = c;
        transport[v.index()] = compose(m, transport[u.index()]);
        comp.objects.push_back(v);
        queue.push_back(v);
      }
    }
    std::sort(comp.objects.begin(), comp.objects.end());
    for (std::size_t i = 0; i < comp.objects.size(); ++i)
      g->object_local_[comp.objects[i].index()] = static_cast<std::uint32_t>(i);
    std::uint32_t order = 0;
    for (auto k = out_start[base.index()]; k < out_start[base.index() + 1]; ++k) {
      const MorphismId m = out[k];
      if (target_[m.index()] == base) aut_element[m.index()] = order++;
    }
    comp.group_order = order;
    const std::size_t n = comp.objects.size();
    comp.blocks.assign(n * n * order, MorphismId(UINT32_MAX));
  }

  for (std::size_t mi = 0; mi < n_mor; ++mi) {
    const MorphismId m = id_at<MorphismId>(mi);
    const ObjectId x = source_[mi];
    const ObjectId y = target_[mi];
    const auto c = g->object_component_[x.index()];
    if (g->object_component_[y.index()] != c) throw fail("component bookkeeping");
    auto& comp = g->components_[c];
    const ObjectId base = bases[c];
    const MorphismId a = compose(g->inverse_[transport[y.index()].index()], compose(m, transport[x.index()]));
    if (source_[a.index()] != base || target_[a.index()] != base || aut_element[a.index()] < 0)
      throw fail("composition rule does not land in the base automorphism group for '" + morphism_names_[mi] + "'");
    const auto e = static_cast<std::uint32_t>(aut_element[a.index()]);
    g->morphism_element_[mi] = e;
    const std::size_t n = comp.objects.size();
    auto& slot = comp.blocks[(g->object_local_[x.index()] * n + g->object_local_[y.index()]) * comp.group_order + e];
    if (slot.value != UINT32_MAX)
      throw fail("morphisms '" + morphism_names_[slot.index()] + "' and '" + morphism_names_[mi] +
                 "' have the same normal form");
    slot = m;
  }

  for (std::size_t c = 0; c < g->components_.size(); ++c) {
    auto& comp = g->components_[c];
    for (const auto& slot : comp.blocks)
      if (slot.value == UINT32_MAX) throw fail("hom sets of a component have unequal sizes");
    const std::size_t order = comp.group_order;
    const ObjectId base = bases[c];
    auto elem = [&](std::size_t e) {
      const std::size_t lb = g->object_local_[base.index()];
      const std::size_t n = comp.objects.size();
      return comp.blocks[(lb * n + lb) * order + e];
    };
    comp.mult.resize(order * order);
    comp.group_inverse.resize(order);
    for (std::size_t a = 0; a < order; ++a) {
      for (std::size_t b = 0; b < order; ++b) {
        const MorphismId ab = compose(elem(a), elem(b));
        if (aut_element[ab.index()] < 0) throw fail("automorphism group not closed");
        comp.mult[a * order + b] = static_cast<std::uint32_t>(aut_element[ab.index()]);
      }
      comp.group_inverse[a] = static_cast<std::uint32_t>(aut_element[g->inverse_[elem(a).index()].index()]);
    }
  }

  g->object_names_ = std::move(object_names_);
  g->morphism_names_ = std::move(morphism_names_);
  g->source_ = std::move(source_);
  g->target_ = std::move(target_);

  // Identities and inverses must agree with the normal form.
  for (ObjectId x : g->objects()) {
    const MorphismId id = g->identity_[x.index()];
    if (g->source(id) != x || g->target(id) != x) throw fail("identity with wrong endpoints");
    if (g->compose(id, id) != id) throw fail("identity is not idempotent");
  }
  for (MorphismId m : g->morphisms()) {
    const MorphismId inv = g->inverse_[m.index()];
    if (g->source(inv) != g->target(m) || g->target(inv) != g->source(m) ||
        g->compose(inv, m) != g->identity(g->source(m)))
      throw fail("inverse table disagrees with composition for '" + g->morphism_name(m) + "'");
  }
  if (g->composable_pair_count() <= cross_check_limit) {
    g->for_each_composable([&](MorphismId second, MorphismId first, MorphismId result) {
      if (compose(second, first) != result)
        throw fail("composition rule is not associative on (" + g->morphism_name(second) + ", " +
                   g->morphism_name(first) + ")");
    });
  }

  g->object_lookup_.reserve(n_obj);
  for (ObjectId x : g->objects()) {
    if (!g->object_lookup_.emplace(g->object_name(x), x).second)
      throw fail("duplicate object name '" + g->object_name(x) + "'");
  }
  g->morphism_lookup_.reserve(n_mor);
  for (MorphismId m : g->morphisms()) {
    if (!g->morphism_lookup_.emplace(g->morphism_name(m), m).second)
      throw fail("duplicate morphism name '" + g->morphism_name(m) + "'");
  }
  return g;
}

// ---------------------------------------------------------------------------------------------
// Validation of raw tables

ValidationReport check_groupoid(const RawGroupoid& raw) {
  ValidationReport report;
  auto fail = [&](ErrorCode code, std::string message, std::vector<std::string> witnesses) {
    report.valid = false;
    report.code = code;
    report.message = std::move(message);
    report.witnesses = std::move(witnesses);
    return report;
  };

  std::unordered_map<std::string, std::uint32_t> obj;
  for (std::size_t i = 0; i < raw.objects.size(); ++i) {
    if (!obj.emplace(raw.objects[i], static_cast<std::uint32_t>(i)).second)
      return fail(ErrorCode::Malformed, "duplicate object id", {raw.objects[i]});
  }
  std::unordered_map<std::string, std::uint32_t> mor;
  std::vector<std::uint32_t> src(raw.morphisms.size()), tgt(raw.morphisms.size());
  for (std::size_t i = 0; i < raw.morphisms.size(); ++i) {
    const auto& a = raw.morphisms[i];
    if (!mor.emplace(a.name, static_cast<std::uint32_t>(i)).second)
      return fail(ErrorCode::Malformed, "duplicate morphism id", {a.name});
    auto s = obj.find(a.source);
    auto t = obj.find(a.target);
    if (s == obj.end()) return fail(ErrorCode::Malformed, "morphism source is not an object", {a.name, a.source});
    if (t == obj.end()) return fail(ErrorCode::Malformed, "morphism target is not an object", {a.name, a.target});
    src[i] = s->second;
    tgt[i] = t->second;
  }
  const std::size_t n_obj = raw.objects.size();
  const std::size_t n_mor = raw.morphisms.size();
  const auto& names = raw.morphisms;

  std::vector<std::int64_t> identity(n_obj, -1);
  for (const auto& [o, m] : raw.identities) {
    auto oi = obj.find(o);
    auto mi = mor.find(m);
    if (oi == obj.end()) return fail(ErrorCode::Malformed, "identity table names an unknown object", {o});
    if (mi == mor.end()) return fail(ErrorCode::Malformed, "identity table names an unknown morphism", {m});
    if (identity[oi->second] >= 0) return fail(ErrorCode::Malformed, "object has two identity entries", {o});
    identity[oi->second] = mi->second;
  }
  for (std::size_t i = 0; i < n_obj; ++i) {
    if (identity[i] < 0) return fail(ErrorCode::Malformed, "identity table is not total", {raw.objects[i]});
    const auto m = static_cast<std::size_t>(identity[i]);
    if (src[m] != i || tgt[m] != i)
      return fail(ErrorCode::NotACategory, "identity is not an endomorphism of its object",
                  {raw.objects[i], names[m].name});
  }

  std::vector<std::int64_t> inverse(n_mor, -1);
  for (const auto& [m, inv] : raw.inverses) {
    auto mi = mor.find(m);
    auto ii = mor.find(inv);
    if (mi == mor.end()) return fail(ErrorCode::Malformed, "inverse table names an unknown morphism", {m});
    if (ii == mor.end()) return fail(ErrorCode::Malformed, "inverse table names an unknown morphism", {inv});
    if (inverse[mi->second] >= 0) return fail(ErrorCode::Malformed, "morphism has two inverse entries", {m});
    inverse[mi->second] = ii->second;
  }
  for (std::size_t i = 0; i < n_mor; ++i) {
    if (inverse[i] < 0) return fail(ErrorCode::Malformed, "inverse table is not total", {names[i].name});
  }

  std::vector<std::vector<std::uint32_t>> out(n_obj);
  for (std::size_t i = 0; i < n_mor; ++i) out[src[i]].push_back(static_cast<std::uint32_t>(i));

  std::unordered_map<std::uint64_t, std::uint32_t> comp;
  comp.reserve(raw.composition.size() * 2 + 1);
  for (const auto& c : raw.composition) {
    auto gi = mor.find(c.second);
    auto fi = mor.find(c.first);
    auto ri = mor.find(c.result);
    if (gi == mor.end()) return fail(ErrorCode::Malformed, "composition names an unknown morphism", {c.second});
    if (fi == mor.end()) return fail(ErrorCode::Malformed, "composition names an unknown morphism", {c.first});
    if (ri == mor.end()) return fail(ErrorCode::Malformed, "composition names an unknown morphism", {c.result});
    const auto g = gi->second, f = fi->second, r = ri->second;
    if (tgt[f] != src[g])
      return fail(ErrorCode::Malformed, "composition entry for a non-composable pair", {c.second, c.first});
    if (src[r] != src[f] || tgt[r] != tgt[g])
      return fail(ErrorCode::NotACategory, "composite has the wrong source or target", {c.second, c.first, c.result});
    auto [it, inserted] = comp.emplace(pair_key(g, f), r);
    if (!inserted && it->second != r)
      return fail(ErrorCode::Malformed, "composition entry defined twice with different results",
                  {c.second, c.first});
  }
  for (std::size_t f = 0; f < n_mor; ++f) {
    for (auto g : out[tgt[f]]) {
      if (!comp.count(pair_key(g, static_cast<std::uint32_t>(f))))
        return fail(ErrorCode::Malformed, "composition table is not total", {names[g].name, names[f].name});
    }
  }
  auto at = [&](std::uint32_t g, std::uint32_t f) { return comp.at(pair_key(g, f)); };

  for (std::size_t fi = 0; fi < n_mor; ++fi) {
    const auto f = static_cast<std::uint32_t>(fi);
    const auto id_s = static_cast<std::uint32_t>(identity[src[f]]);
    const auto id_t = static_cast<std::uint32_t>(identity[tgt[f]]);
    if (at(id_t, f) != f) return fail(ErrorCode::NotACategory, "left unit law fails", {names[id_t].name, names[f].name});
    if (at(f, id_s) != f) return fail(ErrorCode::NotACategory, "right unit law fails", {names[f].name, names[id_s].name});
  }
  for (std::size_t fi = 0; fi < n_mor; ++fi) {
    const auto f = static_cast<std::uint32_t>(fi);
    for (auto g : out[tgt[f]]) {
      const auto gf = at(g, f);
      for (auto h : out[tgt[g]]) {
        if (at(h, gf) != at(at(h, g), f))
          return fail(ErrorCode::NotACategory, "associativity fails", {names[h].name, names[g].name, names[f].name});
      }
    }
  }
  for (std::size_t fi = 0; fi < n_mor; ++fi) {
    const auto f = static_cast<std::uint32_t>(fi);
    const auto inv = static_cast<std::uint32_t>(inverse[f]);
    if (src[inv] != tgt[f] || tgt[inv] != src[f])
      return fail(ErrorCode::NotAGroupoid, "inverse has the wrong source or target", {names[f].name, names[inv].name});
    if (at(inv, f) != static_cast<std::uint32_t>(identity[src[f]]))
      return fail(ErrorCode::NotAGroupoid, "inverse law f^-1 . f = id fails", {names[f].name, names[inv].name});
    if (at(f, inv) != static_cast<std::uint32_t>(identity[tgt[f]]))
      return fail(ErrorCode::NotAGroupoid, "inverse law f . f^-1 = id fails", {names[f].name, names[inv].name});
  }
  return report;
}

GroupoidPtr validate_groupoid(const RawGroupoid& raw) {
  const auto report = check_groupoid(raw);
  if (!report.valid) throw Error(report.code, report.message, report.witnesses);

  GroupoidBuilder b;
  b.reserve(raw.objects.size(), raw.morphisms.size());
  std::unordered_map<std::string, ObjectId> obj;
  for (const auto& o : raw.objects) obj.emplace(o, b.add_object(o));
  std::unordered_map<std::string, MorphismId> mor;
  for (const auto& a : raw.morphisms) mor.emplace(a.name, b.add_morphism(a.name, obj.at(a.source), obj.at(a.target)));
  for (const auto& [o, m] : raw.identities) b.set_identity(obj.at(o), mor.at(m));
  for (const auto& [m, inv] : raw.inverses) b.set_inverse(mor.at(m), mor.at(inv));
  std::unordered_map<std::uint64_t, MorphismId> comp;
  comp.reserve(raw.composition.size() * 2 + 1);
  for (const auto& c : raw.composition)
    comp.emplace(pair_key(mor.at(c.second).value, mor.at(c.first).value), mor.at(c.result));
  return std::move(b).build([&](MorphismId g, MorphismId f) { return comp.at(pair_key(g.value, f.value)); }, 0);
}

// ---------------------------------------------------------------------------------------------
// Standard groupoids

GroupoidPtr terminal_groupoid() {
  static const GroupoidPtr one = [] {
    GroupoidBuilder b;
    const auto x = b.add_object("*");
    const auto id = b.add_morphism("id", x, x);
    b.set_identity(x, id);
    b.set_inverse(id, id);
    return std::move(b).build([id](MorphismId, MorphismId) { return id; });
  }();
  return one;
}

GroupoidPtr empty_groupoid() {
  static const GroupoidPtr none = GroupoidBuilder().build([](MorphismId g, MorphismId) { return g; });
  return none;
}

GroupoidPtr interval_groupoid() {
  static const GroupoidPtr interval = [] {
    GroupoidBuilder b;
    const auto x0 = b.add_object("0");
    const auto x1 = b.add_object("1");
    const auto id0 = b.add_morphism("id0", x0, x0);
    const auto phi = b.add_morphism("phi", x0, x1);
    const auto phi_inv = b.add_morphism("phi^-1", x1, x0);
    const auto id1 = b.add_morphism("id1", x1, x1);
    b.set_identity(x0, id0);
    b.set_identity(x1, id1);
    b.set_inverse(id0, id0);
    b.set_inverse(id1, id1);
    b.set_inverse(phi, phi_inv);
    b.set_inverse(phi_inv, phi);
    // Hom sets are singletons, so composites are determined by endpoints.
    const MorphismId table[2][2] = {{id0, phi}, {phi_inv, id1}};
    std::vector<ObjectId> s = {x0, x0, x1, x1};
    std::vector<ObjectId> t = {x0, x1, x0, x1};
    return std::move(b).build([=](MorphismId g, MorphismId f) { return table[s[f.index()].index()][t[g.index()].index()]; });
  }();
  return interval;
}

GroupoidPtr discrete_groupoid(const std::vector<std::string>& names) {
  GroupoidBuilder b;
  for (const auto& n : names) {
    const auto x = b.add_object(n);
    const auto id = b.add_morphism("id_" + n, x, x);
    b.set_identity(x, id);
    b.set_inverse(id, id);
  }
  return std::move(b).build([](MorphismId g, MorphismId) { return g; });
}

GroupoidPtr cyclic_group_groupoid(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::Malformed, "cyclic group of order 0");
  GroupoidBuilder b;
  const auto x = b.add_object("*");
  for (std::size_t k = 0; k < n; ++k) b.add_morphism("g^" + std::to_string(k), x, x);
  b.set_identity(x, MorphismId(0));
  for (std::size_t k = 0; k < n; ++k) b.set_inverse(id_at<MorphismId>(k), id_at<MorphismId>((n - k) % n));
  return std::move(b).build([n](MorphismId g, MorphismId f) { return id_at<MorphismId>((g.index() + f.index()) % n); });
}

GroupoidPtr coproduct(const Groupoid& a, const Groupoid& b) {
  GroupoidBuilder out;
  const std::size_t na = a.object_count();
  const std::size_t ma = a.morphism_count();
  out.reserve(na + b.object_count(), ma + b.morphism_count());
  for (ObjectId x : a.objects()) out.add_object("0:" + a.object_name(x));
  for (ObjectId x : b.objects()) out.add_object("1:" + b.object_name(x));
  for (MorphismId m : a.morphisms()) out.add_morphism("0:" + a.morphism_name(m), a.source(m), a.target(m));
  for (MorphismId m : b.morphisms())
    out.add_morphism("1:" + b.morphism_name(m), id_at<ObjectId>(b.source(m).index() + na),
                     id_at<ObjectId>(b.target(m).index() + na));
  for (ObjectId x : a.objects()) out.set_identity(x, a.identity(x));
  for (ObjectId x : b.objects())
    out.set_identity(id_at<ObjectId>(x.index() + na), id_at<MorphismId>(b.identity(x).index() + ma));
  for (MorphismId m : a.morphisms()) out.set_inverse(m, a.inverse(m));
  for (MorphismId m : b.morphisms())
    out.set_inverse(id_at<MorphismId>(m.index() + ma), id_at<MorphismId>(b.inverse(m).index() + ma));
  return std::move(out).build([&a, &b, ma](MorphismId g, MorphismId f) {
    if (f.index() < ma) return a.compose(g, f);
    return id_at<MorphismId>(b.compose(id_at<MorphismId>(g.index() - ma), id_at<MorphismId>(f.index() - ma)).index() + ma);
  });
}

}  // namespace zgpd
