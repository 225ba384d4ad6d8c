#include "zgpd/equivariant.hpp"

#include <algorithm>
#include <string>

#include "internal.hpp"
#include "search.hpp"

namespace zgpd {

namespace {

// Groupoid with exactly one morphism between any two objects. Morphisms are added in the given
// (source, target) order with the given names.
GroupoidPtr codiscrete(const std::vector<std::string>& objects,
                       const std::vector<std::tuple<std::size_t, std::size_t, std::string>>& arrows) {
  const std::size_t n = objects.size();
  GroupoidBuilder b;
  for (const auto& o : objects) b.add_object(o);
  std::vector<MorphismId> table(n * n);
  for (const auto& [s, t, name] : arrows) table[s * n + t] = b.add_morphism(name, id_at<ObjectId>(s), id_at<ObjectId>(t));
  for (std::size_t x = 0; x < n; ++x) b.set_identity(id_at<ObjectId>(x), table[x * n + x]);
  for (const auto& [s, t, name] : arrows) b.set_inverse(table[s * n + t], table[t * n + s]);
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (const auto& [s, t, name] : arrows) ends.emplace_back(s, t);
  return std::move(b).build([table, ends, n](MorphismId g, MorphismId f) {
    return table[ends[f.index()].first * n + ends[g.index()].second];
  });
}

}  // namespace

ZTwoPtr detail::unchecked_ztwo(GroupoidPtr g, std::vector<ObjectId> objects, std::vector<MorphismId> morphisms) {
  return std::make_shared<const ZTwoGroupoid>(ZTwoGroupoid{std::move(g), std::move(objects), std::move(morphisms)});
}

using detail::unchecked_ztwo;

bool same_ztwo(const ZTwoPtr& a, const ZTwoPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->object_involution == b->object_involution && a->morphism_involution == b->morphism_involution &&
         same_groupoid(a->carrier, b->carrier);
}

bool operator==(const EquivariantFunctor& f, const EquivariantFunctor& g) {
  return f.map.objects == g.map.objects && f.map.morphisms == g.map.morphisms && same_ztwo(f.source, g.source) &&
         same_ztwo(f.target, g.target);
}

ZTwoPtr make_ztwo(GroupoidPtr g, const Functor& a) {
  std::vector<std::string> witnesses;
  if (auto problem = check_functor(a, &witnesses)) throw Error(ErrorCode::NotAFunctor, *problem, witnesses);
  if (!same_groupoid(a.source, g) || !same_groupoid(a.target, g))
    throw Error(ErrorCode::Incompatible, "involution is not an endofunctor of the carrier");
  for (ObjectId x : g->objects())
    if (a(a(x)) != x) throw Error(ErrorCode::NotInvolutive, "alpha(alpha(x)) != x", {g->object_name(x)});
  for (MorphismId m : g->morphisms())
    if (a(a(m)) != m) throw Error(ErrorCode::NotInvolutive, "alpha(alpha(m)) != m", {g->morphism_name(m)});
  return unchecked_ztwo(std::move(g), a.objects, a.morphisms);
}

ZTwoPtr make_ztwo(GroupoidPtr g, std::vector<ObjectId> objects, std::vector<MorphismId> morphisms) {
  Functor a{g, g, std::move(objects), std::move(morphisms)};
  return make_ztwo(std::move(g), a);
}

ZTwoPtr trivial_ztwo(GroupoidPtr g) {
  auto id = identity_functor(g);
  return unchecked_ztwo(std::move(g), std::move(id.objects), std::move(id.morphisms));
}

std::optional<std::string> check_equivariant(const EquivariantFunctor& f, std::vector<std::string>* witnesses) {
  if (auto problem = check_functor(f.map, witnesses)) return problem;
  if (!same_groupoid(f.map.source, f.source->carrier) || !same_groupoid(f.map.target, f.target->carrier))
    return std::string("map does not run between the carriers");
  const ZTwoGroupoid& a = *f.source;
  const ZTwoGroupoid& b = *f.target;
  for (ObjectId x : a.g().objects()) {
    if (f(a.alpha(x)) != b.alpha(f(x))) {
      if (witnesses) *witnesses = {a.g().object_name(x)};
      return std::string("map does not commute with the involutions on an object");
    }
  }
  for (MorphismId m : a.g().morphisms()) {
    if (f(a.alpha(m)) != b.alpha(f(m))) {
      if (witnesses) *witnesses = {a.g().morphism_name(m)};
      return std::string("map does not commute with the involutions on a morphism");
    }
  }
  return std::nullopt;
}

EquivariantFunctor make_equivariant(ZTwoPtr source, ZTwoPtr target, Functor map) {
  EquivariantFunctor f{std::move(source), std::move(target), std::move(map)};
  std::vector<std::string> witnesses;
  if (auto problem = check_functor(f.map, &witnesses)) throw Error(ErrorCode::NotAFunctor, *problem, witnesses);
  if (auto problem = check_equivariant(f, &witnesses)) throw Error(ErrorCode::NotEquivariant, *problem, witnesses);
  return f;
}

EquivariantFunctor make_equivariant(ZTwoPtr source, ZTwoPtr target, std::vector<ObjectId> objects,
                                    std::vector<MorphismId> morphisms) {
  Functor map{source->carrier, target->carrier, std::move(objects), std::move(morphisms)};
  return make_equivariant(std::move(source), std::move(target), std::move(map));
}

EquivariantFunctor identity_map(const ZTwoPtr& a) { return EquivariantFunctor{a, a, identity_functor(a->carrier)}; }

EquivariantFunctor compose(const EquivariantFunctor& g, const EquivariantFunctor& f) {
  if (!same_ztwo(f.target, g.source)) throw Error(ErrorCode::Incompatible, "equivariant maps are not composable");
  return EquivariantFunctor{f.source, g.target, compose(g.map, f.map)};
}

ZTwoPtr one() {
  static const ZTwoPtr value = trivial_ztwo(terminal_groupoid());
  return value;
}

ZTwoPtr check_I() {
  static const ZTwoPtr value = [] {
    GroupoidPtr interval = interval_groupoid();
    // Morphisms: id0, phi, phi^-1, id1.
    return unchecked_ztwo(interval, {ObjectId(1), ObjectId(0)},
                          {MorphismId(3), MorphismId(2), MorphismId(1), MorphismId(0)});
  }();
  return value;
}

ZTwoPtr nabla() {
  static const ZTwoPtr value = [] {
    // The morphisms of check_I come first so that i' is a prefix inclusion.
    GroupoidPtr g = codiscrete({"0", "1", "2"}, {{0, 0, "id0"},
                                                 {0, 1, "phi"},
                                                 {1, 0, "phi^-1"},
                                                 {1, 1, "id1"},
                                                 {0, 2, "psi.phi"},
                                                 {1, 2, "psi"},
                                                 {2, 0, "phi^-1.psi^-1"},
                                                 {2, 1, "psi^-1"},
                                                 {2, 2, "id2"}});
    const std::vector<ObjectId> objects = {ObjectId(1), ObjectId(0), ObjectId(2)};
    std::vector<MorphismId> morphisms;
    for (MorphismId m : g->morphisms())
      morphisms.push_back(g->hom(objects[g->source(m).index()], objects[g->target(m).index()]).front());
    return unchecked_ztwo(g, objects, morphisms);
  }();
  return value;
}

ZTwoPtr free_S(const GroupoidPtr& g) {
  GroupoidPtr carrier = coproduct(*g, *g);
  const std::size_t n = g->object_count();
  const std::size_t m = g->morphism_count();
  std::vector<ObjectId> objects(2 * n);
  std::vector<MorphismId> morphisms(2 * m);
  for (std::size_t i = 0; i < n; ++i) {
    objects[i] = id_at<ObjectId>(i + n);
    objects[i + n] = id_at<ObjectId>(i);
  }
  for (std::size_t i = 0; i < m; ++i) {
    morphisms[i] = id_at<MorphismId>(i + m);
    morphisms[i + m] = id_at<MorphismId>(i);
  }
  return unchecked_ztwo(carrier, std::move(objects), std::move(morphisms));
}

EquivariantFunctor free_S_map(const Functor& f) {
  // Reuse the standard instances so that S(i) runs between s_one() and s_I().
  auto free = [](const GroupoidPtr& g) {
    if (g == terminal_groupoid()) return s_one();
    if (g == interval_groupoid()) return s_I();
    return free_S(g);
  };
  ZTwoPtr s = free(f.source);
  ZTwoPtr t = free(f.target);
  const std::size_t n = f.target->object_count();
  const std::size_t m = f.target->morphism_count();
  Functor map{s->carrier, t->carrier, {}, {}};
  for (std::size_t copy = 0; copy < 2; ++copy)
    for (ObjectId x : f.objects) map.objects.push_back(id_at<ObjectId>(x.index() + copy * n));
  for (std::size_t copy = 0; copy < 2; ++copy)
    for (MorphismId k : f.morphisms) map.morphisms.push_back(id_at<MorphismId>(k.index() + copy * m));
  return EquivariantFunctor{s, t, std::move(map)};
}

ZTwoPtr s_one() {
  static const ZTwoPtr value = free_S(terminal_groupoid());
  return value;
}

ZTwoPtr s_I() {
  static const ZTwoPtr value = free_S(interval_groupoid());
  return value;
}

EquivariantFunctor gen_i() {
  static const EquivariantFunctor value = [] {
    static const ZTwoPtr interval = trivial_ztwo(interval_groupoid());
    return EquivariantFunctor{one(), interval, Functor{terminal_groupoid(), interval_groupoid(), {ObjectId(0)}, {MorphismId(0)}}};
  }();
  return value;
}

EquivariantFunctor i_prime() {
  static const EquivariantFunctor value = [] {
    Functor map{check_I()->carrier, nabla()->carrier, {ObjectId(0), ObjectId(1)},
                {MorphismId(0), MorphismId(1), MorphismId(2), MorphismId(3)}};
    return EquivariantFunctor{check_I(), nabla(), std::move(map)};
  }();
  return value;
}

EquivariantFunctor s_i() {
  static const EquivariantFunctor value = free_S_map(gen_i().map);
  return value;
}

EquivariantFunctor to_one(const ZTwoPtr& a) { return EquivariantFunctor{a, one(), to_terminal(a->carrier)}; }

std::variant<ZTwoPtr, EquivariantFunctor> standard(std::string_view name) {
  if (name == "one") return one();
  if (name == "check_I") return check_I();
  if (name == "nabla") return nabla();
  if (name == "s_one") return s_one();
  if (name == "s_I") return s_I();
  if (name == "i") return gen_i();
  if (name == "i_prime") return i_prime();
  if (name == "s_i") return s_i();
  throw Error(ErrorCode::UnknownName, "unknown standard object or map", {std::string(name)});
}

Functor restrict_first_copy(const EquivariantFunctor& f, const GroupoidPtr& g) {
  Functor out{g, f.target->carrier, {}, {}};
  for (ObjectId x : g->objects()) out.objects.push_back(f(x));
  for (MorphismId m : g->morphisms()) out.morphisms.push_back(f(m));
  return out;
}

EquivariantFunctor extend_from_first_copy(const Functor& f, const ZTwoPtr& target) {
  ZTwoPtr s = free_S(f.source);
  Functor map{s->carrier, target->carrier, f.objects, f.morphisms};
  for (ObjectId y : f.objects) map.objects.push_back(target->alpha(y));
  for (MorphismId k : f.morphisms) map.morphisms.push_back(target->alpha(k));
  return EquivariantFunctor{s, target, std::move(map)};
}

std::vector<ObjectId> fixed_points(const ZTwoGroupoid& a) {
  std::vector<ObjectId> out;
  for (ObjectId x : a.g().objects())
    if (a.alpha(x) == x) out.push_back(x);
  return out;
}

std::vector<Orbit> orbits(const ZTwoGroupoid& a, const std::vector<ObjectId>& subset) {
  std::vector<char> in(a.g().object_count(), 0);
  for (ObjectId x : subset) {
    if (x.index() >= in.size()) throw Error(ErrorCode::Malformed, "object out of range");
    in[x.index()] = 1;
  }
  for (ObjectId x : subset)
    if (!in[a.alpha(x).index()])
      throw Error(ErrorCode::NotClosed, "subset is not stable under the involution", {a.g().object_name(x)});
  std::vector<Orbit> out;
  for (ObjectId x : a.g().objects()) {
    if (!in[x.index()]) continue;
    const ObjectId y = a.alpha(x);
    if (y < x) continue;
    Orbit o{x, {x}};
    if (y != x) o.elements.push_back(y);
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<EquivariantFunctor> enumerate_equivariant_maps(const ZTwoPtr& x, const ZTwoPtr& a,
                                                           const SearchLimits& limits) {
  std::vector<EquivariantFunctor> out;
  detail::MapConstraints c;
  c.source = x->carrier.get();
  c.target = a->carrier.get();
  c.source_object_involution = &x->object_involution;
  c.source_morphism_involution = &x->morphism_involution;
  c.target_object_involution = &a->object_involution;
  c.target_morphism_involution = &a->morphism_involution;
  SearchBudget budget(limits.max_nodes);
  detail::search_maps(c, budget, [&](const std::vector<ObjectId>& objects, const std::vector<MorphismId>& morphisms) {
    out.push_back(EquivariantFunctor{x, a, Functor{x->carrier, a->carrier, objects, morphisms}});
    return true;
  });
  return out;
}

EquivariantPullback pullback(const EquivariantFunctor& f, const EquivariantFunctor& g) {
  if (!same_ztwo(f.target, g.target)) throw Error(ErrorCode::Incompatible, "pullback of maps with different codomains");
  EquivariantPullback out;
  out.tables = pullback(f.map, g.map);
  const auto& t = out.tables;
  const ZTwoGroupoid& a = *f.source;
  const ZTwoGroupoid& b = *g.source;
  std::vector<ObjectId> objects;
  std::vector<MorphismId> morphisms;
  objects.reserve(t.object_pairs.size());
  morphisms.reserve(t.morphism_pairs.size());
  for (auto [x, y] : t.object_pairs) objects.push_back(*t.find_pair(a.alpha(x), b.alpha(y)));
  for (auto [m, n] : t.morphism_pairs) morphisms.push_back(*t.find_pair(a.alpha(m), b.alpha(n)));
  out.object = unchecked_ztwo(t.object, std::move(objects), std::move(morphisms));
  out.first = EquivariantFunctor{out.object, f.source, t.first};
  out.second = EquivariantFunctor{out.object, g.source, t.second};
  return out;
}

EquivariantPullback product(const ZTwoPtr& a, const ZTwoPtr& b) { return pullback(to_one(a), to_one(b)); }

ZTwoPtr coproduct(const ZTwoPtr& a, const ZTwoPtr& b) {
  GroupoidPtr carrier = coproduct(*a->carrier, *b->carrier);
  const std::size_t n = a->g().object_count();
  const std::size_t m = a->g().morphism_count();
  std::vector<ObjectId> objects = a->object_involution;
  std::vector<MorphismId> morphisms = a->morphism_involution;
  for (ObjectId y : b->object_involution) objects.push_back(id_at<ObjectId>(y.index() + n));
  for (MorphismId k : b->morphism_involution) morphisms.push_back(id_at<MorphismId>(k.index() + m));
  return unchecked_ztwo(carrier, std::move(objects), std::move(morphisms));
}

Relabeled relabel(const ZTwoPtr& a, const std::vector<std::size_t>& object_order,
                  const std::vector<std::size_t>& morphism_order) {
  const Groupoid& g = a->g();
  if (object_order.size() != g.object_count() || morphism_order.size() != g.morphism_count())
    throw Error(ErrorCode::Incompatible, "relabeling has the wrong size");
  std::vector<ObjectId> new_object(g.object_count());
  std::vector<MorphismId> new_morphism(g.morphism_count());
  for (std::size_t i = 0; i < object_order.size(); ++i) new_object[object_order[i]] = id_at<ObjectId>(i);
  for (std::size_t i = 0; i < morphism_order.size(); ++i) new_morphism[morphism_order[i]] = id_at<MorphismId>(i);
  GroupoidBuilder b;
  for (std::size_t i : object_order) b.add_object(g.object_name(id_at<ObjectId>(i)));
  for (std::size_t i : morphism_order) {
    const MorphismId m = id_at<MorphismId>(i);
    b.add_morphism(g.morphism_name(m), new_object[g.source(m).index()], new_object[g.target(m).index()]);
  }
  for (ObjectId x : g.objects()) b.set_identity(new_object[x.index()], new_morphism[g.identity(x).index()]);
  for (MorphismId m : g.morphisms()) b.set_inverse(new_morphism[m.index()], new_morphism[g.inverse(m).index()]);
  GroupoidPtr carrier = std::move(b).build([&](MorphismId second, MorphismId first) {
    const MorphismId s(static_cast<std::uint32_t>(morphism_order[second.index()]));
    const MorphismId f(static_cast<std::uint32_t>(morphism_order[first.index()]));
    return new_morphism[g.compose(s, f).index()];
  });
  std::vector<ObjectId> objects(g.object_count());
  std::vector<MorphismId> morphisms(g.morphism_count());
  for (ObjectId x : g.objects()) objects[new_object[x.index()].index()] = new_object[a->alpha(x).index()];
  for (MorphismId m : g.morphisms()) morphisms[new_morphism[m.index()].index()] = new_morphism[a->alpha(m).index()];
  Relabeled out;
  out.object = unchecked_ztwo(carrier, std::move(objects), std::move(morphisms));
  out.to_copy = EquivariantFunctor{a, out.object, Functor{a->carrier, carrier, new_object, new_morphism}};
  out.from_copy = inverse_map(out.to_copy);
  return out;
}

bool is_isomorphism(const Functor& f) {
  if (f.source->object_count() != f.target->object_count()) return false;
  if (f.source->morphism_count() != f.target->morphism_count()) return false;
  if (!is_injective_on_objects(f)) return false;
  std::vector<char> seen(f.target->morphism_count(), 0);
  for (MorphismId m : f.morphisms) {
    if (seen[m.index()]) return false;
    seen[m.index()] = 1;
  }
  return true;
}

Functor inverse_functor(const Functor& f) {
  if (!is_isomorphism(f)) throw Error(ErrorCode::Incompatible, "functor is not invertible");
  Functor inv{f.target, f.source, std::vector<ObjectId>(f.objects.size()), std::vector<MorphismId>(f.morphisms.size())};
  for (ObjectId x : f.source->objects()) inv.objects[f(x).index()] = x;
  for (MorphismId m : f.source->morphisms()) inv.morphisms[f(m).index()] = m;
  return inv;
}

EquivariantFunctor inverse_map(const EquivariantFunctor& f) {
  return EquivariantFunctor{f.target, f.source, inverse_functor(f.map)};
}

}  // namespace zgpd
