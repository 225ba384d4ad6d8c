#pragma once

// Helpers shared between translation units.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "search.hpp"
#include "zgpd/equivariant.hpp"

namespace zgpd::detail {

// Wraps tables already known to form an involution.
ZTwoPtr unchecked_ztwo(GroupoidPtr g, std::vector<ObjectId> objects, std::vector<MorphismId> morphisms);

inline std::uint64_t pack(std::uint32_t a, std::uint32_t b) { return (std::uint64_t{a} << 32) | b; }

// Hands out names not used before, appending primes on collision.
class NameSet {
 public:
  std::string fresh(std::string name) {
    while (!used_.insert(name).second) name += "'";
    return name;
  }

 private:
  std::unordered_set<std::string> used_;
};

// Morphisms out of x, by id.
inline std::vector<MorphismId> out_morphisms(const Groupoid& g, ObjectId x) {
  std::vector<MorphismId> out;
  for (ObjectId y : g.component_objects(g.component_of(x)))
    for (MorphismId m : g.hom(x, y)) out.push_back(m);
  std::sort(out.begin(), out.end());
  return out;
}

// hom(x, y) by id.
inline std::vector<MorphismId> sorted_hom(const Groupoid& g, ObjectId x, ObjectId y) {
  auto h = g.hom(x, y);
  std::vector<MorphismId> out(h.begin(), h.end());
  std::sort(out.begin(), out.end());
  return out;
}

// Constraints for equivariant maps source -> target.
inline MapConstraints equivariant_constraints(const ZTwoGroupoid& source, const ZTwoGroupoid& target) {
  MapConstraints c;
  c.source = source.carrier.get();
  c.target = target.carrier.get();
  c.source_object_involution = &source.object_involution;
  c.source_morphism_involution = &source.morphism_involution;
  c.target_object_involution = &target.object_involution;
  c.target_morphism_involution = &target.morphism_involution;
  return c;
}

// Pins h ∘ left = top.
inline void fix_along(MapConstraints& c, const EquivariantFunctor& left, const EquivariantFunctor& top) {
  for (ObjectId x : left.source->g().objects()) c.fixed_objects.emplace_back(left(x), top(x));
  for (MorphismId m : left.source->g().morphisms()) c.fixed_morphisms.emplace_back(left(m), top(m));
}

// The mapping path construction on f: A -> C. Objects (a, gamma: f(a) -> c) for the gammas passing
// `keep`, listed by a and then gamma; morphisms (rho, sigma) with sigma ∘ gamma = gamma' ∘ f(rho),
// listed by source, target and rho. With `swap` (only for f = id) the involution exchanges the two
// ends of gamma, otherwise it acts componentwise. Throws BUDGET_EXCEEDED past `max_morphisms`.
struct PathTables {
  ZTwoPtr object;
  std::vector<std::pair<ObjectId, MorphismId>> objects;  // (a, gamma)
  std::vector<MorphismId> rho;
  std::vector<MorphismId> sigma;
  std::unordered_map<std::uint64_t, ObjectId> object_index;
  std::unordered_map<std::uint64_t, MorphismId> morphism_index;
  std::size_t a_morphisms = 0;

  ObjectId find(ObjectId a, MorphismId gamma) const { return object_index.at(pack(a.value, gamma.value)); }
  MorphismId find(ObjectId p, ObjectId q, MorphismId r) const {
    return morphism_index.at((std::uint64_t{p.value} * objects.size() + q.value) * a_morphisms + r.value);
  }
};

PathTables mapping_path(const ZTwoGroupoid& A, const ZTwoGroupoid& C, const Functor& f, bool swap,
                        std::uint64_t max_morphisms, const std::function<bool(MorphismId)>& keep = {});

}  // namespace zgpd::detail
