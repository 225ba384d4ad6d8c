#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zgpd/groupoid.hpp"

namespace zgpd {

// A strict functor between finite groupoids, stored as total object and morphism tables.
struct Functor {
  GroupoidPtr source;
  GroupoidPtr target;
  std::vector<ObjectId> objects;
  std::vector<MorphismId> morphisms;

  ObjectId operator()(ObjectId x) const { return objects[x.index()]; }
  MorphismId operator()(MorphismId m) const { return morphisms[m.index()]; }
};

// Pointer identity or structural equality.
bool same_groupoid(const GroupoidPtr& a, const GroupoidPtr& b);

// Componentwise equality of tables over the same source and target.
bool operator==(const Functor& f, const Functor& g);

// Returns a description of the first violated functor law, or nothing when `f` is a functor.
std::optional<std::string> check_functor(const Functor& f, std::vector<std::string>* witnesses = nullptr);

// Builds a functor, throwing NOT_A_FUNCTOR with witnesses when the tables are not functorial.
Functor make_functor(GroupoidPtr source, GroupoidPtr target, std::vector<ObjectId> objects,
                     std::vector<MorphismId> morphisms);

Functor identity_functor(const GroupoidPtr& g);
// g ∘ f; throws INCOMPATIBLE unless target(f) is source(g).
Functor compose(const Functor& g, const Functor& f);
// The unique functor to the terminal groupoid.
Functor to_terminal(const GroupoidPtr& g);
// Constant functor at an object (its identity on every morphism).
Functor constant_functor(const GroupoidPtr& source, const GroupoidPtr& target, ObjectId at);

bool is_injective_on_objects(const Functor& f);

struct EquivalenceReport {
  bool holds = false;
  // For every target object y, a source object a with an iso f(a) -> y (when essentially surjective).
  std::vector<std::pair<ObjectId, MorphismId>> preimages;
  std::size_t hom_pairs_checked = 0;
  // On failure: "faithful", "full" or "essentially-surjective", plus the offending objects.
  std::string failure;
  std::optional<std::pair<ObjectId, ObjectId>> failing_pair;  // source objects
  std::optional<ObjectId> failing_target;                     // target object
};

// Full, faithful and essentially surjective, checked hom set by hom set.
EquivalenceReport is_equivalence(const Functor& f);

struct IsofibrationReport {
  bool holds = true;
  std::optional<std::pair<ObjectId, MorphismId>> witness;  // unliftable (a, psi: f(a) -> y)
};

IsofibrationReport is_isofibration(const Functor& f);
// The least morphism out of `a` mapping to `psi`, if any.
std::optional<MorphismId> lift_isomorphism(const Functor& f, ObjectId a, MorphismId psi);

// Strict pullback of f: A -> C and g: B -> C. Objects are the pairs (a, b) with f(a) = g(b) in
// (a, b) order; morphisms are the pairs (phi, psi) with f(phi) = g(psi), listed by source object
// and then by phi and psi.
struct Pullback {
  GroupoidPtr object;
  Functor first;   // to A
  Functor second;  // to B
  // Index of the pair (a, b), if it is an object of the pullback.
  std::optional<ObjectId> find_pair(ObjectId a, ObjectId b) const;
  std::optional<MorphismId> find_pair(MorphismId phi, MorphismId psi) const;

  std::vector<std::pair<ObjectId, ObjectId>> object_pairs;
  std::vector<std::pair<MorphismId, MorphismId>> morphism_pairs;
  std::unordered_map<std::uint64_t, ObjectId> object_index;
  std::unordered_map<std::uint64_t, MorphismId> morphism_index;
};

Pullback pullback(const Functor& f, const Functor& g);
Pullback product(const GroupoidPtr& a, const GroupoidPtr& b);

// Every functor a -> b, in lexicographic order of (object images, morphism images).
std::vector<Functor> enumerate_functors(const GroupoidPtr& a, const GroupoidPtr& b,
                                        const SearchLimits& limits = SearchLimits::defaults());

}  // namespace zgpd
