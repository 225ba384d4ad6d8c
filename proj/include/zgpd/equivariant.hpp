#pragma once

#include <memory>
#include <string_view>
#include <variant>
#include <vector>

#include "zgpd/functor.hpp"

namespace zgpd {

// A groupoid with a strict involution alpha (alpha ∘ alpha = id on objects and morphisms).
struct ZTwoGroupoid {
  GroupoidPtr carrier;
  std::vector<ObjectId> object_involution;
  std::vector<MorphismId> morphism_involution;

  ObjectId alpha(ObjectId x) const { return object_involution[x.index()]; }
  MorphismId alpha(MorphismId m) const { return morphism_involution[m.index()]; }
  const Groupoid& g() const { return *carrier; }
  Functor involution() const { return Functor{carrier, carrier, object_involution, morphism_involution}; }
};

using ZTwoPtr = std::shared_ptr<const ZTwoGroupoid>;

bool same_ztwo(const ZTwoPtr& a, const ZTwoPtr& b);

// A functor commuting strictly with the involutions.
struct EquivariantFunctor {
  ZTwoPtr source;
  ZTwoPtr target;
  Functor map;

  ObjectId operator()(ObjectId x) const { return map(x); }
  MorphismId operator()(MorphismId m) const { return map(m); }
};

bool operator==(const EquivariantFunctor& f, const EquivariantFunctor& g);

// Validates `a` as a functor g -> g with a ∘ a = id; throws NOT_A_FUNCTOR or NOT_INVOLUTIVE.
ZTwoPtr make_ztwo(GroupoidPtr g, const Functor& a);
ZTwoPtr make_ztwo(GroupoidPtr g, std::vector<ObjectId> objects, std::vector<MorphismId> morphisms);
// The identity involution.
ZTwoPtr trivial_ztwo(GroupoidPtr g);

// Validates functoriality and equivariance; throws NOT_A_FUNCTOR or NOT_EQUIVARIANT.
EquivariantFunctor make_equivariant(ZTwoPtr source, ZTwoPtr target, Functor map);
EquivariantFunctor make_equivariant(ZTwoPtr source, ZTwoPtr target, std::vector<ObjectId> objects,
                                    std::vector<MorphismId> morphisms);
std::optional<std::string> check_equivariant(const EquivariantFunctor& f, std::vector<std::string>* witnesses = nullptr);

EquivariantFunctor identity_map(const ZTwoPtr& a);
EquivariantFunctor compose(const EquivariantFunctor& g, const EquivariantFunctor& f);

// Standard objects and maps. Every call returns the same instance.
ZTwoPtr one();      // terminal groupoid, identity involution
ZTwoPtr check_I();  // objects 0, 1; involution swaps them and sends phi to phi^-1
ZTwoPtr nabla();    // check_I plus a fixed object 2 and psi: 1 -> 2 with alpha(psi) = psi ∘ phi
ZTwoPtr s_one();    // S(1)
ZTwoPtr s_I();      // S(I)
EquivariantFunctor gen_i();    // 1 -> I at object 0, both with identity involutions
EquivariantFunctor i_prime();  // check_I -> nabla, the inclusion
EquivariantFunctor s_i();      // S(1 -> I at 0)
EquivariantFunctor to_one(const ZTwoPtr& a);

// Names: one, check_I, nabla, s_one, s_I, i, i_prime, s_i. Throws UNKNOWN_NAME otherwise.
std::variant<ZTwoPtr, EquivariantFunctor> standard(std::string_view name);

// S(g) = g ⊔ g (copy 0 first, names prefixed "0:" and "1:") with the swap.
ZTwoPtr free_S(const GroupoidPtr& g);
EquivariantFunctor free_S_map(const Functor& f);
// The two sides of S ⊣ forgetful for maps S(g) -> A: restriction to copy 0, and its inverse.
Functor restrict_first_copy(const EquivariantFunctor& f, const GroupoidPtr& g);
EquivariantFunctor extend_from_first_copy(const Functor& f, const ZTwoPtr& target);

struct Orbit {
  ObjectId representative;        // least element
  std::vector<ObjectId> elements;  // sorted, one or two objects
};

std::vector<ObjectId> fixed_points(const ZTwoGroupoid& a);
// Orbits of an involution-stable subset, sorted by representative; throws NOT_CLOSED.
std::vector<Orbit> orbits(const ZTwoGroupoid& a, const std::vector<ObjectId>& subset);

// Every equivariant functor x -> a, in lexicographic order of (object images, morphism images).
std::vector<EquivariantFunctor> enumerate_equivariant_maps(const ZTwoPtr& x, const ZTwoPtr& a,
                                                           const SearchLimits& limits = SearchLimits::defaults());

// Strict pullback with the componentwise involution.
struct EquivariantPullback {
  ZTwoPtr object;
  EquivariantFunctor first;
  EquivariantFunctor second;
  Pullback tables;
};

EquivariantPullback pullback(const EquivariantFunctor& f, const EquivariantFunctor& g);
EquivariantPullback product(const ZTwoPtr& a, const ZTwoPtr& b);
// Disjoint union with the componentwise involution; names as in zgpd::coproduct.
ZTwoPtr coproduct(const ZTwoPtr& a, const ZTwoPtr& b);

// An isomorphic copy with objects and morphisms renumbered: the copy's i-th object is the
// original's object_order[i], likewise for morphisms. Names are kept.
struct Relabeled {
  ZTwoPtr object;
  EquivariantFunctor to_copy;
  EquivariantFunctor from_copy;
};

Relabeled relabel(const ZTwoPtr& a, const std::vector<std::size_t>& object_order,
                  const std::vector<std::size_t>& morphism_order);

// True when f is bijective on objects and on morphisms.
bool is_isomorphism(const Functor& f);
// Inverse of a bijective functor; throws INCOMPATIBLE otherwise.
Functor inverse_functor(const Functor& f);
EquivariantFunctor inverse_map(const EquivariantFunctor& f);

}  // namespace zgpd
