#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "zgpd/model_structure.hpp"

namespace zgpd {

// Pullback of a fibration g: A -> C along h: X -> C. Objects are pairs (a, x).
struct FibrationPullback {
  EquivariantPullback square;  // first: to A, second: to X
  EquivariantFunctor fibration;  // the projection to X
};

// Throws NOT_A_FIBRATION unless g is an injective fibration.
FibrationPullback pullback_fibration(const EquivariantFunctor& g, const EquivariantFunctor& h,
                                     const SearchLimits& limits = SearchLimits::defaults());

// P_C A for f: A -> C. Objects (x, y, phi) with phi: x -> y and f(phi) an identity, listed by x and
// then phi; morphisms (rho, tau) with phi' ∘ rho = tau ∘ phi.
struct PathObject {
  EquivariantFunctor f;
  ZTwoPtr total;
  EquivariantFunctor delta1;      // A -> P_C A, x -> (x, x, 1)
  EquivariantFunctor delta2;      // P_C A -> A ×_C A, (x, y, phi) -> (x, y)
  EquivariantPullback product;    // A ×_C A
  std::vector<std::pair<ObjectId, MorphismId>> triples;  // per object of total: (x, phi)
  std::vector<MorphismId> rho;    // per morphism of total
  std::vector<MorphismId> tau;

  std::optional<ObjectId> find(ObjectId x, MorphismId phi) const;
  std::optional<MorphismId> find(ObjectId source, ObjectId target, MorphismId rho) const;

  std::unordered_map<std::uint64_t, ObjectId> object_index;
  std::unordered_map<std::uint64_t, MorphismId> morphism_index;
};

PathObject path_object(const EquivariantFunctor& f, const SearchLimits& limits = SearchLimits::defaults());

struct PathObjectReport {
  bool delta1_acyclic_cofibration = false;
  bool delta2_fibration = false;
  bool composite_is_diagonal = false;  // delta2 ∘ delta1 = A -> A ×_C A
  bool equivariant = false;
  bool witness_isos = false;           // (phi^-1, 1_y): delta1(y) -> (x, y, phi) for every object
  std::optional<bool> total_fibrant;   // checked only when f is a fibration and A is fibrant
  bool ok() const {
    return delta1_acyclic_cofibration && delta2_fibration && composite_is_diagonal && equivariant && witness_isos &&
           total_fibrant.value_or(true);
  }
};

PathObjectReport check_path_object(const PathObject& p, const SearchLimits& limits = SearchLimits::defaults());

// Π_g B for fibrations g: A -> C and f: B -> A.
//
// Over c the objects are the sections s of f over the strict vertical fiber A_c. A morphism
// (c, s) -> (c', s') over gamma assigns to every theta: a -> a' with g(theta) = gamma a morphism
// mu(theta): s(a) -> s'(a') over theta, compatible with composition by vertical arrows. It is stored
// by its values on a representative theta_a per a in A_c (the least arrow out of a over gamma).
struct DependentProduct {
  EquivariantFunctor g;
  EquivariantFunctor f;
  ZTwoPtr total;
  EquivariantFunctor projection;  // total -> C

  std::vector<std::vector<ObjectId>> fibers;  // per object c of C, the objects of A_c (sorted)
  struct Section {
    ObjectId base;                    // c
    std::vector<ObjectId> objects;    // s(a), aligned with fibers[c]
    std::vector<MorphismId> vertical; // s(v) per morphism of A (unset outside A_c)
  };
  std::vector<Section> sections;      // per object of total
  std::vector<std::vector<MorphismId>> representatives;  // per morphism of total: mu(theta_a), aligned with fibers

  std::vector<std::size_t> position;  // per object of A, its index in its fiber

  // mu(theta) for the morphism m of total and any theta over its image in C.
  MorphismId evaluate(MorphismId m, MorphismId theta) const;
  // The least arrow out of a lying over gamma.
  MorphismId representative(ObjectId a, MorphismId gamma) const;

  std::unordered_map<std::uint64_t, MorphismId> representative_index;  // (a, gamma) packed
};

// Throws NOT_A_FIBRATION or BUDGET_EXCEEDED.
DependentProduct pi_along(const EquivariantFunctor& g, const EquivariantFunctor& f,
                          const SearchLimits& limits = SearchLimits::defaults());

struct AdjunctionCount {
  std::size_t maps_into_product = 0;   // |Hom_C(Y, Π_g B)|
  std::size_t maps_from_pullback = 0;  // |Hom_A(g*Y, B)|
  bool transposes_valid = true;        // each transpose is a map g*Y -> B over A
  bool transposes_distinct = true;
  bool ok() const { return maps_into_product == maps_from_pullback && transposes_valid && transposes_distinct; }
};

// Both hom sets enumerated independently; y: Y -> C.
AdjunctionCount check_pi_adjunction(const DependentProduct& pi, const EquivariantFunctor& y,
                                    const SearchLimits& limits = SearchLimits::defaults());

// Z2-groupoids with at most two objects used as test objects over a base.
std::vector<ZTwoPtr> small_test_objects();

struct TtfcCorpus {
  std::vector<ZTwoPtr> objects;                // must be fibrant
  std::vector<EquivariantFunctor> fibrations;  // extra fibrations besides the maps to 1 and identities
  std::size_t maps_per_pair = 3;               // cap on enumerated maps between two corpus objects
};

struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::size_t instances = 0;
  std::vector<std::string> witnesses;
};

struct TtfcReport {
  std::vector<AxiomCheck> checks;  // terminal, fibrations, pullbacks, dependent-products, factorization
  bool passed() const;
};

// Checks the fibration-category axioms instance by instance. Throws NOT_FIBRANT naming the first
// corpus object that is not fibrant.
TtfcReport verify_ttfc_axioms(const TtfcCorpus& corpus, const SearchLimits& limits = SearchLimits::defaults());

}  // namespace zgpd
