#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "zgpd/tt_structure.hpp"

namespace zgpd {

// Subsets of the label pool {0, ..., N-1} as bit masks.
using LabelSet = std::uint32_t;

// A bijection between two label sets, stored as a table over the whole pool (-1 off the domain).
struct Bijection {
  LabelSet domain = 0;
  LabelSet codomain = 0;
  std::vector<int> image;

  int operator()(int a) const { return image[static_cast<std::size_t>(a)]; }
  friend bool operator==(const Bijection&, const Bijection&) = default;
};

Bijection inverse(const Bijection& f);
Bijection compose(const Bijection& g, const Bijection& f);  // g ∘ f
std::vector<int> elements(LabelSet s);
std::string set_name(LabelSet s);

// The finite-pool universe. Objects of U are triples (A, B, phi) listed by A, then B (binary order
// of the masks), then phi (lexicographic in the images of A's elements); objects of Ũ add a point
// a of A. Morphisms (rho, tau) are listed by source, target and rho.
struct UniverseBundle {
  std::size_t pool = 0;
  ZTwoPtr U;
  ZTwoPtr Utilde;
  EquivariantFunctor p;

  struct Type {
    LabelSet a = 0;
    LabelSet b = 0;
    Bijection phi;
  };
  std::vector<Type> types;              // per object of U
  std::vector<Bijection> rho;           // per morphism of U
  std::vector<Bijection> tau;
  std::vector<std::pair<ObjectId, int>> points;  // per object of Ũ: (object of U, a)

  std::optional<ObjectId> find_type(const Bijection& phi) const;
  std::optional<MorphismId> find_morphism(ObjectId source, ObjectId target, const Bijection& rho) const;
  std::optional<ObjectId> find_point(ObjectId u, int a) const;
  // The morphism of Ũ over m starting at the point a.
  std::optional<MorphismId> lift(MorphismId m, int a) const;

  std::unordered_map<std::uint64_t, ObjectId> type_index;
  std::vector<std::unordered_map<std::uint64_t, MorphismId>> morphism_index;  // per source: (target, rho)
  std::vector<std::vector<ObjectId>> point_index;  // per object of U, per label
  std::vector<std::vector<MorphismId>> lift_index; // per morphism of U, per label
};

// Throws BUDGET_EXCEEDED when U would have more than max_morphisms morphisms or the pool exceeds 8.
UniverseBundle build_universe(std::size_t pool, const SearchLimits& limits = SearchLimits::defaults());

struct UniverseMapsReport {
  bool p_fibration = false;
  bool u_fibrant = false;
  bool utilde_fibrant = false;
  // Every i' square against U -> 1 and against p is filled by the explicit diagonal
  // j(2) = (A, A, tau ∘ phi), j(psi) = (phi^-1, tau ∘ phi), respectively j(2) = (C, C, eta, chi(a)),
  // j(psi) = (sigma, chi).
  std::size_t u_fillers_checked = 0;
  std::size_t p_fillers_checked = 0;
  bool explicit_fillers = true;
  bool passed() const { return p_fibration && u_fibrant && utilde_fibrant && explicit_fillers; }
};

UniverseMapsReport check_universe_maps(const UniverseBundle& b, const SearchLimits& limits = SearchLimits::defaults());

// The explicit diagonals above, for a square given by its top map check_I -> U (resp. -> Ũ) and,
// for p, its bottom nabla -> U.
EquivariantFunctor universe_filler(const UniverseBundle& b, const EquivariantFunctor& top);
EquivariantFunctor projection_filler(const UniverseBundle& b, const EquivariantFunctor& top,
                                     const EquivariantFunctor& bottom);

struct CoveringReport {
  bool holds = true;
  std::vector<std::size_t> fiber_sizes;  // per object of the base
  std::string failure;                   // "unique-lifting" or empty
  std::optional<std::pair<ObjectId, MorphismId>> witness;  // (e, gamma) with zero or several lifts
};

CoveringReport is_covering(const EquivariantFunctor& q);

// Small coverings: 1 -> 1, S(1) -> 1, 1 ⊔ 1 -> 1 (trivial involution), check_I -> BZ2 and the
// projection S(1) × S(1) -> S(1). Every fiber has one or two objects; composites reach four.
std::vector<EquivariantFunctor> covering_corpus();

struct SmallFibrationWitness {
  EquivariantFunctor chi;         // X -> U
  EquivariantPullback pullback;   // chi*Ũ; first: to X, second: to Ũ
  EquivariantFunctor comparison;  // E -> chi*Ũ, an isomorphism over X
};

// Labels each fiber E_x by the rank of its objects. Throws NOT_A_COVERING or POOL_EXHAUSTED.
SmallFibrationWitness classify(const EquivariantFunctor& q, const UniverseBundle& b);

struct UniverseAxiomReport {
  struct Instance {
    std::string clause;  // identity, composite, pi, factorization
    std::string description;
    std::size_t max_fiber = 0;
    bool exhausted = false;  // POOL_EXHAUSTED was raised
    bool classified = false;
    bool consistent = false;  // exhausted exactly when max_fiber > pool, and all side conditions hold
  };
  std::vector<Instance> instances;
  bool passed() const;
};

// Checks the universe axioms on a corpus of coverings: identities, composites of composable pairs,
// Π of composable pairs, and over-base factorizations of maps between coverings with a common base.
UniverseAxiomReport universe_axiom_check(const UniverseBundle& b, const std::vector<EquivariantFunctor>& corpus,
                                         std::size_t maps_per_pair = 3,
                                         const SearchLimits& limits = SearchLimits::defaults());

// Over-base factorization of f: A -> B between coverings over C through A ×_B P_C B.
struct OverBaseFactorization {
  ZTwoPtr middle;
  EquivariantFunctor first;   // A -> middle
  EquivariantFunctor second;  // middle -> B
};
OverBaseFactorization factor_over_base(const EquivariantFunctor& f, const EquivariantFunctor& qb,
                                       const SearchLimits& limits = SearchLimits::defaults());

// E: objects (u, u', w) with w: u -> u' in U; morphisms pairs of U-morphisms commuting with w.
struct EquivalenceType {
  ZTwoPtr object;
  EquivariantFunctor section;    // U -> E, u -> (u, u, 1)
  EquivariantFunctor to_path;    // E -> P_1U, identity on the data
  PathObject path;               // P_1U
  bool section_matches = false;  // to_path ∘ section == delta1
  bool fiberwise_count = false;  // |Ob E| equals the number of commuting bijection pairs
};

EquivalenceType equivalence_type(const UniverseBundle& b, const SearchLimits& limits = SearchLimits::defaults());

struct UnivalenceCertificate {
  std::size_t pool = 0;
  std::size_t u_objects = 0;
  std::size_t u_morphisms = 0;
  std::size_t path_objects = 0;
  bool delta1_acyclic_cofibration = false;
  bool u_fibrant = false;
  bool path_fibrant = false;
  bool delta1_weak_equivalence = false;
  std::size_t hom_pairs_checked = 0;
  bool conclusion = false;
};

UnivalenceCertificate check_univalence(const UniverseBundle& b, const SearchLimits& limits = SearchLimits::defaults());

}  // namespace zgpd
