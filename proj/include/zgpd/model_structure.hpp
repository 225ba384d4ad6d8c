#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zgpd/equivariant.hpp"

namespace zgpd {

// A commuting square right ∘ top = bottom ∘ left.
struct LiftingProblem {
  EquivariantFunctor left;    // j: X -> Y
  EquivariantFunctor right;   // f: A -> B
  EquivariantFunctor top;     // X -> A
  EquivariantFunctor bottom;  // Y -> B
};

struct Filler {
  EquivariantFunctor diagonal;  // Y -> A
};

// Maps out of the generators' domains and codomains, named by where they send the generating arrows.
EquivariantFunctor interval_map(const ZTwoPtr& a, ObjectId x, MorphismId theta);  // check_I: phi -> theta
EquivariantFunctor nabla_map(const ZTwoPtr& b, MorphismId theta, MorphismId chi);  // nabla: phi, psi -> theta, chi
EquivariantFunctor point_pair_map(const ZTwoPtr& a, ObjectId y);                   // S(1): 0:* -> y
EquivariantFunctor interval_pair_map(const ZTwoPtr& b, MorphismId psi);            // S(I): 0:phi -> psi

// Throws INVALID_SQUARE when the maps do not form a commuting square.
void validate_square(const LiftingProblem& p);

// The first filler in canonical order, or nothing. Exact; throws BUDGET_EXCEEDED.
std::optional<Filler> solve_lifting(const LiftingProblem& p, const SearchLimits& limits = SearchLimits::defaults());
// Number of fillers (used by tests to cross-check completeness).
std::size_t count_fillers(const LiftingProblem& p, const SearchLimits& limits = SearchLimits::defaults());

struct FibrationReport {
  bool holds = true;
  bool isofibration = true;              // lifting against S(i)
  bool i_prime_lifting = true;           // lifting against i'
  std::size_t squares_checked = 0;       // i' squares
  std::optional<LiftingProblem> failing_square;
  std::string property = "rlp-generators";
};

// Right lifting against S(i) and i'. Throws BUDGET_EXCEEDED when the i' squares exceed the cap.
FibrationReport is_injective_fibration(const EquivariantFunctor& f,
                                       const SearchLimits& limits = SearchLimits::defaults());
bool is_fibrant(const ZTwoPtr& a, const SearchLimits& limits = SearchLimits::defaults());
bool is_projective_fibration(const EquivariantFunctor& f);

bool is_cofibration(const EquivariantFunctor& f);
bool is_weak_equivalence(const EquivariantFunctor& f);
bool is_acyclic_cofibration(const EquivariantFunctor& f);

// One pushout of a generator. The new stage has the old objects and morphisms first (same ids);
// every object u has an anchor in the old stage, and every morphism u -> v is a morphism
// anchor(u) -> anchor(v) of the old stage.
struct CellStage {
  enum class Kind { SCell, IPrimeCell };
  Kind kind = Kind::SCell;
  EquivariantFunctor attaching;  // S(1) or check_I -> previous stage
  EquivariantFunctor inclusion;  // previous stage -> this stage
  EquivariantFunctor corner;     // S(I) or nabla -> this stage
  std::vector<ObjectId> anchor;           // per object of this stage, in the previous stage
  std::vector<MorphismId> underlying;     // per morphism of this stage, in the previous stage
  std::vector<ObjectId> new_objects;      // in this stage
  std::vector<MorphismId> corner_arrows;  // per new object: generator morphism anchor -> new object
  // Orbit of the codomain being attached and the chosen iso into it.
  std::vector<ObjectId> orbit;
  MorphismId chosen_iso;
};

struct CellDecomposition {
  std::vector<ZTwoPtr> stages;  // stage 0 is the domain
  std::vector<CellStage> cells;
  std::vector<EquivariantFunctor> to_codomain;  // per stage, the comparison map into the codomain
  EquivariantFunctor composite;                 // domain -> last stage
  EquivariantFunctor matching;                  // last stage -> codomain, an isomorphism
};

const EquivariantFunctor& generator(CellStage::Kind kind);

// Decomposes an acyclic cofibration into pushouts of S(i) and i', one orbit of new objects at a
// time in orbit order. Throws NOT_ACYCLIC_COFIBRATION.
CellDecomposition cell_decompose(const EquivariantFunctor& f);

// The map out of a stage determined by a map out of the previous stage and, for every new object,
// an arrow prev(anchor) -> image. Used both for the comparison with the codomain and for lifts.
EquivariantFunctor induced_map(const CellStage& stage, const EquivariantFunctor& previous,
                               const std::vector<MorphismId>& arrows);
// Same, from a map out of the generator's codomain that agrees with `previous` on the attaching map.
EquivariantFunctor induced_map_from_corner(const CellStage& stage, const EquivariantFunctor& previous,
                                           const EquivariantFunctor& from_generator);

struct DecompositionCheck {
  bool composite_matches = false;  // matching ∘ composite == input
  bool matching_is_iso = false;
  bool squares_commute = false;
  bool pushouts_universal = false;
  bool stages_acyclic = false;
  bool ok() const {
    return composite_matches && matching_is_iso && squares_commute && pushouts_universal && stages_acyclic;
  }
};

// Verifies a decomposition of f. Pushout universality is checked by enumeration against every
// map out of the stage into each test object.
DecompositionCheck verify_decomposition(const EquivariantFunctor& f, const CellDecomposition& d,
                                        const std::vector<ZTwoPtr>& test_objects,
                                        const SearchLimits& limits = SearchLimits::defaults());

// Lifts a square whose left side has been decomposed, one generator at a time. Returns nothing
// when some generator square has no filler.
std::optional<Filler> lift_through_cells(const CellDecomposition& d, const LiftingProblem& p,
                                         const SearchLimits& limits = SearchLimits::defaults());

// Acyclic cofibrations with codomain of at most `max_objects` objects, generated by attaching
// cells to small bases in every possible way, plus relabeled copies of each.
std::vector<EquivariantFunctor> acyclic_cofibration_corpus(std::size_t max_objects = 4);

struct CharacterizationReport {
  bool generator_test = false;    // is_injective_fibration
  bool direct_test = true;        // every corpus square has a filler
  bool staged_lifts = true;       // every square was also lifted one cell at a time
  bool staged_consistent = true;  // staged lifts are fillers and never beat the direct search
  std::size_t corpus_size = 0;
  std::size_t squares = 0;
  std::optional<LiftingProblem> counterexample;
  bool agree() const {
    return generator_test == direct_test && staged_consistent && (!generator_test || staged_lifts);
  }
};

CharacterizationReport verify_generator_characterization(const EquivariantFunctor& f,
                                                         const std::vector<EquivariantFunctor>& corpus,
                                                         const SearchLimits& limits = SearchLimits::defaults());

// Every square left -> right, visited in canonical order (top first, then bottom). The visitor
// returns false to stop early.
void for_each_square(const EquivariantFunctor& left, const EquivariantFunctor& right,
                     const std::function<bool(const LiftingProblem&)>& visit,
                     const SearchLimits& limits = SearchLimits::defaults());

struct Factorization {
  ZTwoPtr middle;
  EquivariantFunctor j;  // acyclic cofibration
  EquivariantFunctor q;  // injective fibration
};

// Mapping path object factorization. Throws DOMAIN_NOT_FIBRANT unless the domain is fibrant.
Factorization factorize(const EquivariantFunctor& f, const SearchLimits& limits = SearchLimits::defaults());

// X -> [I, X]: objects are isos x0 -> x1 of X, with the involution (x0, x1, g) -> (a x1, a x0, a(g)^-1).
// The map is an acyclic cofibration and the target is fibrant.
struct FibrantReplacement {
  ZTwoPtr object;
  EquivariantFunctor inclusion;
};
FibrantReplacement fibrant_replacement(const ZTwoPtr& x);

}  // namespace zgpd
