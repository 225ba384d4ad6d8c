#pragma once

// Backtracking search for functors with prescribed values, used by functor enumeration,
// equivariant map enumeration and the lifting solver.

#include <functional>
#include <utility>
#include <vector>

#include "zgpd/error.hpp"
#include "zgpd/functor.hpp"

namespace zgpd::detail {

struct MapConstraints {
  const Groupoid* source = nullptr;
  const Groupoid* target = nullptr;

  // When set, the map must commute with these involutions.
  const std::vector<ObjectId>* source_object_involution = nullptr;
  const std::vector<MorphismId>* source_morphism_involution = nullptr;
  const std::vector<ObjectId>* target_object_involution = nullptr;
  const std::vector<MorphismId>* target_morphism_involution = nullptr;

  std::vector<std::pair<ObjectId, ObjectId>> fixed_objects;
  std::vector<std::pair<MorphismId, MorphismId>> fixed_morphisms;

  // When both are set, the map h must satisfy over ∘ h = bottom.
  const Functor* over = nullptr;
  const Functor* bottom = nullptr;
};

using MapVisitor = std::function<bool(const std::vector<ObjectId>&, const std::vector<MorphismId>&)>;

// Visits every map meeting the constraints in lexicographic order of (object images, morphism
// images) until the visitor returns false. Every search node is charged to `budget`.
void search_maps(const MapConstraints& constraints, SearchBudget& budget, const MapVisitor& visit);

}  // namespace zgpd::detail
