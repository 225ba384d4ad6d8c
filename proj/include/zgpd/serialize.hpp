#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "zgpd/model_structure.hpp"

namespace zgpd {

// Documents are JSON objects {"version": 1, "kind": ..., "body": ...}. Identifiers are the object
// and morphism names; composition is stored as [g, f, g∘f] triples and an involution as two
// explicit maps. Serialization follows index order, so serialize ∘ deserialize is the identity
// on the bytes of every document this module writes.
inline constexpr int kDocumentVersion = 1;

struct BundleConfig {
  std::size_t pool = 0;
  friend bool operator==(const BundleConfig&, const BundleConfig&) = default;
};

using Document = std::variant<GroupoidPtr, ZTwoPtr, EquivariantFunctor, LiftingProblem, BundleConfig>;

std::string_view document_kind(const Document& d);  // groupoid, ztwo-groupoid, map, square, bundle-config

std::string serialize(const Groupoid& g);
std::string serialize(const ZTwoGroupoid& a);
std::string serialize(const EquivariantFunctor& f);
std::string serialize(const LiftingProblem& p);
std::string serialize(const BundleConfig& c);
std::string serialize(const Document& d);

// Throws SCHEMA_VIOLATION (first witness: JSON pointer of the offending field, or "line L, column C"
// for text that is not JSON), then the validation errors of the decoded value.
Document deserialize(std::string_view text);

// Convenience accessors; throw SCHEMA_VIOLATION when the document has another kind. A ztwo-groupoid
// position also accepts {"standard": name}, and a map position {"standard": name} for the
// standard maps.
ZTwoPtr deserialize_ztwo(std::string_view text);
EquivariantFunctor deserialize_map(std::string_view text);
LiftingProblem deserialize_square(std::string_view text);

}  // namespace zgpd
