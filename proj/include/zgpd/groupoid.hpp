#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "zgpd/error.hpp"
#include "zgpd/ids.hpp"

namespace zgpd {

// Unvalidated groupoid tables, keyed by identifier strings. This is the interchange form.
struct RawGroupoid {
  struct Arrow {
    std::string name;
    std::string source;
    std::string target;
  };
  // (second, first, result): result = second ∘ first.
  struct Composite {
    std::string second;
    std::string first;
    std::string result;
  };

  std::vector<std::string> objects;
  std::vector<Arrow> morphisms;
  std::vector<std::pair<std::string, std::string>> identities;  // object -> morphism
  std::vector<std::pair<std::string, std::string>> inverses;    // morphism -> morphism
  std::vector<Composite> composition;
};

// Outcome of checking raw tables. On failure names the first violated axiom and its witnesses.
struct ValidationReport {
  bool valid = true;
  ErrorCode code = ErrorCode::Malformed;
  std::string message;
  std::vector<std::string> witnesses;
};

class Groupoid;
using GroupoidPtr = std::shared_ptr<const Groupoid>;

// A finite groupoid with every morphism explicit.
//
// Composition is held in component normal form: every connected component has a base object b,
// each object x a transport t_x: b -> x, and every morphism m: x -> y is t_y ∘ a ∘ t_x⁻¹ for a
// unique a in Aut(b). Hom sets are stored as contiguous blocks ordered by that group element, so
// composition, hom lookup and inversion are all table lookups.
class Groupoid {
 public:
  std::size_t object_count() const { return object_names_.size(); }
  std::size_t morphism_count() const { return morphism_names_.size(); }
  IdRange<ObjectId> objects() const { return IdRange<ObjectId>(object_count()); }
  IdRange<MorphismId> morphisms() const { return IdRange<MorphismId>(morphism_count()); }

  const std::string& object_name(ObjectId x) const { return object_names_[x.index()]; }
  const std::string& morphism_name(MorphismId m) const { return morphism_names_[m.index()]; }
  std::optional<ObjectId> find_object(std::string_view name) const;
  std::optional<MorphismId> find_morphism(std::string_view name) const;

  ObjectId source(MorphismId m) const { return source_[m.index()]; }
  ObjectId target(MorphismId m) const { return target_[m.index()]; }
  MorphismId identity(ObjectId x) const { return identity_[x.index()]; }
  MorphismId inverse(MorphismId m) const { return inverse_[m.index()]; }
  bool is_identity(MorphismId m) const { return identity_[source_[m.index()].index()] == m; }

  // g ∘ f; requires target(f) == source(g).
  MorphismId compose(MorphismId g, MorphismId f) const;
  std::optional<MorphismId> try_compose(MorphismId g, MorphismId f) const;

  // Morphisms x -> y, ordered by automorphism-group element; empty across components.
  std::span<const MorphismId> hom(ObjectId x, ObjectId y) const;

  std::size_t component_count() const { return components_.size(); }
  std::size_t component_of(ObjectId x) const { return object_component_[x.index()]; }
  std::span<const ObjectId> component_objects(std::size_t c) const { return components_[c].objects; }
  std::size_t automorphism_order(std::size_t c) const { return components_[c].group_order; }
  bool connected(ObjectId x, ObjectId y) const { return component_of(x) == component_of(y); }

  // Normal-form data. The base of a component is its least object; transport(x) is the morphism
  // base -> x of identity element, and every m: x -> y equals transport(y) ∘ g ∘ transport(x)⁻¹
  // for the automorphism g of the base with element(g) == element(m).
  ObjectId component_base(std::size_t c) const { return components_[c].objects.front(); }
  std::uint32_t element(MorphismId m) const { return morphism_element_[m.index()]; }
  MorphismId transport(ObjectId x) const;
  MorphismId automorphism(std::size_t c, std::uint32_t e) const;

  // Number of composable pairs (g, f).
  std::size_t composable_pair_count() const;
  // Calls fn(g, f, g∘f) for every composable pair.
  void for_each_composable(const std::function<void(MorphismId, MorphismId, MorphismId)>& fn) const;

  // Explicit tables including the full composition table.
  RawGroupoid raw() const;

  // Same names, incidences and composition.
  friend bool operator==(const Groupoid& a, const Groupoid& b);

 private:
  friend class GroupoidBuilder;

  struct Component {
    std::vector<ObjectId> objects;         // sorted
    std::size_t group_order = 0;           // |Aut(base)|
    std::vector<std::uint32_t> mult;       // mult[a * G + b] = a ∘ b
    std::vector<std::uint32_t> group_inverse;
    std::vector<MorphismId> blocks;        // [(lx * n + ly) * G + a]
  };

  std::vector<std::string> object_names_;
  std::vector<std::string> morphism_names_;
  std::vector<ObjectId> source_;
  std::vector<ObjectId> target_;
  std::vector<MorphismId> identity_;
  std::vector<MorphismId> inverse_;

  std::vector<std::uint32_t> object_component_;
  std::vector<std::uint32_t> object_local_;
  std::vector<std::uint32_t> morphism_element_;
  std::vector<Component> components_;

  std::unordered_map<std::string, ObjectId> object_lookup_;
  std::unordered_map<std::string, MorphismId> morphism_lookup_;
};

// Assembles a groupoid from incidences and a composition rule. Used by every construction in the
// library; the rule is consulted O(|Mor| + sum |Aut|^2) times to derive the normal form.
class GroupoidBuilder {
 public:
  using ComposeRule = std::function<MorphismId(MorphismId second, MorphismId first)>;

  GroupoidBuilder() = default;
  void reserve(std::size_t objects, std::size_t morphisms);

  ObjectId add_object(std::string name);
  MorphismId add_morphism(std::string name, ObjectId source, ObjectId target);
  void set_identity(ObjectId x, MorphismId m);
  void set_inverse(MorphismId m, MorphismId inv);

  std::size_t object_count() const { return object_names_.size(); }
  std::size_t morphism_count() const { return morphism_names_.size(); }
  ObjectId source(MorphismId m) const { return source_[m.index()]; }
  ObjectId target(MorphismId m) const { return target_[m.index()]; }

  // Finalises the groupoid. When the number of composable pairs is at most `cross_check_limit`,
  // the rule is compared against the derived normal form on every composable pair.
  GroupoidPtr build(const ComposeRule& compose, std::size_t cross_check_limit = 20000) &&;

 private:
  std::vector<std::string> object_names_;
  std::vector<std::string> morphism_names_;
  std::vector<ObjectId> source_;
  std::vector<ObjectId> target_;
  std::vector<std::optional<MorphismId>> identity_;
  std::vector<std::optional<MorphismId>> inverse_;
};

// Checks every groupoid axiom on raw tables (exhaustively) without throwing.
ValidationReport check_groupoid(const RawGroupoid& raw);

// Validates raw tables; throws Error with MALFORMED, NOT_A_CATEGORY or NOT_A_GROUPOID.
GroupoidPtr validate_groupoid(const RawGroupoid& raw);

// Small standard groupoids.
GroupoidPtr terminal_groupoid();
GroupoidPtr empty_groupoid();
GroupoidPtr interval_groupoid();  // objects 0, 1; one iso phi: 0 -> 1

// Discrete groupoid on the given object names.
GroupoidPtr discrete_groupoid(const std::vector<std::string>& names);

// One-object groupoid whose automorphism group is Z/n (generator "g", elements g^k).
GroupoidPtr cyclic_group_groupoid(std::size_t n);

// Disjoint union; objects and morphisms of `a` come first. Names are prefixed "0:" and "1:".
GroupoidPtr coproduct(const Groupoid& a, const Groupoid& b);

}  // namespace zgpd
