#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>

namespace zgpd {

// Strong index type. Objects and morphisms of a groupoid are numbered densely from zero.
template <class Tag>
struct Id {
  std::uint32_t value = 0;

  constexpr Id() = default;
  constexpr explicit Id(std::uint32_t v) : value(v) {}

  constexpr std::size_t index() const { return value; }

  friend constexpr auto operator<=>(const Id&, const Id&) = default;
};

using ObjectId = Id<struct ObjectTag>;
using MorphismId = Id<struct MorphismTag>;

template <class IdT>
constexpr IdT id_at(std::size_t i) {
  return IdT(static_cast<std::uint32_t>(i));
}

// Half-open range [0, n) of ids, usable in range-for.
template <class IdT>
class IdRange {
 public:
  class iterator {
   public:
    using value_type = IdT;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::forward_iterator_tag;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint32_t v) : v_(v) {}
    constexpr IdT operator*() const { return IdT(v_); }
    constexpr iterator& operator++() {
      ++v_;
      return *this;
    }
    constexpr iterator operator++(int) {
      auto copy = *this;
      ++v_;
      return copy;
    }
    friend constexpr bool operator==(const iterator&, const iterator&) = default;

   private:
    std::uint32_t v_ = 0;
  };

  constexpr explicit IdRange(std::size_t n) : n_(static_cast<std::uint32_t>(n)) {}
  constexpr iterator begin() const { return iterator(0); }
  constexpr iterator end() const { return iterator(n_); }
  constexpr std::size_t size() const { return n_; }

 private:
  std::uint32_t n_;
};

}  // namespace zgpd

template <class Tag>
struct std::hash<zgpd::Id<Tag>> {
  std::size_t operator()(const zgpd::Id<Tag>& id) const noexcept { return std::hash<std::uint32_t>{}(id.value); }
};
