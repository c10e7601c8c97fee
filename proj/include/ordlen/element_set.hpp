#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace ordlen {

inline constexpr int kMaxElements = 64;

// Subset of {1..64}.  Ordered by size first, then lexicographically on the
// sorted element list.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  ElementSet(std::initializer_list<int> xs) {
    for (int x : xs) insert(x);
  }
  static constexpr ElementSet from_bits(std::uint64_t b) {
    ElementSet s;
    s.bits_ = b;
    return s;
  }
  static ElementSet from_vector(const std::vector<int>& xs);
  static ElementSet range(int first, int last);  // {first..last}

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int x) const { return (bits_ >> (x - 1)) & 1u; }
  constexpr void insert(int x) { bits_ |= std::uint64_t{1} << (x - 1); }
  constexpr void erase(int x) { bits_ &= ~(std::uint64_t{1} << (x - 1)); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int min() const { return std::countr_zero(bits_) + 1; }
  constexpr bool subset_of(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool proper_subset_of(ElementSet o) const { return subset_of(o) && bits_ != o.bits_; }
  constexpr bool intersects(ElementSet o) const { return (bits_ & o.bits_) != 0; }

  std::vector<int> elements() const;
  std::string to_string() const;  // "{1,5}"

  constexpr ElementSet operator|(ElementSet o) const { return from_bits(bits_ | o.bits_); }
  constexpr ElementSet operator&(ElementSet o) const { return from_bits(bits_ & o.bits_); }
  constexpr ElementSet operator-(ElementSet o) const { return from_bits(bits_ & ~o.bits_); }
  constexpr ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr bool operator==(const ElementSet&) const = default;
  std::strong_ordering operator<=>(const ElementSet& o) const;

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b; b &= b - 1) f(std::countr_zero(b) + 1);
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace ordlen
