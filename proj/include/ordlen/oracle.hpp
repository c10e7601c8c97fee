#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "ordlen/order.hpp"

namespace ordlen {

// Every natural representation of an order with endpoints in {0..bound},
// in lexicographic order of (l_1, r_1, l_2, r_2, ...).
class RepresentationEnumeration {
 public:
  RepresentationEnumeration(IntervalOrder order, int bound);

  const IntervalOrder& order() const { return order_; }
  int bound() const { return bound_; }
  // bound < m-1: nothing can be emitted
  bool bound_too_small() const { return too_small_; }

  // stops early when visit returns false
  void for_each(const std::function<bool(const IntervalRepresentation&)>& visit) const;
  std::vector<IntervalRepresentation> collect() const;
  std::size_t count() const;

 private:
  IntervalOrder order_;
  int bound_;
  bool too_small_;
};

inline std::vector<IntervalRepresentation> enumerate_representations(const IntervalOrder& order, int bound) {
  return RepresentationEnumeration(order, bound).collect();
}

// sum of (rho_i + 1) plus the magnitude
int generous_bound(const IntervalOrder& order, const std::vector<int>& rho);

// Exhaustive search for a representation with these lengths and endpoints <= bound.
std::optional<IntervalRepresentation> brute_representation_with_lengths(const IntervalOrder& order,
                                                                        const std::vector<int>& rho, int bound);
inline bool brute_member(const IntervalOrder& order, const std::vector<int>& rho, int bound) {
  return brute_representation_with_lengths(order, rho, bound).has_value();
}

// Non-negative integer combination of characteristic vectors equal to v,
// keyed by the index of the basis set.
std::optional<std::map<int, int>> brute_cone_decompose(const std::vector<int>& v, const std::vector<ElementSet>& basis);

IntervalOrder random_interval_order(int n, std::uint64_t seed);
std::vector<Interval> random_intervals(int n, std::uint64_t seed);

}  // namespace ordlen
