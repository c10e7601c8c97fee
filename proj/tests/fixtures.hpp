#pragma once

#include <vector>

#include "ordlen/canonical.hpp"
#include "ordlen/order.hpp"

namespace fixtures {

using ordlen::Interval;
using ordlen::IntervalOrder;
using ordlen::Pair;

// Hasse diagrams of the worked examples
inline IntervalOrder order_a() {
  return ordlen::from_relations(7, {{1, 2}, {1, 4}, {1, 6}, {3, 2}, {4, 5}, {4, 7}, {2, 5}, {2, 7}, {6, 5}});
}
inline IntervalOrder order_b() {
  return ordlen::from_relations(7, {{1, 2}, {1, 4}, {2, 6}, {2, 7}, {4, 3}, {4, 7}, {5, 3}, {5, 7}, {6, 3}});
}
inline IntervalOrder order_c() {
  return ordlen::from_relations(
      8, {{1, 2}, {5, 3}, {5, 8}, {2, 8}, {2, 6}, {7, 3}, {6, 3}, {5, 4}, {7, 4}, {6, 4}, {2, 7}});
}
inline IntervalOrder order_d() {
  return ordlen::from_relations(7, {{3, 2}, {6, 2}, {1, 6}, {1, 7}, {3, 7}, {1, 5}, {1, 4}, {4, 2}, {5, 2}});
}

// 1 < j < n-1 for 2 <= j <= n-2, and n unrelated to everything
inline IntervalOrder bottleneck_family(int n) {
  std::vector<Pair> pairs;
  for (int j = 2; j <= n - 2; ++j) {
    pairs.push_back({1, j});
    pairs.push_back({j, n - 1});
  }
  return ordlen::from_relations(n, pairs);
}

inline IntervalOrder chain(int n) {
  std::vector<Pair> pairs;
  for (int x = 1; x < n; ++x) pairs.push_back({x, x + 1});
  return ordlen::from_relations(n, pairs);
}

inline IntervalOrder antichain(int n) { return ordlen::from_relations(n, {}); }

inline const std::vector<Interval> canon_a = {{0, 0}, {2, 2}, {0, 1}, {1, 2}, {4, 4}, {1, 3}, {3, 4}};
inline const std::vector<Interval> canon_b = {{0, 0}, {1, 1}, {4, 4}, {1, 2}, {0, 2}, {2, 3}, {3, 4}};
inline const std::vector<Interval> canon_c = {{0, 0}, {1, 1}, {4, 4}, {4, 4}, {0, 2}, {2, 3}, {2, 3}, {3, 4}};
inline const std::vector<Interval> canon_d = {{0, 0}, {3, 3}, {0, 1}, {1, 2}, {1, 2}, {1, 2}, {2, 3}};

inline const std::vector<int> ascent_a = {0, 1, 0, 1, 3, 1, 3};
inline const std::vector<int> ascent_b = {0, 1, 2, 1, 0, 2, 3};
inline const std::vector<int> ascent_c = {0, 1, 2, 2, 0, 2, 2, 3};
inline const std::vector<int> ascent_d = {0, 1, 0, 1, 1, 1, 2};

inline ordlen::IntervalRepresentation rep(const std::vector<Interval>& iv) { return ordlen::IntervalRepresentation(iv); }

inline ordlen::CanonicalRepresentation canonical_of(const IntervalOrder& p) { return ordlen::compute_canonical(p); }

}  // namespace fixtures
