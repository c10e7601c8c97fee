#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ordlen/element_set.hpp"
#include "ordlen/errors.hpp"
#include "ordlen/representation.hpp"

namespace ordlen {

using Pair = std::pair<int, int>;

// Strict interval order on {1..n}, stored as up-sets and down-sets.
class IntervalOrder {
 public:
  IntervalOrder() = default;

  // up[x-1] = {y : x < y}.  Throws NotIrreflexive / NotIntervalOrder.
  // The relation must already be transitive.
  static IntervalOrder from_up_sets(std::vector<ElementSet> up);

  int size() const { return static_cast<int>(up_.size()); }
  bool precedes(int x, int y) const { return up_[x - 1].contains(y); }
  bool comparable(int x, int y) const { return precedes(x, y) || precedes(y, x); }
  bool incomparable(int x, int y) const { return x != y && !comparable(x, y); }
  ElementSet up_set(int x) const { return up_[x - 1]; }
  ElementSet down_set(int x) const { return down_[x - 1]; }
  ElementSet elements() const { return ElementSet::range(1, size()); }
  bool is_minimal(int x) const { return down_[x - 1].empty(); }

  std::vector<Pair> relations() const;  // all pairs, lexicographic
  std::vector<Pair> cover_relations() const;

  bool operator==(const IntervalOrder&) const = default;

 private:
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
};

// Returns an induced 2+2 of a transitive relation if there is one.
std::optional<TwoPlusTwo> find_two_plus_two(const std::vector<ElementSet>& up);

// Labels 1..n; pairs are closed transitively before validation.
IntervalOrder from_relations(int n, const std::vector<Pair>& pairs);

struct IntervalInput {
  IntervalOrder order;
  IntervalRepresentation representation;
};
IntervalInput from_intervals(const std::vector<Interval>& intervals);

// Decodes an ascent sequence into intervals; element k is the k-th inserted one.
IntervalRepresentation ascent_to_intervals(const std::vector<int>& sequence);
IntervalOrder from_ascent_sequence(const std::vector<int>& sequence);
std::vector<std::vector<int>> all_ascent_sequences(int length);

struct OrderProfile {
  int size = 0;
  int magnitude = 0;
  int width = 0;
  std::vector<ElementSet> down_sets;  // distinct, increasing
  std::vector<ElementSet> up_sets;    // distinct, decreasing (empty set last)
};
OrderProfile profile(const IntervalOrder& order);

int width(const IntervalOrder& order);
ElementSet maximum_antichain(const IntervalOrder& order);

// Witness permutation: result[x-1] is the image of x.  Throws SizeMismatch.
std::optional<std::vector<int>> find_isomorphism(const IntervalOrder& p, const IntervalOrder& q);
inline bool isomorphic(const IntervalOrder& p, const IntervalOrder& q) {
  return find_isomorphism(p, q).has_value();
}

}  // namespace ordlen
