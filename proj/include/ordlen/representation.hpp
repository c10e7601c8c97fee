#pragma once

#include <vector>

#include "ordlen/element_set.hpp"

namespace ordlen {

class IntervalOrder;

struct Interval {
  int left = 0;
  int right = 0;
  int length() const { return right - left; }
  bool operator==(const Interval&) const = default;
};

// Natural representation: one integral interval per element, element x at index x-1.
class IntervalRepresentation {
 public:
  IntervalRepresentation() = default;
  explicit IntervalRepresentation(std::vector<Interval> intervals);  // validates

  int size() const { return static_cast<int>(intervals_.size()); }
  const Interval& operator[](int x) const { return intervals_[x - 1]; }
  const std::vector<Interval>& intervals() const { return intervals_; }
  std::vector<int> lefts() const;
  std::vector<int> rights() const;
  std::vector<int> lengths() const;

  // order read off the intervals
  bool precedes(int x, int y) const { return (*this)[x].right < (*this)[y].left; }
  bool incomparable(int x, int y) const { return x != y && !precedes(x, y) && !precedes(y, x); }
  bool represents(const IntervalOrder& order) const;

  std::vector<int> endpoints() const;  // sorted, distinct
  bool is_left_endpoint(int v) const;
  bool is_right_endpoint(int v) const;

  bool operator==(const IntervalRepresentation&) const = default;

 private:
  std::vector<Interval> intervals_;
};

}  // namespace ordlen
