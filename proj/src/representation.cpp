#include "ordlen/representation.hpp"

#include <algorithm>

#include "ordlen/errors.hpp"
#include "ordlen/order.hpp"

namespace ordlen {

IntervalRepresentation::IntervalRepresentation(std::vector<Interval> intervals)
    : intervals_(std::move(intervals)) {
  if (intervals_.size() > static_cast<std::size_t>(kMaxElements))
    throw InvalidInput("at most 64 elements are supported");
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    const Interval& iv = intervals_[i];
    if (iv.left < 0) throw MalformedInterval(i, "negative endpoint");
    if (iv.left > iv.right) throw MalformedInterval(i, "left endpoint exceeds right endpoint");
  }
}

std::vector<int> IntervalRepresentation::lefts() const {
  std::vector<int> out;
  for (const auto& iv : intervals_) out.push_back(iv.left);
  return out;
}

std::vector<int> IntervalRepresentation::rights() const {
  std::vector<int> out;
  for (const auto& iv : intervals_) out.push_back(iv.right);
  return out;
}

std::vector<int> IntervalRepresentation::lengths() const {
  std::vector<int> out;
  for (const auto& iv : intervals_) out.push_back(iv.length());
  return out;
}

bool IntervalRepresentation::represents(const IntervalOrder& order) const {
  if (order.size() != size()) return false;
  for (int x = 1; x <= size(); ++x)
    for (int y = 1; y <= size(); ++y)
      if (precedes(x, y) != order.precedes(x, y)) return false;
  return true;
}

std::vector<int> IntervalRepresentation::endpoints() const {
  std::vector<int> out;
  for (const auto& iv : intervals_) {
    out.push_back(iv.left);
    out.push_back(iv.right);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool IntervalRepresentation::is_left_endpoint(int v) const {
  return std::any_of(intervals_.begin(), intervals_.end(),
                     [v](const Interval& iv) { return iv.left == v; });
}

bool IntervalRepresentation::is_right_endpoint(int v) const {
  return std::any_of(intervals_.begin(), intervals_.end(),
                     [v](const Interval& iv) { return iv.right == v; });
}

}  // namespace ordlen
