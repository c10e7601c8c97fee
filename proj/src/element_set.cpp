#include "ordlen/element_set.hpp"

namespace ordlen {

ElementSet ElementSet::from_vector(const std::vector<int>& xs) {
  ElementSet s;
  for (int x : xs) s.insert(x);
  return s;
}

ElementSet ElementSet::range(int first, int last) {
  ElementSet s;
  for (int x = first; x <= last; ++x) s.insert(x);
  return s;
}

std::vector<int> ElementSet::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for_each([&](int x) { out.push_back(x); });
  return out;
}

std::string ElementSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for_each([&](int x) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  });
  return s + "}";
}

std::strong_ordering ElementSet::operator<=>(const ElementSet& o) const {
  if (auto c = size() <=> o.size(); c != 0) return c;
  // same size: compare sorted lists; the first differing position decides
  std::uint64_t diff = bits_ ^ o.bits_;
  if (diff == 0) return std::strong_ordering::equal;
  std::uint64_t low = diff & (~diff + 1);
  return (bits_ & low) ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace ordlen
