#include "ordlen/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "ordlen/errors.hpp"

namespace ordlen {

RepresentationEnumeration::RepresentationEnumeration(IntervalOrder order, int bound)
    : order_(std::move(order)), bound_(bound) {
  too_small_ = bound_ < profile(order_).magnitude - 1;
}

void RepresentationEnumeration::for_each(const std::function<bool(const IntervalRepresentation&)>& visit) const {
  const int n = order_.size();
  if (too_small_ || bound_ < 0) return;
  std::vector<Interval> cur(n);
  bool stop = false;
  std::function<void(int)> place = [&](int x) {
    if (stop) return;
    if (x > n) {
      if (!visit(IntervalRepresentation(cur))) stop = true;
      return;
    }
    for (int l = 0; l <= bound_ && !stop; ++l) {
      for (int r = l; r <= bound_ && !stop; ++r) {
        bool ok = true;
        for (int y = 1; y < x && ok; ++y) {
          const Interval& o = cur[y - 1];
          ok = (o.right < l) == order_.precedes(y, x) && (r < o.left) == order_.precedes(x, y);
        }
        if (!ok) continue;
        cur[x - 1] = {l, r};
        place(x + 1);
      }
    }
  };
  place(1);
}

std::vector<IntervalRepresentation> RepresentationEnumeration::collect() const {
  std::vector<IntervalRepresentation> out;
  for_each([&](const IntervalRepresentation& r) {
    out.push_back(r);
    return true;
  });
  return out;
}

std::size_t RepresentationEnumeration::count() const {
  std::size_t c = 0;
  for_each([&](const IntervalRepresentation&) {
    ++c;
    return true;
  });
  return c;
}

int generous_bound(const IntervalOrder& order, const std::vector<int>& rho) {
  int b = profile(order).magnitude;
  for (int v : rho) b += std::max(v, 0) + 1;
  return b;
}

std::optional<IntervalRepresentation> brute_representation_with_lengths(const IntervalOrder& order,
                                                                        const std::vector<int>& rho, int bound) {
  const int n = order.size();
  if (rho.size() != static_cast<std::size_t>(n)) throw DimensionMismatch(n, rho.size());
  for (int v : rho)
    if (v < 0) return std::nullopt;
  std::vector<Interval> cur(n);
  std::function<bool(int)> place = [&](int x) {
    if (x > n) return true;
    for (int l = 0; l + rho[x - 1] <= bound; ++l) {
      const int r = l + rho[x - 1];
      bool ok = true;
      for (int y = 1; y < x && ok; ++y) {
        const Interval& o = cur[y - 1];
        ok = (o.right < l) == order.precedes(y, x) && (r < o.left) == order.precedes(x, y);
      }
      if (!ok) continue;
      cur[x - 1] = {l, r};
      if (place(x + 1)) return true;
    }
    return false;
  };
  if (!place(1)) return std::nullopt;
  return IntervalRepresentation(cur);
}

std::optional<std::map<int, int>> brute_cone_decompose(const std::vector<int>& v, const std::vector<ElementSet>& basis) {
  for (int c : v)
    if (c < 0) return std::nullopt;
  const int n = static_cast<int>(v.size());
  for (ElementSet s : basis)
    if (s.empty() || (s.bits() >> n) != 0) throw InvalidInput("basis set " + s.to_string() + " does not fit the vector");
  std::vector<int> order(basis.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return basis[a].size() > basis[b].size(); });

  std::set<std::vector<int>> dead;
  std::map<int, int> coef;
  std::vector<int> rest = v;
  std::function<bool()> solve = [&]() -> bool {
    auto first = std::find_if(rest.begin(), rest.end(), [](int c) { return c > 0; });
    if (first == rest.end()) return true;
    if (dead.count(rest)) return false;
    const int e = static_cast<int>(first - rest.begin()) + 1;
    for (int k : order) {
      const ElementSet s = basis[k];
      if (!s.contains(e)) continue;
      bool fits = true;
      s.for_each([&](int x) { fits = fits && rest[x - 1] > 0; });
      if (!fits) continue;
      s.for_each([&](int x) { --rest[x - 1]; });
      ++coef[k];
      if (solve()) return true;
      if (--coef[k] == 0) coef.erase(k);
      s.for_each([&](int x) { ++rest[x - 1]; });
    }
    dead.insert(rest);
    return false;
  };
  if (!solve()) return std::nullopt;
  return coef;
}

std::vector<Interval> random_intervals(int n, std::uint64_t seed) {
  if (n < 1 || n > kMaxElements) throw InvalidInput("random orders need 1..64 elements");
  // raw engine output keeps the stream identical across standard libraries
  std::mt19937_64 rng(seed);
  const std::uint64_t span = 2 * static_cast<std::uint64_t>(n) + 1;
  std::vector<Interval> iv;
  for (int x = 0; x < n; ++x) {
    int a = static_cast<int>(rng() % span), b = static_cast<int>(rng() % span);
    iv.push_back({std::min(a, b), std::max(a, b)});
  }
  return iv;
}

IntervalOrder random_interval_order(int n, std::uint64_t seed) { return from_intervals(random_intervals(n, seed)).order; }

}  // namespace ordlen
