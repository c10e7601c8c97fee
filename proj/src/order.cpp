#include "ordlen/order.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace ordlen {

namespace {

void check_size(int n) {
  if (n < 0) throw InvalidInput("element count must be non-negative");
  if (n > kMaxElements) throw InvalidInput("at most 64 elements are supported");
}

std::vector<ElementSet> transpose(const std::vector<ElementSet>& up) {
  std::vector<ElementSet> down(up.size());
  for (std::size_t x = 0; x < up.size(); ++x)
    up[x].for_each([&](int y) { down[y - 1].insert(static_cast<int>(x) + 1); });
  return down;
}

}  // namespace

std::optional<TwoPlusTwo> find_two_plus_two(const std::vector<ElementSet>& up) {
  const auto down = transpose(up);
  const int n = static_cast<int>(up.size());
  // interval orders are exactly the orders whose down-sets form a chain
  for (int b = 1; b <= n; ++b) {
    for (int d = b + 1; d <= n; ++d) {
      ElementSet only_b = down[b - 1] - down[d - 1];
      ElementSet only_d = down[d - 1] - down[b - 1];
      if (!only_b.empty() && !only_d.empty()) return TwoPlusTwo{only_b.min(), b, only_d.min(), d};
    }
  }
  return std::nullopt;
}

IntervalOrder IntervalOrder::from_up_sets(std::vector<ElementSet> up) {
  check_size(static_cast<int>(up.size()));
  const int n = static_cast<int>(up.size());
  const ElementSet all = ElementSet::range(1, n);
  for (int x = 1; x <= n; ++x) {
    if (!up[x - 1].subset_of(all)) throw InvalidInput("relation mentions an element outside 1.." + std::to_string(n));
    if (up[x - 1].contains(x)) throw NotIrreflexive(x);
  }
  for (int x = 1; x <= n; ++x)
    up[x - 1].for_each([&](int y) {
      if (!up[y - 1].subset_of(up[x - 1])) throw InvalidInput("relation is not transitive");
    });
  if (auto w = find_two_plus_two(up)) throw NotIntervalOrder(*w);
  IntervalOrder p;
  p.down_ = transpose(up);
  p.up_ = std::move(up);
  return p;
}

std::vector<Pair> IntervalOrder::relations() const {
  std::vector<Pair> out;
  for (int x = 1; x <= size(); ++x) up_[x - 1].for_each([&](int y) { out.emplace_back(x, y); });
  return out;
}

std::vector<Pair> IntervalOrder::cover_relations() const {
  std::vector<Pair> out;
  for (int x = 1; x <= size(); ++x)
    up_[x - 1].for_each([&](int y) {
      if ((up_[x - 1] & down_[y - 1]).empty()) out.emplace_back(x, y);
    });
  return out;
}

IntervalOrder from_relations(int n, const std::vector<Pair>& pairs) {
  check_size(n);
  std::vector<ElementSet> up(n);
  for (auto [x, y] : pairs) {
    if (x < 1 || x > n || y < 1 || y > n)
      throw InvalidInput("pair (" + std::to_string(x) + "," + std::to_string(y) + ") has a label outside 1.." +
                         std::to_string(n));
    if (x == y) throw NotIrreflexive(x);
    up[x - 1].insert(y);
  }
  // Warshall on bit rows
  for (int k = 1; k <= n; ++k)
    for (int x = 1; x <= n; ++x)
      if (up[x - 1].contains(k)) up[x - 1] |= up[k - 1];
  return IntervalOrder::from_up_sets(std::move(up));
}

IntervalInput from_intervals(const std::vector<Interval>& intervals) {
  IntervalRepresentation rep(intervals);
  const int n = rep.size();
  std::vector<ElementSet> up(n);
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      if (rep.precedes(x, y)) up[x - 1].insert(y);
  return {IntervalOrder::from_up_sets(std::move(up)), std::move(rep)};
}

IntervalRepresentation ascent_to_intervals(const std::vector<int>& seq) {
  if (seq.size() > static_cast<std::size_t>(kMaxElements)) throw InvalidInput("at most 64 elements are supported");
  std::vector<Interval> iv;
  int top = 0;  // number of ascents so far, also the highest level used
  for (std::size_t k = 0; k < seq.size(); ++k) {
    const int x = seq[k];
    if (k == 0) {
      if (x != 0) throw NotAscentSequence(0);
      iv.push_back({0, 0});
      continue;
    }
    if (x < 0 || x > top + 1) throw NotAscentSequence(k);
    if (x <= seq[k - 1]) {
      iv.push_back({x, top});
      continue;
    }
    if (x <= top) {
      // open a new level at x: intervals reaching the top from below x stop at x,
      // everything else at or above x moves up one level
      for (auto& I : iv) {
        if (I.right == top && I.left < x) {
          I.right = x;
        } else {
          if (I.left >= x) ++I.left;
          if (I.right >= x) ++I.right;
        }
      }
    }
    ++top;
    iv.push_back({x, top});
  }
  return IntervalRepresentation(std::move(iv));
}

IntervalOrder from_ascent_sequence(const std::vector<int>& seq) {
  return from_intervals(ascent_to_intervals(seq).intervals()).order;
}

std::vector<std::vector<int>> all_ascent_sequences(int length) {
  std::vector<std::vector<int>> out;
  if (length <= 0) return {{}};
  std::vector<int> cur{0};
  std::function<void(int)> grow = [&](int ascents) {
    if (static_cast<int>(cur.size()) == length) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= ascents + 1; ++v) {
      int next = ascents + (v > cur.back() ? 1 : 0);
      cur.push_back(v);
      grow(next);
      cur.pop_back();
    }
  };
  grow(0);
  return out;
}

OrderProfile profile(const IntervalOrder& order) {
  OrderProfile pr;
  pr.size = order.size();
  for (int x = 1; x <= order.size(); ++x) {
    pr.down_sets.push_back(order.down_set(x));
    pr.up_sets.push_back(order.up_set(x));
  }
  auto tidy = [](std::vector<ElementSet>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  tidy(pr.down_sets);
  tidy(pr.up_sets);
  std::reverse(pr.up_sets.begin(), pr.up_sets.end());
  pr.magnitude = static_cast<int>(pr.down_sets.size());
  pr.width = width(order);
  return pr;
}

ElementSet maximum_antichain(const IntervalOrder& order) {
  const int n = order.size();
  std::vector<ElementSet> unrelated(n);
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      if (order.incomparable(x, y)) unrelated[x - 1].insert(y);
  ElementSet best;
  std::function<void(ElementSet, ElementSet)> search = [&](ElementSet chosen, ElementSet candidates) {
    if (chosen.size() > best.size()) best = chosen;
    while (!candidates.empty()) {
      if (chosen.size() + candidates.size() <= best.size()) return;
      int v = candidates.min();
      candidates.erase(v);
      ElementSet with = chosen;
      with.insert(v);
      search(with, candidates & unrelated[v - 1]);
    }
  };
  search({}, order.elements());
  return best;
}

int width(const IntervalOrder& order) { return maximum_antichain(order).size(); }

std::optional<std::vector<int>> find_isomorphism(const IntervalOrder& p, const IntervalOrder& q) {
  if (p.size() != q.size())
    throw SizeMismatch("orders have " + std::to_string(p.size()) + " and " + std::to_string(q.size()) + " elements");
  const int n = p.size();
  auto signature = [](const IntervalOrder& o, int x) { return std::pair(o.down_set(x).size(), o.up_set(x).size()); };
  std::vector<std::pair<int, int>> sp, sq;
  for (int x = 1; x <= n; ++x) {
    sp.push_back(signature(p, x));
    sq.push_back(signature(q, x));
  }
  {
    auto a = sp, b = sq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  std::vector<int> image(n, 0);
  ElementSet used;
  std::function<bool(int)> place = [&](int x) {
    if (x > n) return true;
    for (int y = 1; y <= n; ++y) {
      if (used.contains(y) || sq[y - 1] != sp[x - 1]) continue;
      bool ok = true;
      for (int w = 1; w < x && ok; ++w) {
        int v = image[w - 1];
        ok = p.precedes(w, x) == q.precedes(v, y) && p.precedes(x, w) == q.precedes(y, v);
      }
      if (!ok) continue;
      image[x - 1] = y;
      used.insert(y);
      if (place(x + 1)) return true;
      used.erase(y);
    }
    return false;
  };
  if (!place(1)) return std::nullopt;
  return image;
}

}  // namespace ordlen
