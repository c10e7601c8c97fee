#include "ordlen/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "ordlen/errors.hpp"

namespace ordlen {

SimpleGraph::SimpleGraph(int n) : n_(n), adj_(n, std::vector<char>(n, 0)), nbrs_(n) {}

void SimpleGraph::add_edge(int u, int v) {
  if (u == v || adj_[u][v]) return;
  adj_[u][v] = adj_[v][u] = 1;
  nbrs_[u].insert(std::lower_bound(nbrs_[u].begin(), nbrs_[u].end(), v), v);
  nbrs_[v].insert(std::lower_bound(nbrs_[v].begin(), nbrs_[v].end(), u), u);
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nb : nbrs_) twice += nb.size();
  return twice / 2;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v : nbrs_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

SimpleGraph SimpleGraph::complement() const {
  SimpleGraph c(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!adj_[u][v]) c.add_edge(u, v);
  return c;
}

SimpleGraph SimpleGraph::induced(const std::vector<int>& vertices) const {
  const int k = static_cast<int>(vertices.size());
  SimpleGraph s(k);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (adj_[vertices[a]][vertices[b]]) s.add_edge(a, b);
  return s;
}

namespace {

bool parity_ok(int len, Parity p) {
  if (p == Parity::odd) return len % 2 == 1;
  if (p == Parity::even) return len % 2 == 0;
  return true;
}

struct Budget {
  std::size_t used = 0;
  std::size_t limit;
  void step() {
    if (++used > limit) throw SearchBoundExceeded(limit);
  }
};

}  // namespace

CycleSearch find_hole(const SimpleGraph& input, const HoleQuery& q) {
  const SimpleGraph g = q.in_complement ? input.complement() : input;
  const int n = g.size();
  const int low = std::max({4, q.min_length, q.exact_length.value_or(0)});
  const int high = std::min(q.exact_length.value_or(n), std::min(q.length_cap, n));
  CycleSearch result;
  const bool complete = q.exact_length ? *q.exact_length <= q.length_cap : q.length_cap >= n;
  result.outcome = complete ? SearchOutcome::none : SearchOutcome::none_within_bound;
  if (low > high) return result;

  Budget budget{0, q.step_budget};
  std::vector<int> path;
  std::vector<char> on_path(n, 0);
  std::function<bool()> extend = [&]() -> bool {
    budget.step();
    const int s = path.front(), last = path.back();
    const int len = static_cast<int>(path.size());
    for (int w : g.neighbors(last)) {
      if (w <= s || on_path[w]) continue;
      if (len == 1) {
        path.push_back(w);
        on_path[w] = 1;
        if (extend()) return true;
        on_path[w] = 0;
        path.pop_back();
        continue;
      }
      bool chord = false;
      for (int i = 1; i + 1 < len && !chord; ++i) chord = g.adjacent(w, path[i]);
      if (chord) continue;
      if (g.adjacent(w, s)) {
        const int cyc = len + 1;
        if (cyc >= low && cyc <= high && parity_ok(cyc, q.parity) && path[1] < w) {
          path.push_back(w);
          return true;
        }
        continue;
      }
      if (len + 2 <= high) {
        path.push_back(w);
        on_path[w] = 1;
        if (extend()) return true;
        on_path[w] = 0;
        path.pop_back();
      }
    }
    return false;
  };
  for (int s = 0; s < n; ++s) {
    path.assign(1, s);
    std::fill(on_path.begin(), on_path.end(), 0);
    on_path[s] = 1;
    if (extend()) {
      result.outcome = SearchOutcome::found;
      result.cycle = path;
      return result;
    }
  }
  return result;
}

CycleSearch find_unchorded_odd_cycle(const SimpleGraph& g, int max_length, std::size_t step_budget) {
  const int n = g.size();
  const int high = max_length > 0 ? std::min(max_length, n) : n;
  CycleSearch result;
  result.outcome = high >= n ? SearchOutcome::none : SearchOutcome::none_within_bound;
  if (high < 5) return result;

  Budget budget{0, step_budget};
  std::vector<int> path;
  std::vector<char> on_path(n, 0);
  std::function<bool()> extend = [&]() -> bool {
    budget.step();
    const int s = path.front();
    const int len = static_cast<int>(path.size());
    if (len >= 5 && len % 2 == 1 && g.adjacent(path.back(), s) && path[1] < path.back() &&
        !g.adjacent(path[len - 2], s) && !g.adjacent(path.back(), path[1]))
      return true;
    if (len == high) return false;
    for (int w : g.neighbors(path.back())) {
      if (w <= s || on_path[w]) continue;
      if (len >= 2 && g.adjacent(path[len - 2], w)) continue;  // would be a short chord
      path.push_back(w);
      on_path[w] = 1;
      if (extend()) return true;
      on_path[w] = 0;
      path.pop_back();
    }
    return false;
  };
  for (int s = 0; s < n; ++s) {
    path.assign(1, s);
    std::fill(on_path.begin(), on_path.end(), 0);
    on_path[s] = 1;
    if (extend()) {
      result.outcome = SearchOutcome::found;
      result.cycle = path;
      return result;
    }
  }
  return result;
}

BergeReport berge_check(const SimpleGraph& g, int length_cap, std::size_t step_budget) {
  BergeReport r;
  HoleQuery q;
  q.min_length = 5;
  q.parity = Parity::odd;
  q.length_cap = length_cap;
  q.step_budget = step_budget;
  r.odd_hole = find_hole(g, q);
  q.in_complement = true;
  r.odd_antihole = find_hole(g, q);
  return r;
}

std::vector<int> maximum_clique(const SimpleGraph& g) {
  std::vector<int> best, cur;
  std::function<void(std::vector<int>)> grow = [&](std::vector<int> cand) {
    if (cur.size() > best.size()) best = cur;
    while (!cand.empty()) {
      if (cur.size() + cand.size() <= best.size()) return;
      int v = cand.front();
      cand.erase(cand.begin());
      std::vector<int> next;
      for (int w : cand)
        if (g.adjacent(v, w)) next.push_back(w);
      cur.push_back(v);
      grow(next);
      cur.pop_back();
    }
  };
  std::vector<int> all(g.size());
  std::iota(all.begin(), all.end(), 0);
  grow(all);
  return best;
}

int clique_number(const SimpleGraph& g) { return static_cast<int>(maximum_clique(g).size()); }

int chromatic_number(const SimpleGraph& g) {
  const int n = g.size();
  if (n == 0) return 0;
  // color high-degree vertices first
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.neighbors(a).size() > g.neighbors(b).size(); });
  std::vector<int> color(n, -1);
  std::function<bool(int, int)> paint = [&](int i, int k) {
    if (i == n) return true;
    int v = order[i];
    int used = 0;
    for (int j = 0; j < i; ++j) used = std::max(used, color[order[j]] + 1);
    for (int c = 0; c < std::min(k, used + 1); ++c) {
      bool ok = true;
      for (int w : g.neighbors(v))
        if (color[w] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color[v] = c;
      if (paint(i + 1, k)) return true;
      color[v] = -1;
    }
    return false;
  };
  for (int k = std::max(1, clique_number(g));; ++k) {
    std::fill(color.begin(), color.end(), -1);
    if (paint(0, k)) return k;
  }
}

WeightedSelection max_weight_independent_set(const SimpleGraph& g, const std::vector<long long>& weights,
                                             const std::optional<std::vector<int>>& allowed) {
  std::vector<int> cand;
  if (allowed) {
    cand = *allowed;
  } else {
    cand.resize(g.size());
    std::iota(cand.begin(), cand.end(), 0);
  }
  std::sort(cand.begin(), cand.end(), [&](int a, int b) {
    return weights[a] != weights[b] ? weights[a] > weights[b] : a < b;
  });
  WeightedSelection best;
  std::vector<int> cur;
  std::function<void(const std::vector<int>&, long long)> go = [&](const std::vector<int>& pool, long long w) {
    if (w > best.weight) {
      best.weight = w;
      best.vertices = cur;
    }
    long long rest = 0;
    for (int v : pool) rest += weights[v];
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (w + rest <= best.weight) return;
      int v = pool[i];
      rest -= weights[v];
      std::vector<int> next;
      for (std::size_t j = i + 1; j < pool.size(); ++j)
        if (!g.adjacent(v, pool[j])) next.push_back(pool[j]);
      cur.push_back(v);
      go(next, w + weights[v]);
      cur.pop_back();
    }
  };
  go(cand, 0);
  std::sort(best.vertices.begin(), best.vertices.end());
  return best;
}

}  // namespace ordlen
