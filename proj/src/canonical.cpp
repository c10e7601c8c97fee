#include "ordlen/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "ordlen/errors.hpp"

namespace ordlen {

namespace {

int rank_in(const std::vector<ElementSet>& chain, ElementSet s) {
  return static_cast<int>(std::find(chain.begin(), chain.end(), s) - chain.begin());
}

IntervalRepresentation shifted(const IntervalRepresentation& rep, int from_at_least, int up_to_at_most, int delta) {
  std::vector<Interval> out = rep.intervals();
  auto move = [&](int& v) {
    if (v >= from_at_least && v <= up_to_at_most) v += delta;
  };
  for (auto& iv : out) {
    move(iv.left);
    move(iv.right);
  }
  int low = out.empty() ? 0 : out.front().left;
  for (const auto& iv : out) low = std::min(low, iv.left);
  for (auto& iv : out) {
    iv.left -= low;
    iv.right -= low;
  }
  return IntervalRepresentation(std::move(out));
}

void check_element(const IntervalRepresentation& rep, int x) {
  if (x < 1 || x > rep.size()) throw InvalidInput("element " + std::to_string(x) + " is out of range");
}

}  // namespace

CanonicalRepresentation compute_canonical(const IntervalOrder& order) {
  const OrderProfile pr = profile(order);
  std::vector<Interval> iv;
  for (int x = 1; x <= order.size(); ++x)
    iv.push_back({rank_in(pr.down_sets, order.down_set(x)), rank_in(pr.up_sets, order.up_set(x))});
  return {IntervalRepresentation(std::move(iv)), pr.magnitude};
}

bool is_canonical_form(const IntervalRepresentation& rep) {
  const auto ends = rep.endpoints();
  for (std::size_t k = 0; k < ends.size(); ++k) {
    if (ends[k] != static_cast<int>(k)) return false;
    if (!rep.is_left_endpoint(ends[k]) || !rep.is_right_endpoint(ends[k])) return false;
  }
  return true;
}

IntervalRepresentation collapse_gap(const IntervalRepresentation& rep, int i, int j, CollapseSide side) {
  const auto ends = rep.endpoints();
  auto at = std::lower_bound(ends.begin(), ends.end(), i);
  if (i >= j || at == ends.end() || *at != i || std::next(at) == ends.end() || *std::next(at) != j)
    throw NotAGap("(" + std::to_string(i) + "," + std::to_string(j) + ") is not a pair of consecutive endpoints");
  const int width = j - i;
  if (side == CollapseSide::left) {
    int delta = rep.is_right_endpoint(i) ? width - 1 : width;
    if (delta == 0) throw SideConditionViolated(std::to_string(i) + " is a right endpoint and the gap has unit width");
    return shifted(rep, j, ends.back(), -delta);
  }
  int delta = rep.is_left_endpoint(j) ? width - 1 : width;
  if (delta == 0) throw SideConditionViolated(std::to_string(j) + " is a left endpoint and the gap has unit width");
  return shifted(rep, ends.front(), i, delta);
}

CanonicalRepresentation collapse_to_canonical(const IntervalRepresentation& start) {
  IntervalRepresentation rep = shifted(start, 0, -1, 0);
  for (;;) {
    const auto ends = rep.endpoints();
    bool moved = false;
    for (std::size_t k = 0; k + 1 < ends.size() && !moved; ++k) {
      const int i = ends[k], j = ends[k + 1];
      if (!rep.is_right_endpoint(i) || j - i > 1) {
        rep = collapse_gap(rep, i, j, CollapseSide::left);
        moved = true;
      } else if (!rep.is_left_endpoint(j)) {
        rep = collapse_gap(rep, i, j, CollapseSide::right);
        moved = true;
      }
    }
    if (!moved) return {rep, static_cast<int>(ends.size())};
  }
}

int slack(const IntervalRepresentation& rep, int x, int y) {
  check_element(rep, x);
  check_element(rep, y);
  if (rep.precedes(y, x))
    throw UndefinedSlack("slack of (" + std::to_string(x) + "," + std::to_string(y) + ") is undefined since " +
                         std::to_string(y) + " precedes " + std::to_string(x));
  if (x == y) return rep[x].length();
  if (rep.precedes(x, y)) return rep[y].left - rep[x].right - 1;
  return rep[y].right - rep[x].left;
}

SlackZeroClassification classify_slack_zero(const CanonicalRepresentation& canon) {
  const auto& rep = canon.rep;
  SlackZeroClassification c;
  for (int x = 1; x <= rep.size(); ++x) {
    if (rep[x].left == rep[x].right) c.contractible.insert(x);
    for (int y = 1; y <= rep.size(); ++y) {
      if (rep[y].left == rep[x].right + 1) c.cover_pairs.emplace_back(x, y);
      if (x != y && rep[x].left == rep[y].right) c.sharp_pairs.emplace_back(x, y);
    }
  }
  return c;
}

std::vector<std::vector<int>> LinearSystem::dense() const {
  std::vector<std::vector<int>> m(rows.size(), std::vector<int>(vars.size(), 0));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (auto [v, c] : rows[r].coef) m[r][v] = c;
  return m;
}

bool LinearSystem::satisfied_by(const std::vector<int>& point) const {
  if (point.size() != vars.size()) throw DimensionMismatch(vars.size(), point.size());
  for (const auto& row : rows) {
    long long lhs = 0;
    for (auto [v, c] : row.coef) lhs += static_cast<long long>(c) * point[v];
    if (lhs > row.rhs) return false;
  }
  return true;
}

bool LinearSystem::tight_at(const std::vector<int>& point) const {
  if (point.size() != vars.size()) throw DimensionMismatch(vars.size(), point.size());
  for (const auto& row : rows) {
    long long lhs = 0;
    for (auto [v, c] : row.coef) lhs += static_cast<long long>(c) * point[v];
    if (lhs != row.rhs) return false;
  }
  return true;
}

LinearSystem emit_system(const IntervalOrder& order, SystemKind kind) {
  const int n = order.size();
  LinearSystem sys;
  sys.kind = kind;
  for (int x = 1; x <= n; ++x) {
    sys.vars.push_back("l_" + std::to_string(x));
    sys.vars.push_back("r_" + std::to_string(x));
  }
  auto l = [](int x) { return 2 * (x - 1); };
  auto r = [](int x) { return 2 * (x - 1) + 1; };
  auto add = [&](std::map<int, int> coef, int rhs) { sys.rows.push_back({std::move(coef), rhs}); };

  if (kind == SystemKind::full) {
    for (int x = 1; x <= n; ++x) sys.vars.push_back("rho_" + std::to_string(x));
    auto rho = [n](int x) { return 2 * n + x - 1; };
    for (auto [x, y] : order.relations()) add({{l(y), -1}, {r(x), 1}}, -1);
    for (int x = 1; x <= n; ++x)
      for (int y = 1; y <= n; ++y)
        if (order.incomparable(x, y)) add({{l(x), 1}, {r(y), -1}}, 0);
    for (int x = 1; x <= n; ++x) add({{l(x), 1}, {r(x), -1}, {rho(x), 1}}, 0);
    for (int x = 1; x <= n; ++x) add({{l(x), -1}, {r(x), 1}, {rho(x), -1}}, 0);
    for (int x = 1; x <= n; ++x) add({{l(x), 1}, {r(x), -1}}, 0);
    return sys;
  }

  const auto cls = classify_slack_zero(compute_canonical(order));
  for (int x = 1; x <= n; ++x)
    if (order.is_minimal(x)) add({{l(x), -1}}, 0);
  for (auto [x, y] : cls.cover_pairs) add({{l(y), -1}, {r(x), 1}}, -1);
  for (auto [x, y] : cls.sharp_pairs) add({{l(x), 1}, {r(y), -1}}, 0);
  cls.contractible.for_each([&](int x) { add({{l(x), 1}, {r(x), -1}}, 0); });
  return sys;
}

std::vector<int> location_vector(const IntervalRepresentation& rep) {
  std::vector<int> out;
  for (const auto& iv : rep.intervals()) {
    out.push_back(iv.left);
    out.push_back(iv.right);
  }
  return out;
}

std::int64_t bareiss_determinant(std::vector<std::vector<std::int64_t>> m) {
  const std::size_t k = m.size();
  if (k == 0) return 1;
  std::int64_t sign = 1, prev = 1;
  for (std::size_t p = 0; p + 1 < k; ++p) {
    if (m[p][p] == 0) {
      std::size_t s = p + 1;
      while (s < k && m[s][p] == 0) ++s;
      if (s == k) return 0;
      std::swap(m[p], m[s]);
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < k; ++i)
      for (std::size_t j = p + 1; j < k; ++j) m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]) / prev;
    prev = m[p][p];
  }
  return sign * m[k - 1][k - 1];
}

UnimodularitySample spot_check_unimodular(const std::vector<std::vector<int>>& matrix, std::size_t samples,
                                          int max_size, std::uint64_t seed) {
  UnimodularitySample out;
  if (matrix.empty() || matrix.front().empty()) return out;
  const int rows = static_cast<int>(matrix.size());
  const int cols = static_cast<int>(matrix.front().size());
  const int cap = std::min({max_size, rows, cols});
  std::mt19937_64 rng(seed);
  std::vector<int> row_pool(rows), col_pool(cols);
  for (std::size_t s = 0; s < samples; ++s) {
    const int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(cap));
    std::iota(row_pool.begin(), row_pool.end(), 0);
    std::iota(col_pool.begin(), col_pool.end(), 0);
    for (int t = 0; t < k; ++t) {
      std::swap(row_pool[t], row_pool[t + rng() % static_cast<std::uint64_t>(rows - t)]);
      std::swap(col_pool[t], col_pool[t + rng() % static_cast<std::uint64_t>(cols - t)]);
    }
    std::vector<std::vector<std::int64_t>> sub(k, std::vector<std::int64_t>(k));
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) sub[a][b] = matrix[row_pool[a]][col_pool[b]];
    const std::int64_t det = bareiss_determinant(std::move(sub));
    ++out.checked;
    if (det < -1 || det > 1) {
      out.failed = true;
      out.failing_rows.assign(row_pool.begin(), row_pool.begin() + k);
      out.failing_cols.assign(col_pool.begin(), col_pool.begin() + k);
      out.failing_det = det;
      return out;
    }
  }
  return out;
}

}  // namespace ordlen
