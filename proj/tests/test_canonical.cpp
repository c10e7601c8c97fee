#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "ordlen/canonical.hpp"
#include "ordlen/oracle.hpp"

using namespace ordlen;

namespace {

std::int64_t cofactor_det(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t k = m.size();
  if (k == 0) return 1;
  if (k == 1) return m[0][0];
  std::int64_t total = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::vector<std::int64_t>> minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t j = 0; j < k; ++j)
        if (j != c) row.push_back(m[r][j]);
      minor.push_back(row);
    }
    total += (c % 2 ? -1 : 1) * m[0][c] * cofactor_det(minor);
  }
  return total;
}

// x precedes y with a strict gap between them
bool strictly_before(const IntervalRepresentation& r, int a, int b) { return r[a].right < r[b].left; }

}  // namespace

TEST_CASE("canonical representations of the worked examples") {
  auto a = compute_canonical(fixtures::order_a());
  CHECK(a.rep.intervals() == fixtures::canon_a);
  CHECK(a.magnitude == 5);
  CHECK(compute_canonical(fixtures::order_b()).rep.intervals() == fixtures::canon_b);
  CHECK(compute_canonical(fixtures::order_c()).rep.intervals() == fixtures::canon_c);
  auto d = compute_canonical(fixtures::order_d());
  CHECK(d.rep.intervals() == fixtures::canon_d);
  CHECK(d.magnitude == 4);
}

TEST_CASE("canonical of chains and antichains") {
  auto c = compute_canonical(fixtures::chain(3));
  CHECK(c.rep.intervals() == std::vector<Interval>{{0, 0}, {1, 1}, {2, 2}});
  CHECK(c.magnitude == 3);
  auto a = compute_canonical(fixtures::antichain(4));
  CHECK(a.rep.intervals() == std::vector<Interval>(4, {0, 0}));
  CHECK(a.magnitude == 1);
}

TEST_CASE("every level is a left and a right endpoint") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto p = random_interval_order(1 + static_cast<int>(seed % 10), seed);
    auto c = compute_canonical(p);
    CHECK(is_canonical_form(c.rep));
    CHECK(c.rep.represents(p));
    CHECK(static_cast<int>(c.rep.endpoints().size()) == c.magnitude);
    CHECK(from_intervals(c.rep.intervals()).order == p);
  }
}

TEST_CASE("collapsing a single gap") {
  auto r = collapse_gap(fixtures::rep({{0, 0}, {3, 3}}), 0, 3, CollapseSide::left);
  CHECK(r.intervals() == std::vector<Interval>{{0, 0}, {1, 1}});
  auto s = collapse_gap(fixtures::rep({{0, 2}}), 0, 2, CollapseSide::right);
  CHECK(s.intervals() == std::vector<Interval>{{0, 0}});
  auto t = collapse_gap(fixtures::rep({{0, 1}, {4, 6}}), 0, 1, CollapseSide::left);
  CHECK(t.intervals() == std::vector<Interval>{{0, 0}, {3, 5}});
  CHECK_THROWS_AS(collapse_gap(fixtures::rep({{0, 1}, {4, 6}}), 0, 4, CollapseSide::left), NotAGap);
  CHECK_THROWS_AS(collapse_gap(fixtures::rep({{0, 1}, {4, 6}}), 1, 3, CollapseSide::left), NotAGap);
  CHECK_THROWS_AS(collapse_gap(fixtures::rep({{0, 1}, {4, 6}}), 4, 1, CollapseSide::left), NotAGap);
}

TEST_CASE("a canonical representation has no collapsible gap") {
  auto b = fixtures::rep(fixtures::canon_b);
  for (int i = 0; i <= 5; ++i)
    for (int j = 0; j <= 5; ++j)
      for (auto side : {CollapseSide::left, CollapseSide::right}) {
        bool rejected = false;
        try {
          collapse_gap(b, i, j, side);
        } catch (const NotAGap&) {
          rejected = true;
        } catch (const SideConditionViolated&) {
          rejected = true;
        }
        CHECK(rejected);
      }
}

TEST_CASE("collapsing to canonical") {
  auto c = collapse_to_canonical(fixtures::rep({{0, 1}, {4, 6}}));
  CHECK(c.rep.intervals() == std::vector<Interval>{{0, 0}, {1, 1}});
  CHECK(c.magnitude == 2);
  CHECK(collapse_to_canonical(fixtures::rep(fixtures::canon_a)).rep.intervals() == fixtures::canon_a);

  const auto pc = fixtures::order_c();
  std::size_t seen = 0;
  RepresentationEnumeration(pc, 6).for_each([&](const IntervalRepresentation& r) {
    ++seen;
    auto k = collapse_to_canonical(r);
    CHECK(k.rep.intervals() == fixtures::canon_c);
    CHECK(k.magnitude == 5);
    return true;
  });
  CHECK(seen > 1);
}

TEST_CASE("collapsing agrees with the rank construction on random orders") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 1 + static_cast<int>(seed % 9);
    auto iv = random_intervals(n, seed);
    auto in = from_intervals(iv);
    auto k = collapse_to_canonical(in.representation);
    auto c = compute_canonical(in.order);
    CHECK(k.rep == c.rep);
    CHECK(k.magnitude == c.magnitude);
    // lengths never grow
    for (int x = 1; x <= n; ++x) CHECK(k.rep[x].length() <= in.representation[x].length());
  }
}

TEST_CASE("slack values") {
  auto a = fixtures::rep(fixtures::canon_a);
  CHECK(slack(a, 6, 5) == 0);
  CHECK(slack(a, 6, 3) == 0);
  CHECK(slack(a, 7, 6) == 0);
  CHECK(slack(a, 2, 2) == 0);
  CHECK(slack(a, 2, 5) == 1);
  CHECK(slack(a, 1, 1) == 0);
  CHECK(slack(a, 7, 7) != 0);
  CHECK(slack(a, 6, 4) != 0);
  CHECK(slack(a, 6, 7) != 0);
  CHECK_THROWS_AS(slack(a, 5, 6), UndefinedSlack);
  CHECK_THROWS_AS(slack(a, 0, 1), InvalidInput);
}

TEST_CASE("slack-zero classification") {
  auto b = classify_slack_zero(compute_canonical(fixtures::order_b()));
  CHECK(b.contractible == ElementSet{1, 2, 3});
  CHECK(b.cover_pairs == std::vector<Pair>{{1, 2}, {1, 4}, {2, 6}, {4, 7}, {5, 7}, {6, 3}});
  CHECK(b.sharp_pairs == std::vector<Pair>{{3, 7}, {4, 2}, {5, 1}, {6, 4}, {6, 5}, {7, 6}});

  auto anti = classify_slack_zero(compute_canonical(fixtures::antichain(3)));
  CHECK(anti.contractible == ElementSet{1, 2, 3});
  CHECK(anti.cover_pairs.empty());
  CHECK(anti.sharp_pairs.size() == 6);

  auto c = classify_slack_zero(compute_canonical(fixtures::order_c()));
  auto has = [](const std::vector<Pair>& v, Pair p) { return std::find(v.begin(), v.end(), p) != v.end(); };
  CHECK(has(c.cover_pairs, {1, 2}));
  CHECK(has(c.cover_pairs, {5, 8}));
  CHECK(has(c.cover_pairs, {6, 3}));
  // 8 and 3 overlap at level 4: sharp, not a cover
  CHECK_FALSE(has(c.cover_pairs, {8, 3}));
  CHECK(has(c.sharp_pairs, {3, 8}));
  CHECK(has(c.sharp_pairs, {6, 5}));
  CHECK(has(c.sharp_pairs, {7, 5}));
}

TEST_CASE("classification matches the slack function") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto p = random_interval_order(1 + static_cast<int>(seed % 8), seed);
    auto c = compute_canonical(p);
    auto cls = classify_slack_zero(c);
    const int n = p.size();
    for (int x = 1; x <= n; ++x)
      for (int y = 1; y <= n; ++y) {
        if (p.precedes(y, x)) continue;
        const bool zero = slack(c.rep, x, y) == 0;
        const int hits = (x == y && cls.contractible.contains(x)) +
                         static_cast<int>(std::count(cls.cover_pairs.begin(), cls.cover_pairs.end(), Pair{x, y})) +
                         static_cast<int>(std::count(cls.sharp_pairs.begin(), cls.sharp_pairs.end(), Pair{x, y}));
        CHECK(hits == (zero ? 1 : 0));
      }
    for (auto [x, y] : cls.cover_pairs) CHECK(p.precedes(x, y));
    for (auto [x, y] : cls.sharp_pairs) CHECK(p.incomparable(x, y));
  }
}

TEST_CASE("location system of the 2-chain") {
  auto sys = emit_system(fixtures::chain(2), SystemKind::location);
  CHECK(sys.vars == std::vector<std::string>{"l_1", "r_1", "l_2", "r_2"});
  REQUIRE(sys.rows.size() == 4);
  CHECK(sys.rows[0].coef == std::map<int, int>{{0, -1}});
  CHECK(sys.rows[0].rhs == 0);
  CHECK(sys.rows[1].coef == std::map<int, int>{{1, 1}, {2, -1}});
  CHECK(sys.rows[1].rhs == -1);
  CHECK(sys.rows[2].coef == std::map<int, int>{{0, 1}, {1, -1}});
  CHECK(sys.rows[3].coef == std::map<int, int>{{2, 1}, {3, -1}});
}

TEST_CASE("system sizes") {
  auto pb = fixtures::order_b();
  int minimal = 0;
  for (int x = 1; x <= 7; ++x) minimal += pb.is_minimal(x);
  CHECK(minimal == 2);
  CHECK(emit_system(pb, SystemKind::location).rows.size() == static_cast<std::size_t>(minimal + 6 + 6 + 3));
  auto one = emit_system(fixtures::antichain(1), SystemKind::full);
  CHECK(one.rows.size() == 3);
  CHECK(one.vars.size() == 3);
}

TEST_CASE("canonical location vector is tight on every facet and feasible for the full system") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto p = random_interval_order(1 + static_cast<int>(seed % 8), seed);
    auto c = compute_canonical(p);
    auto loc = emit_system(p, SystemKind::location);
    CHECK(loc.tight_at(location_vector(c.rep)));
    auto full = emit_system(p, SystemKind::full);
    auto point = location_vector(c.rep);
    for (int v : c.apex()) point.push_back(v);
    CHECK(full.satisfied_by(point));
    for (const auto* sys : {&loc, &full})
      for (const auto& row : sys->rows) {
        CHECK((row.rhs == 0 || row.rhs == -1));
        for (auto [v, k] : row.coef) CHECK((k == 1 || k == -1));
      }
  }
}

TEST_CASE("canonical slack is smallest and determines the representation up to shift") {
  std::vector<IntervalOrder> orders = {fixtures::order_a(), fixtures::chain(3), fixtures::antichain(3)};
  for (std::uint64_t seed = 0; seed < 25; ++seed) orders.push_back(random_interval_order(2 + seed % 4, seed));
  for (const auto& p : orders) {
    const auto c = compute_canonical(p);
    const int n = p.size();
    const auto zero = classify_slack_zero(c);
    std::size_t count = 0;
    RepresentationEnumeration(p, c.magnitude + 1).for_each([&](const IntervalRepresentation& r) {
      ++count;
      bool all_zero_kept = true;
      for (int x = 1; x <= n; ++x) {
        CHECK(c.rep[x].left <= r[x].left);
        CHECK(c.rep[x].right <= r[x].right);
        for (int y = 1; y <= n; ++y) {
          if (p.precedes(y, x)) continue;
          const int sc = slack(c.rep, x, y), sr = slack(r, x, y);
          CHECK(sc <= sr);
          if (sc == 0 && sr != 0) all_zero_kept = false;
          if (p.precedes(x, y) && strictly_before(c.rep, x, y))
            CHECK(c.rep[y].left - c.rep[x].right <= r[y].left - r[x].right);
        }
      }
      if (all_zero_kept) {
        const int shift = r[1].left - c.rep[1].left;
        for (int x = 1; x <= n; ++x) {
          CHECK(r[x].left - c.rep[x].left == shift);
          CHECK(r[x].right - c.rep[x].right == shift);
        }
      }
      return true;
    });
    CHECK(count >= 1);
  }
}

TEST_CASE("fraction-free determinant") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    const std::size_t k = 1 + rng() % 6;
    std::vector<std::vector<std::int64_t>> m(k, std::vector<std::int64_t>(k));
    for (auto& row : m)
      for (auto& v : row) v = static_cast<std::int64_t>(rng() % 5) - 2;
    CHECK(bareiss_determinant(m) == cofactor_det(m));
  }
  CHECK(bareiss_determinant({{0, 1}, {1, 0}}) == -1);
  CHECK(bareiss_determinant({{2, 0}, {0, 3}}) == 6);
}

TEST_CASE("full-system submatrices have determinants in {0, 1, -1}") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto p = random_interval_order(2 + static_cast<int>(seed % 6), seed);
    auto m = emit_system(p, SystemKind::full).dense();
    auto res = spot_check_unimodular(m, 300, 8, seed);
    CHECK(res.checked == 300);
    CHECK_FALSE(res.failed);
  }
  auto bad = spot_check_unimodular({{1, 1}, {-1, 1}}, 50, 2, 1);
  CHECK(bad.failed);
  CHECK(std::abs(bad.failing_det) == 2);
}
