#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ordlen/order.hpp"
#include "ordlen/representation.hpp"

namespace ordlen {

struct CanonicalRepresentation {
  IntervalRepresentation rep;
  int magnitude = 0;

  std::vector<int> apex() const { return rep.lengths(); }
};

CanonicalRepresentation compute_canonical(const IntervalOrder& order);

// every level 0..m-1 is both a left and a right endpoint, and nothing else is used
bool is_canonical_form(const IntervalRepresentation& rep);

enum class CollapseSide { left, right };

// Closes the gap between consecutive endpoints i < j.  With side=left the
// endpoints >= j move down, with side=right the endpoints <= i move up; the
// result is translated so that its smallest endpoint is 0.  The move is the
// full width j-i when the side condition allows it, otherwise the gap is
// narrowed to a single unit.
IntervalRepresentation collapse_gap(const IntervalRepresentation& rep, int i, int j, CollapseSide side);

CanonicalRepresentation collapse_to_canonical(const IntervalRepresentation& rep);

// Throws UndefinedSlack when y precedes x.
int slack(const IntervalRepresentation& rep, int x, int y);

struct SlackZeroClassification {
  ElementSet contractible;
  std::vector<Pair> cover_pairs;  // lexicographic
  std::vector<Pair> sharp_pairs;
};

SlackZeroClassification classify_slack_zero(const CanonicalRepresentation& canon);

enum class SystemKind { full, location };

struct LinearRow {
  std::map<int, int> coef;  // variable index -> +-1
  int rhs = 0;
};

// rows are "sum coef * var <= rhs"
struct LinearSystem {
  SystemKind kind = SystemKind::location;
  std::vector<std::string> vars;
  std::vector<LinearRow> rows;

  std::vector<std::vector<int>> dense() const;
  bool satisfied_by(const std::vector<int>& point) const;
  bool tight_at(const std::vector<int>& point) const;
};

// Full system over (l_1, r_1, ..., l_n, r_n, rho_1, ..., rho_n); location
// system over (l_1, r_1, ..., l_n, r_n).
LinearSystem emit_system(const IntervalOrder& order, SystemKind kind);

// (l*_1, r*_1, ..., l*_n, r*_n)
std::vector<int> location_vector(const IntervalRepresentation& rep);

// exact integer determinant (fraction-free elimination)
std::int64_t bareiss_determinant(std::vector<std::vector<std::int64_t>> m);

struct UnimodularitySample {
  std::size_t checked = 0;
  bool failed = false;
  // first submatrix with a determinant outside {0,1,-1}
  std::vector<int> failing_rows;
  std::vector<int> failing_cols;
  std::int64_t failing_det = 0;
};

// determinants of random square submatrices (size 1..max_size)
UnimodularitySample spot_check_unimodular(const std::vector<std::vector<int>>& matrix, std::size_t samples,
                                          int max_size, std::uint64_t seed);

}  // namespace ordlen
