#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "ordlen/keygraph.hpp"

namespace ordlen {

inline constexpr std::size_t kDefaultCycleLimit = 1'000'000;

// colors[i] is the color of the arc vertices[i] -> vertices[i+1 mod k]
struct DirectedCycle {
  std::vector<int> vertices;
  std::vector<ArcColor> colors;

  int length() const { return static_cast<int>(vertices.size()); }
  bool operator==(const DirectedCycle&) const = default;
};

// length first, then vertex sequence, then arc colors
bool operator<(const DirectedCycle& a, const DirectedCycle& b);

// gamma + sum_{i in A} rho_i <= sum_{j in B} rho_j
struct CycleInequality {
  int gamma = 0;
  ElementSet A;
  ElementSet B;

  long long violation(const std::vector<int>& rho) const;  // > 0 means violated
  bool operator==(const CycleInequality&) const = default;
};

// (gamma, B, A) with sets compared as sorted lists
bool operator<(const CycleInequality& a, const CycleInequality& b);

// Streams every elementary cycle once, rotated so its smallest vertex comes
// first.  Throws CycleLimitExceeded once more than `limit` cycles are seen.
void for_each_cycle(const KeyGraph& g, const std::function<void(const DirectedCycle&)>& visit,
                    std::size_t limit = kDefaultCycleLimit);

std::vector<DirectedCycle> enumerate_cycles(const KeyGraph& g, std::size_t limit = kDefaultCycleLimit);

DirectedCycle normalized(DirectedCycle c);

CycleInequality cycle_inequality(const KeyGraph& g, const DirectedCycle& c);

struct LengthPolyhedron {
  std::vector<int> apex;
  std::vector<CycleInequality> inequalities;  // distinct, sorted

  int dimension() const { return static_cast<int>(apex.size()); }
};

LengthPolyhedron length_polyhedron(const IntervalOrder& order, std::size_t cycle_limit = kDefaultCycleLimit);

struct Membership {
  bool member = true;
  std::optional<CycleInequality> violated;
};

// When rho is outside, reports the most violated inequality; ties go to the
// one with the largest support, then to the first in canonical order.
Membership is_member(const LengthPolyhedron& q, const std::vector<int>& rho);

struct InfeasibilityCertificate {
  DirectedCycle cycle;
  CycleInequality inequality;
  long long violation = 0;
};

using Extension = std::variant<IntervalRepresentation, InfeasibilityCertificate>;

// Least non-negative left endpoints for lengths rho (longest paths over the
// key graph), or a cycle whose inequality rho violates.
Extension extend_to_location(const IntervalOrder& order, const std::vector<int>& rho,
                             std::size_t cycle_limit = kDefaultCycleLimit);

}  // namespace ordlen
