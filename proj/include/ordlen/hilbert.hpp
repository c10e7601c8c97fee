#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ordlen/canonical.hpp"
#include "ordlen/graph.hpp"

namespace ordlen {

inline constexpr std::size_t kDefaultExtenderLimit = 1'000'000;

// Indexed by gap i = 0..m.
struct GapStructure {
  int magnitude = 0;
  std::vector<ElementSet> gap;           // intervals spanning the unit gap (i-1, i)
  std::vector<ElementSet> left_border;   // intervals ending at i-1
  std::vector<ElementSet> right_border;  // intervals starting at i
};

GapStructure gap_structure(const CanonicalRepresentation& canon);

enum class BorderSide { left, right, none };  // none: the gap set alone

struct ExtenderWitness {
  int gap = 0;
  BorderSide side = BorderSide::none;
  ElementSet extra;
  bool operator==(const ExtenderWitness&) const = default;
};

struct FundamentalExtender {
  ElementSet set;
  std::vector<ExtenderWitness> witnesses;
};

// Sorted by (size, lexicographic).  Throws ExtenderLimitExceeded.
std::vector<FundamentalExtender> fundamental_extenders(const CanonicalRepresentation& canon,
                                                       std::size_t limit = kDefaultExtenderLimit);

// Exact cover of target by members of parts (each used at most once).
std::optional<std::vector<ElementSet>> find_exact_partition(ElementSet target, const std::vector<ElementSet>& parts);

struct ExtenderVerdict {
  FundamentalExtender extender;
  bool hilbert = false;
  std::vector<ElementSet> partition;  // smaller Hilbert sets covering it, when not kept
};

std::vector<ExtenderVerdict> classify_extenders(const CanonicalRepresentation& canon,
                                                std::size_t limit = kDefaultExtenderLimit);

std::vector<ElementSet> hilbert_basis(const CanonicalRepresentation& canon, std::size_t limit = kDefaultExtenderLimit);

struct ExtenderGraph {
  std::vector<ElementSet> sets;  // vertex v carries sets[v]
  SimpleGraph graph;

  int size() const { return static_cast<int>(sets.size()); }
  std::vector<long long> weights() const;
  std::optional<int> vertex_of(ElementSet s) const;
};

ExtenderGraph extender_graph(std::vector<ElementSet> sets);
ExtenderGraph extender_graph(const CanonicalRepresentation& canon, std::size_t limit = kDefaultExtenderLimit);

// Restricted to vertices whose sets are proper subsets of `within` when given.
WeightedSelection max_weight_independent_set(const ExtenderGraph& h, std::optional<ElementSet> within = std::nullopt);

}  // namespace ordlen
