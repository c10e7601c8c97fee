#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace ordlen {

// Undirected simple graph on vertices 0..n-1.
class SimpleGraph {
 public:
  explicit SimpleGraph(int n = 0);

  int size() const { return n_; }
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return adj_[u][v] != 0; }
  const std::vector<int>& neighbors(int v) const { return nbrs_[v]; }
  std::size_t edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

  SimpleGraph complement() const;
  SimpleGraph induced(const std::vector<int>& vertices) const;

 private:
  int n_ = 0;
  std::vector<std::vector<char>> adj_;
  std::vector<std::vector<int>> nbrs_;
};

inline constexpr std::size_t kDefaultSearchBudget = 50'000'000;

enum class Parity { any, odd, even };

struct HoleQuery {
  int min_length = 4;
  std::optional<int> exact_length;
  Parity parity = Parity::any;
  bool in_complement = false;
  int length_cap = 12;
  std::size_t step_budget = kDefaultSearchBudget;
};

enum class SearchOutcome { found, none, none_within_bound };

struct CycleSearch {
  SearchOutcome outcome = SearchOutcome::none;
  std::vector<int> cycle;  // vertices in cycle order when found
};

// Induced cycle (of the graph or of its complement).  Throws
// SearchBoundExceeded when the step budget runs out.
CycleSearch find_hole(const SimpleGraph& g, const HoleQuery& query);

// Odd cycle of length >= 5 without a chord between vertices two apart.
// max_length 0 means no length cap.
CycleSearch find_unchorded_odd_cycle(const SimpleGraph& g, int max_length = 0,
                                     std::size_t step_budget = kDefaultSearchBudget);

// No odd hole and no odd antihole of length <= length_cap.
struct BergeReport {
  CycleSearch odd_hole;
  CycleSearch odd_antihole;
  bool berge() const {
    return odd_hole.outcome != SearchOutcome::found && odd_antihole.outcome != SearchOutcome::found;
  }
};
BergeReport berge_check(const SimpleGraph& g, int length_cap = 12, std::size_t step_budget = kDefaultSearchBudget);

std::vector<int> maximum_clique(const SimpleGraph& g);
int clique_number(const SimpleGraph& g);
int chromatic_number(const SimpleGraph& g);

struct WeightedSelection {
  long long weight = 0;
  std::vector<int> vertices;  // increasing
};

// Exact maximum-weight independent set among `allowed` (all vertices if empty optional).
WeightedSelection max_weight_independent_set(const SimpleGraph& g, const std::vector<long long>& weights,
                                             const std::optional<std::vector<int>>& allowed = std::nullopt);

}  // namespace ordlen
