#include "ordlen/hilbert.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "ordlen/errors.hpp"

namespace ordlen {

GapStructure gap_structure(const CanonicalRepresentation& canon) {
  const int m = canon.magnitude;
  const auto& rep = canon.rep;
  GapStructure gs;
  gs.magnitude = m;
  gs.gap.assign(m + 1, {});
  gs.left_border.assign(m + 1, {});
  gs.right_border.assign(m + 1, {});
  for (int x = 1; x <= rep.size(); ++x) {
    const Interval& iv = rep[x];
    for (int i = std::max(1, iv.left + 1); i <= std::min(m - 1, iv.right); ++i) gs.gap[i].insert(x);
    gs.left_border[iv.right + 1].insert(x);
    gs.right_border[iv.left].insert(x);
  }
  return gs;
}

std::vector<FundamentalExtender> fundamental_extenders(const CanonicalRepresentation& canon, std::size_t limit) {
  const GapStructure gs = gap_structure(canon);
  std::map<ElementSet, std::vector<ExtenderWitness>> found;
  auto record = [&](ElementSet s, ExtenderWitness w) {
    if (s.empty()) return;
    auto& ws = found[s];
    if (std::find(ws.begin(), ws.end(), w) == ws.end()) ws.push_back(w);
    if (found.size() > limit) throw ExtenderLimitExceeded(limit);
  };
  for (int i = 0; i <= gs.magnitude; ++i) {
    const ElementSet base = gs.gap[i];
    record(base, {i, BorderSide::none, {}});
    for (auto [side, border] : {std::pair{BorderSide::left, gs.left_border[i]},
                                std::pair{BorderSide::right, gs.right_border[i]}}) {
      const std::uint64_t full = border.bits();
      // non-empty subsets of the border set
      for (std::uint64_t sub = full; sub; sub = (sub - 1) & full) {
        ElementSet z = ElementSet::from_bits(sub);
        record(base | z, {i, side, z});
      }
    }
  }
  std::vector<FundamentalExtender> out;
  for (auto& [s, ws] : found) {
    std::sort(ws.begin(), ws.end(), [](const ExtenderWitness& a, const ExtenderWitness& b) {
      return std::tuple(a.gap, a.side, a.extra) < std::tuple(b.gap, b.side, b.extra);
    });
    out.push_back({s, ws});
  }
  return out;
}

std::optional<std::vector<ElementSet>> find_exact_partition(ElementSet target, const std::vector<ElementSet>& parts) {
  std::vector<ElementSet> chosen;
  std::function<bool(ElementSet)> cover = [&](ElementSet rest) {
    if (rest.empty()) return true;
    const int e = rest.min();
    for (ElementSet p : parts) {
      if (!p.contains(e) || !p.subset_of(rest)) continue;
      chosen.push_back(p);
      if (cover(rest - p)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!cover(target)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::vector<ExtenderVerdict> classify_extenders(const CanonicalRepresentation& canon, std::size_t limit) {
  std::vector<ExtenderVerdict> out;
  std::vector<ElementSet> kept;
  for (auto& ext : fundamental_extenders(canon, limit)) {
    std::vector<ElementSet> smaller;
    for (ElementSet k : kept)
      if (k.size() < ext.set.size() && k.subset_of(ext.set)) smaller.push_back(k);
    ExtenderVerdict v{ext, true, {}};
    if (auto part = find_exact_partition(ext.set, smaller)) {
      v.hilbert = false;
      v.partition = *part;
    } else {
      kept.push_back(ext.set);
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<ElementSet> hilbert_basis(const CanonicalRepresentation& canon, std::size_t limit) {
  std::vector<ElementSet> out;
  for (const auto& v : classify_extenders(canon, limit))
    if (v.hilbert) out.push_back(v.extender.set);
  return out;
}

std::vector<long long> ExtenderGraph::weights() const {
  std::vector<long long> w;
  for (ElementSet s : sets) w.push_back(s.size());
  return w;
}

std::optional<int> ExtenderGraph::vertex_of(ElementSet s) const {
  auto it = std::find(sets.begin(), sets.end(), s);
  if (it == sets.end()) return std::nullopt;
  return static_cast<int>(it - sets.begin());
}

ExtenderGraph extender_graph(std::vector<ElementSet> sets) {
  ExtenderGraph h{std::move(sets), SimpleGraph(0)};
  h.graph = SimpleGraph(h.size());
  for (int u = 0; u < h.size(); ++u)
    for (int v = u + 1; v < h.size(); ++v)
      if (h.sets[u].intersects(h.sets[v])) h.graph.add_edge(u, v);
  return h;
}

ExtenderGraph extender_graph(const CanonicalRepresentation& canon, std::size_t limit) {
  return extender_graph(hilbert_basis(canon, limit));
}

WeightedSelection max_weight_independent_set(const ExtenderGraph& h, std::optional<ElementSet> within) {
  std::optional<std::vector<int>> allowed;
  if (within) {
    allowed.emplace();
    for (int v = 0; v < h.size(); ++v)
      if (h.sets[v].proper_subset_of(*within)) allowed->push_back(v);
  }
  return max_weight_independent_set(h.graph, h.weights(), allowed);
}

}  // namespace ordlen
