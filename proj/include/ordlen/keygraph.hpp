#pragma once

#include <string>
#include <vector>

#include "ordlen/canonical.hpp"

namespace ordlen {

enum class ArcColor { blue, red };

const char* color_name(ArcColor c);

struct Arc {
  int tail = 0;
  int head = 0;
  ArcColor color = ArcColor::blue;
  bool operator==(const Arc&) const = default;
  auto operator<=>(const Arc&) const = default;
};

// Vertex x stands for the length of element x.  Blue arcs are cover pairs,
// red arcs sharp pairs, red loops contractible elements.
class KeyGraph {
 public:
  KeyGraph() = default;
  KeyGraph(int n, std::vector<Arc> arcs);

  int size() const { return n_; }
  const std::vector<Arc>& arcs() const { return arcs_; }  // sorted (tail, head, color)
  const std::vector<Arc>& out_arcs(int x) const { return out_[x - 1]; }
  bool has_arc(int tail, int head, ArcColor color) const;

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<Arc>> out_;
};

KeyGraph build_key_graph(const CanonicalRepresentation& canon);
KeyGraph build_key_graph(const SlackZeroClassification& cls, int n);

std::string to_dot(const KeyGraph& g);

}  // namespace ordlen
