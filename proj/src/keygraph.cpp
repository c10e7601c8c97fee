#include "ordlen/keygraph.hpp"

#include <algorithm>

#include "ordlen/errors.hpp"

namespace ordlen {

const char* color_name(ArcColor c) { return c == ArcColor::blue ? "blue" : "red"; }

KeyGraph::KeyGraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)), out_(n) {
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
  for (const Arc& a : arcs_) {
    if (a.tail < 1 || a.tail > n || a.head < 1 || a.head > n) throw InvalidInput("arc endpoint out of range");
    if (a.tail == a.head && a.color == ArcColor::blue) throw InvalidInput("blue loops are not allowed");
    out_[a.tail - 1].push_back(a);
  }
}

bool KeyGraph::has_arc(int tail, int head, ArcColor color) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), Arc{tail, head, color});
}

KeyGraph build_key_graph(const SlackZeroClassification& cls, int n) {
  std::vector<Arc> arcs;
  cls.contractible.for_each([&](int x) { arcs.push_back({x, x, ArcColor::red}); });
  for (auto [x, y] : cls.cover_pairs) arcs.push_back({x, y, ArcColor::blue});
  for (auto [x, y] : cls.sharp_pairs) arcs.push_back({x, y, ArcColor::red});
  return KeyGraph(n, std::move(arcs));
}

KeyGraph build_key_graph(const CanonicalRepresentation& canon) {
  return build_key_graph(classify_slack_zero(canon), canon.rep.size());
}

std::string to_dot(const KeyGraph& g) {
  std::string out = "digraph keygraph {\n";
  for (int x = 1; x <= g.size(); ++x) out += "  rho_" + std::to_string(x) + ";\n";
  for (const Arc& a : g.arcs())
    out += "  rho_" + std::to_string(a.tail) + " -> rho_" + std::to_string(a.head) + " [color=" +
           color_name(a.color) + "];\n";
  out += "}\n";
  return out;
}

}  // namespace ordlen
