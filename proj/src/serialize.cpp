#include "ordlen/serialize.hpp"

namespace ordlen {

Json to_json(ElementSet s) { return Json(s.elements()); }

Json to_json(const IntervalRepresentation& rep) {
  Json out = Json::array();
  for (const auto& iv : rep.intervals()) out.push_back({iv.left, iv.right});
  return out;
}

Json to_json(const LinearSystem& sys) {
  Json rows = Json::array();
  for (const auto& row : sys.rows) {
    Json coef = Json::object();
    for (auto [v, c] : row.coef) coef[sys.vars[v]] = c;
    rows.push_back({{"coef", coef}, {"rhs", row.rhs}});
  }
  return {{"vars", sys.vars}, {"rows", rows}};
}

Json to_json(const KeyGraph& g) {
  Json arcs = Json::array();
  for (const Arc& a : g.arcs()) arcs.push_back({a.tail, a.head, color_name(a.color)});
  return {{"n", g.size()}, {"arcs", arcs}};
}

Json to_json(const DirectedCycle& c) {
  Json colors = Json::array();
  for (ArcColor col : c.colors) colors.push_back(color_name(col));
  return {{"cycle", c.vertices}, {"colors", colors}};
}

Json to_json(const CycleInequality& q) { return {{"gamma", q.gamma}, {"A", to_json(q.A)}, {"B", to_json(q.B)}}; }

Json to_json(const GapStructure& gs) {
  Json gaps = Json::array();
  for (int i = 0; i <= gs.magnitude; ++i)
    gaps.push_back({{"i", i},
                    {"G", to_json(gs.gap[i])},
                    {"L", to_json(gs.left_border[i])},
                    {"R", to_json(gs.right_border[i])}});
  return {{"magnitude", gs.magnitude}, {"gaps", gaps}};
}

const char* side_name(BorderSide s) {
  switch (s) {
    case BorderSide::left:
      return "L";
    case BorderSide::right:
      return "R";
    default:
      return "-";
  }
}

Json to_json(const FundamentalExtender& e) {
  Json ws = Json::array();
  for (const auto& w : e.witnesses) ws.push_back({{"gap", w.gap}, {"side", side_name(w.side)}, {"Z", to_json(w.extra)}});
  return {{"set", to_json(e.set)}, {"witnesses", ws}};
}

Json to_json(const ExtenderGraph& h) {
  Json verts = Json::array(), adjacency = Json::array();
  for (int v = 0; v < h.size(); ++v) {
    verts.push_back({{"id", v}, {"set", to_json(h.sets[v])}, {"weight", h.sets[v].size()}});
    adjacency.push_back(h.graph.neighbors(v));
  }
  return {{"vertices", verts}, {"adjacency", adjacency}, {"edge_count", h.graph.edge_count()}};
}

std::string to_dot(const ExtenderGraph& h) {
  std::string out = "graph extenders {\n";
  for (int v = 0; v < h.size(); ++v)
    out += "  v" + std::to_string(v) + " [label=\"" + h.sets[v].to_string() + "\", weight=" +
           std::to_string(h.sets[v].size()) + "];\n";
  for (auto [u, v] : h.graph.edges()) out += "  v" + std::to_string(u) + " -- v" + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

std::string describe(const CycleInequality& q) {
  auto sum = [](ElementSet s) {
    std::string t;
    s.for_each([&](int x) { t += (t.empty() ? "" : " + ") + std::string("rho") + std::to_string(x); });
    return t;
  };
  std::string lhs = std::to_string(q.gamma);
  if (!q.A.empty()) lhs = (q.gamma ? lhs + " + " : std::string()) + sum(q.A);
  std::string rhs = q.B.empty() ? "0" : sum(q.B);
  return lhs + " <= " + rhs;
}

std::string gap_label(int i, int magnitude) {
  if (i == 0) return "(-inf,0)";
  if (i == magnitude) return "(" + std::to_string(magnitude - 1) + ",inf)";
  return "(" + std::to_string(i - 1) + "," + std::to_string(i) + ")";
}

}  // namespace ordlen
