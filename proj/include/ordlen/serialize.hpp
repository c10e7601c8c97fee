#pragma once

#include <json.hpp>

#include "ordlen/canonical.hpp"
#include "ordlen/cycles.hpp"
#include "ordlen/hilbert.hpp"
#include "ordlen/keygraph.hpp"

namespace ordlen {

using Json = nlohmann::ordered_json;

Json to_json(ElementSet s);
Json to_json(const IntervalRepresentation& rep);  // [[l,r],...]
Json to_json(const LinearSystem& sys);
Json to_json(const KeyGraph& g);
Json to_json(const DirectedCycle& c);
Json to_json(const CycleInequality& q);
Json to_json(const GapStructure& gs);
Json to_json(const FundamentalExtender& e);
Json to_json(const ExtenderGraph& h);
std::string to_dot(const ExtenderGraph& h);

const char* side_name(BorderSide s);  // "L", "R", "-"
std::string describe(const CycleInequality& q);  // "2 + rho4 <= rho5 + rho6"
std::string gap_label(int i, int magnitude);  // "(-inf,0)", "(0,1)", ...

}  // namespace ordlen
