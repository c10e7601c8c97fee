#include "ordlen/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "ordlen/errors.hpp"
#include "ordlen/oracle.hpp"
#include "ordlen/serialize.hpp"

namespace ordlen {

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "validate", "canonical", "slack",     "keygraph", "cycles",     "inequalities",  "member",
      "extend",   "gaps",      "extenders", "hilbert",  "extgraph",   "berge",         "shortchord",
      "facets",   "oracle-member", "oracle-decompose", "random"};
  return names;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InvalidInput("not an integer list: '" + text + "'");
    }
  }
  return out;
}

namespace {

int as_int(const Json& v, const char* what) {
  if (!v.is_number_integer()) throw InvalidInput(std::string(what) + " must be an integer");
  return v.get<int>();
}

}  // namespace

ParsedInput parse_input(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("input must be a JSON object");
  int present = 0;
  for (const char* key : {"relations", "intervals", "ascent"}) present += doc.contains(key) ? 1 : 0;
  if (present != 1 || doc.size() != 1)
    throw InvalidInput("input must have exactly one of \"relations\", \"intervals\", \"ascent\"");

  if (doc.contains("relations")) {
    const Json& rel = doc["relations"];
    if (!rel.is_object() || !rel.contains("n") || !rel.contains("pairs") || !rel["pairs"].is_array())
      throw InvalidInput("\"relations\" needs \"n\" and a \"pairs\" array");
    if (rel.contains("closure") && !rel["closure"].is_boolean()) throw InvalidInput("\"closure\" must be a boolean");
    std::vector<Pair> pairs;
    for (const Json& p : rel["pairs"]) {
      if (!p.is_array() || p.size() != 2) throw InvalidInput("each pair must be [x,y]");
      pairs.emplace_back(as_int(p[0], "pair entry"), as_int(p[1], "pair entry"));
    }
    return {from_relations(as_int(rel["n"], "\"n\""), pairs), std::nullopt};
  }
  if (doc.contains("intervals")) {
    if (!doc["intervals"].is_array()) throw InvalidInput("\"intervals\" must be an array");
    std::vector<Interval> iv;
    for (const Json& p : doc["intervals"]) {
      if (!p.is_array() || p.size() != 2) throw InvalidInput("each interval must be [l,r]");
      iv.push_back({as_int(p[0], "endpoint"), as_int(p[1], "endpoint")});
    }
    auto in = from_intervals(iv);
    return {in.order, in.representation};
  }
  if (!doc["ascent"].is_array()) throw InvalidInput("\"ascent\" must be an array");
  std::vector<int> seq;
  for (const Json& v : doc["ascent"]) seq.push_back(as_int(v, "ascent entry"));
  return {from_ascent_sequence(seq), std::nullopt};
}

namespace {

struct Negative {
  Json body;
};

std::string read_all(const JobConfig& cfg) {
  if (cfg.inline_input) return *cfg.inline_input;
  if (cfg.input_path.empty()) throw InvalidInput("no input given (use --input)");
  if (cfg.input_path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(cfg.input_path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + cfg.input_path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

const std::vector<int>& need_rho(const JobConfig& cfg, int n) {
  if (!cfg.rho) throw InvalidInput("this command needs --rho");
  if (cfg.rho->size() != static_cast<std::size_t>(n)) throw DimensionMismatch(n, cfg.rho->size());
  return *cfg.rho;
}

Json hole_json(const CycleSearch& s, const ExtenderGraph& h) {
  static const char* names[] = {"found", "none", "none_within_bound"};
  Json cyc = Json::array();
  for (int v : s.cycle) cyc.push_back(to_json(h.sets[v]));
  return {{"outcome", names[static_cast<int>(s.outcome)]}, {"cycle", cyc}};
}

class Runner {
 public:
  explicit Runner(const JobConfig& cfg) : cfg_(cfg) {}

  std::string run() {
    const std::string& c = cfg_.command;
    if (c == "random") return random();
    input_ = parse_input(read_all(cfg_));
    const IntervalOrder& p = input_.order;
    if (c == "validate") return validate(p);
    if (c == "canonical") return canonical(p);
    if (c == "slack") return slack_table(p);
    if (c == "keygraph") return keygraph(p);
    if (c == "cycles") return cycles(p);
    if (c == "inequalities") return inequalities(p);
    if (c == "member") return member(p);
    if (c == "extend") return extend(p);
    if (c == "gaps") return gaps(p);
    if (c == "extenders") return extenders(p);
    if (c == "hilbert") return hilbert(p);
    if (c == "extgraph") return extgraph(p);
    if (c == "berge") return berge(p);
    if (c == "shortchord") return shortchord(p);
    if (c == "facets") return facets(p);
    if (c == "oracle-member") return oracle_member(p);
    if (c == "oracle-decompose") return oracle_decompose(p);
    throw InvalidInput("unknown command '" + c + "'");
  }

 private:
  void allow(std::initializer_list<const char*> formats) {
    for (const char* f : formats)
      if (cfg_.format == f) return;
    throw InvalidInput("format '" + cfg_.format + "' is not available for " + cfg_.command);
  }

  std::string random() {
    allow({"json"});
    if (cfg_.size < 1) throw InvalidInput("random needs --size >= 1");
    Json iv = Json::array();
    for (const auto& i : random_intervals(cfg_.size, cfg_.seed)) iv.push_back({i.left, i.right});
    return dump({{"intervals", iv}});
  }

  std::string validate(const IntervalOrder& p) {
    allow({"json"});
    Json rel = Json::array(), cov = Json::array();
    for (auto [x, y] : p.relations()) rel.push_back({x, y});
    for (auto [x, y] : p.cover_relations()) cov.push_back({x, y});
    return dump({{"valid", true}, {"n", p.size()}, {"relations", rel}, {"cover_relations", cov}});
  }

  std::string canonical(const IntervalOrder& p) {
    allow({"json", "table"});
    const auto c = compute_canonical(p);
    if (cfg_.format == "table") {
      std::string out = pad("x", 5) + pad("l", 5) + pad("r", 5) + "rho\n";
      for (int x = 1; x <= p.size(); ++x)
        out += pad(std::to_string(x), 5) + pad(std::to_string(c.rep[x].left), 5) +
               pad(std::to_string(c.rep[x].right), 5) + std::to_string(c.rep[x].length()) + "\n";
      return out;
    }
    const auto pr = profile(p);
    return dump({{"magnitude", c.magnitude},
                 {"width", pr.width},
                 {"intervals", to_json(c.rep)},
                 {"apex", c.apex()}});
  }

  std::string slack_table(const IntervalOrder& p) {
    allow({"json", "table"});
    const auto c = compute_canonical(p);
    const int n = p.size();
    if (cfg_.format == "table") {
      std::string out = pad("", 4);
      for (int y = 1; y <= n; ++y) out += pad(std::to_string(y), 4);
      out += "\n";
      for (int x = 1; x <= n; ++x) {
        out += pad(std::to_string(x), 4);
        for (int y = 1; y <= n; ++y) out += pad(p.precedes(y, x) ? "-" : std::to_string(slack(c.rep, x, y)), 4);
        out += "\n";
      }
      return out;
    }
    Json rows = Json::array();
    for (int x = 1; x <= n; ++x) {
      Json row = Json::array();
      for (int y = 1; y <= n; ++y) row.push_back(p.precedes(y, x) ? Json(nullptr) : Json(slack(c.rep, x, y)));
      rows.push_back(row);
    }
    const auto cls = classify_slack_zero(c);
    Json cover = Json::array(), sharp = Json::array();
    for (auto [x, y] : cls.cover_pairs) cover.push_back({x, y});
    for (auto [x, y] : cls.sharp_pairs) sharp.push_back({x, y});
    return dump({{"slack", rows},
                 {"contractible", to_json(cls.contractible)},
                 {"cover_pairs", cover},
                 {"sharp_pairs", sharp}});
  }

  std::string keygraph(const IntervalOrder& p) {
    allow({"json", "dot"});
    const KeyGraph g = build_key_graph(compute_canonical(p));
    return cfg_.format == "dot" ? to_dot(g) : dump(to_json(g));
  }

  std::string cycles(const IntervalOrder& p) {
    allow({"json", "table"});
    const KeyGraph g = build_key_graph(compute_canonical(p));
    const auto cs = enumerate_cycles(g, cfg_.max_cycles);
    if (cfg_.format == "table") {
      std::string out;
      for (const auto& c : cs) {
        std::string verts;
        for (int v : c.vertices) verts += (verts.empty() ? "" : ",") + std::to_string(v);
        out += pad("(" + verts + ")", 24) + describe(cycle_inequality(g, c)) + "\n";
      }
      return out;
    }
    Json arr = Json::array();
    for (const auto& c : cs) arr.push_back(to_json(c));
    return dump({{"count", cs.size()}, {"cycles", arr}});
  }

  std::string inequalities(const IntervalOrder& p) {
    allow({"json", "table"});
    const auto q = length_polyhedron(p, cfg_.max_cycles);
    if (cfg_.format == "table") {
      std::string out;
      for (const auto& i : q.inequalities) out += describe(i) + "\n";
      return out;
    }
    Json arr = Json::array();
    for (const auto& i : q.inequalities) arr.push_back(to_json(i));
    return dump({{"apex", q.apex}, {"inequalities", arr}});
  }

  std::string member(const IntervalOrder& p) {
    allow({"json"});
    const auto q = length_polyhedron(p, cfg_.max_cycles);
    const auto m = is_member(q, need_rho(cfg_, p.size()));
    if (m.member) return dump({{"member", true}});
    throw Negative{{{"member", false}, {"violated", to_json(*m.violated)}, {"text", describe(*m.violated)}}};
  }

  std::string extend(const IntervalOrder& p) {
    allow({"json"});
    const auto ext = extend_to_location(p, need_rho(cfg_, p.size()), cfg_.max_cycles);
    if (auto* rep = std::get_if<IntervalRepresentation>(&ext))
      return dump({{"feasible", true}, {"intervals", to_json(*rep)}});
    const auto& cert = std::get<InfeasibilityCertificate>(ext);
    throw Negative{{{"feasible", false},
                    {"cycle", to_json(cert.cycle)},
                    {"inequality", to_json(cert.inequality)},
                    {"violation", cert.violation}}};
  }

  std::string gaps(const IntervalOrder& p) {
    allow({"json", "table"});
    const auto c = compute_canonical(p);
    const auto gs = gap_structure(c);
    if (cfg_.format == "table") {
      std::string out = pad("i", 4) + pad("gap", 10) + pad("G", 16) + pad("L", 16) + "R\n";
      for (int i = 0; i <= gs.magnitude; ++i)
        out += pad(std::to_string(i), 4) + pad(gap_label(i, gs.magnitude), 10) + pad(gs.gap[i].to_string(), 16) +
               pad(gs.left_border[i].to_string(), 16) + gs.right_border[i].to_string() + "\n";
      return out;
    }
    return dump(to_json(gs));
  }

  std::string extenders(const IntervalOrder& p) {
    allow({"json"});
    Json arr = Json::array();
    for (const auto& v : classify_extenders(compute_canonical(p), cfg_.max_extenders)) {
      Json e = to_json(v.extender);
      e["hilbert"] = v.hilbert;
      Json part = Json::array();
      for (ElementSet s : v.partition) part.push_back(to_json(s));
      e["partition"] = part;
      arr.push_back(e);
    }
    return dump({{"extenders", arr}});
  }

  std::string hilbert(const IntervalOrder& p) {
    allow({"json", "table"});
    const auto c = compute_canonical(p);
    const auto gs = gap_structure(c);
    if (cfg_.format == "table") {
      std::string out = pad("#", 5) + pad("Hilbert set", 16) + pad("gap", 11) + "decomposition\n";
      int row = 0;
      for (const auto& v : classify_extenders(c, cfg_.max_extenders)) {
        if (!v.hilbert) continue;
        bool first = true;
        for (const auto& w : v.extender.witnesses) {
          std::string lead = first ? pad(std::to_string(++row), 5) + pad(v.extender.set.to_string(), 16) : pad("", 21);
          out += lead + pad(gap_label(w.gap, gs.magnitude), 11) + gs.gap[w.gap].to_string() + " u " +
                 w.extra.to_string() + "\n";
          first = false;
        }
      }
      return out;
    }
    Json basis = Json::array();
    for (ElementSet s : hilbert_basis(c, cfg_.max_extenders)) basis.push_back(to_json(s));
    return dump({{"basis", basis}});
  }

  std::string extgraph(const IntervalOrder& p) {
    allow({"json", "dot"});
    const auto h = extender_graph(compute_canonical(p), cfg_.max_extenders);
    return cfg_.format == "dot" ? to_dot(h) : dump(to_json(h));
  }

  std::string berge(const IntervalOrder& p) {
    allow({"json"});
    const auto h = extender_graph(compute_canonical(p), cfg_.max_extenders);
    const auto r = berge_check(h.graph, cfg_.hole_cap);
    Json body = {{"berge", r.berge()},
                 {"length_cap", cfg_.hole_cap},
                 {"odd_hole", hole_json(r.odd_hole, h)},
                 {"odd_antihole", hole_json(r.odd_antihole, h)}};
    if (!r.berge()) throw Negative{body};
    return dump(body);
  }

  std::string shortchord(const IntervalOrder& p) {
    allow({"json"});
    const auto h = extender_graph(compute_canonical(p), cfg_.max_extenders);
    const auto r = find_unchorded_odd_cycle(h.graph, cfg_.hole_cap);
    Json body = hole_json(r, h);
    body["short_chorded"] = r.outcome != SearchOutcome::found;
    body["length_cap"] = cfg_.hole_cap;
    if (r.outcome == SearchOutcome::found) throw Negative{body};
    return dump(body);
  }

  std::string facets(const IntervalOrder& p) {
    allow({"json"});
    if (cfg_.system != "location" && cfg_.system != "full") throw InvalidInput("--system must be location or full");
    return dump(to_json(emit_system(p, cfg_.system == "full" ? SystemKind::full : SystemKind::location)));
  }

  std::string oracle_member(const IntervalOrder& p) {
    allow({"json"});
    const auto& rho = need_rho(cfg_, p.size());
    const int bound = cfg_.bound.value_or(generous_bound(p, rho));
    if (auto rep = brute_representation_with_lengths(p, rho, bound))
      return dump({{"member", true}, {"bound", bound}, {"intervals", to_json(*rep)}});
    throw Negative{{{"member", false}, {"bound", bound}}};
  }

  std::string oracle_decompose(const IntervalOrder& p) {
    allow({"json"});
    const auto c = compute_canonical(p);
    const auto& rho = need_rho(cfg_, p.size());
    std::vector<int> v(rho.size());
    const auto apex = c.apex();
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = rho[i] - apex[i];
    const auto basis = hilbert_basis(c, cfg_.max_extenders);
    auto coef = brute_cone_decompose(v, basis);
    if (!coef) throw Negative{{{"decomposable", false}, {"offset", v}}};
    Json terms = Json::array();
    for (auto [k, n] : *coef) terms.push_back({{"set", to_json(basis[k])}, {"coefficient", n}});
    return dump({{"decomposable", true}, {"offset", v}, {"terms", terms}});
  }

  const JobConfig& cfg_;
  ParsedInput input_;
};

Json error_json(const char* kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

JobResult dispatch(const JobConfig& cfg) {
  JobResult res;
  try {
    res.output = Runner(cfg).run();
  } catch (const Negative& n) {
    res.status = exit_code::negative_answer;
    res.output = dump(n.body);
    res.diagnostic = "negative answer";
  } catch (const LimitExceeded& e) {
    res.status = exit_code::limit_exceeded;
    res.output = dump(error_json("limit_exceeded", e.what()));
    res.diagnostic = e.what();
  } catch (const NotIntervalOrder& e) {
    const auto& w = e.certificate;
    Json j = error_json("not_interval_order", e.what());
    j["error"]["certificate"] = {w.a, w.b, w.c, w.d};
    res.status = exit_code::invalid_input;
    res.output = dump(j);
    res.diagnostic = e.what();
  } catch (const Error& e) {
    res.status = exit_code::invalid_input;
    res.output = dump(error_json("invalid_input", e.what()));
    res.diagnostic = e.what();
  } catch (const nlohmann::json::exception& e) {
    res.status = exit_code::invalid_input;
    res.output = dump(error_json("invalid_input", e.what()));
    res.diagnostic = e.what();
  }
  return res;
}

}  // namespace ordlen
