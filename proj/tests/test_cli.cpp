#include <doctest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "ordlen/cli.hpp"

using namespace ordlen;
using nlohmann::json;

namespace {

std::string data(const std::string& name) { return std::string(ORDLEN_TEST_DATA) + "/" + name; }

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(ORDLEN_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

JobResult job(const std::string& command, const std::string& input, JobConfig cfg = {}) {
  cfg.command = command;
  cfg.inline_input = input;
  return dispatch(cfg);
}

const char* kPb = R"({"relations": {"n": 7, "pairs": [[1,2],[1,4],[2,6],[2,7],[4,3],[4,7],[5,3],[5,7],[6,3]]}})";

}  // namespace

TEST_CASE("input parsing") {
  auto rel = parse_input(kPb);
  CHECK(rel.order.size() == 7);
  CHECK_FALSE(rel.intervals);
  auto iv = parse_input(R"({"intervals": [[0,0],[1,1]]})");
  CHECK(iv.order.precedes(1, 2));
  REQUIRE(iv.intervals);
  auto asc = parse_input(R"({"ascent": [0,1,0,1,3,1,3]})");
  CHECK(asc.order.size() == 7);
  CHECK_THROWS_AS(parse_input(R"({"ascent": [0], "intervals": [[0,0]]})"), InvalidInput);
  CHECK_THROWS_AS(parse_input(R"({})"), InvalidInput);
  CHECK_THROWS_AS(parse_input(R"({"ascent": [0,2]})"), NotAscentSequence);
  CHECK_THROWS_AS(parse_input(R"({"intervals": [[2,1]]})"), MalformedInterval);
  CHECK_THROWS_AS(parse_input(R"({"relations": {"n": 2, "pairs": [[1,1]]}})"), NotIrreflexive);
  CHECK_THROWS_AS(parse_input(R"({"relations": {"n": 4, "pairs": [[1,2],[3,4]]}})"), NotIntervalOrder);
  try {
    parse_input("{\"ascent\": [0,");
    FAIL("expected a parse error");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("byte") != std::string::npos);
  }
  CHECK(parse_int_list("0,0,1, 2") == std::vector<int>{0, 0, 1, 2});
  CHECK_THROWS_AS(parse_int_list("1,x"), InvalidInput);
}

TEST_CASE("dispatch covers every command") {
  JobConfig with_rho;
  with_rho.rho = std::vector<int>{0, 0, 0, 1, 2, 1, 1};
  for (const auto& name : command_names()) {
    JobConfig cfg = with_rho;
    cfg.size = 5;
    auto r = job(name, kPb, cfg);
    INFO(name);
    CHECK(r.status == exit_code::ok);
    CHECK_FALSE(json::parse(r.output).is_null());
  }
  CHECK(job("nonsense", kPb).status == exit_code::invalid_input);
}

TEST_CASE("dispatch answers") {
  auto canon = json::parse(job("canonical", kPb).output);
  CHECK(canon["magnitude"] == 5);
  CHECK(canon["apex"] == json::array({0, 0, 0, 1, 2, 1, 1}));

  JobConfig cfg;
  cfg.rho = std::vector<int>{0, 0, 0, 1, 1, 1, 1};
  auto member = job("member", kPb, cfg);
  CHECK(member.status == exit_code::negative_answer);
  auto m = json::parse(member.output);
  CHECK(m["violated"]["gamma"] == 2);
  CHECK(m["violated"]["A"] == json::array({4}));
  CHECK(m["violated"]["B"] == json::array({5, 6}));
  CHECK_FALSE(member.diagnostic.empty());

  auto ext = job("extend", kPb, cfg);
  CHECK(ext.status == exit_code::negative_answer);
  CHECK(json::parse(ext.output)["feasible"] == false);
  cfg.rho = std::vector<int>{0, 0, 0, 1, 2, 1, 1};
  auto ok = json::parse(job("extend", kPb, cfg).output);
  CHECK(ok["intervals"] == json::parse("[[0,0],[1,1],[4,4],[1,2],[0,2],[2,3],[3,4]]"));
  cfg.rho = std::vector<int>{0, 0};
  CHECK(job("member", kPb, cfg).status == exit_code::invalid_input);

  JobConfig bound;
  bound.rho = std::vector<int>{0, 0, 0, 1, 2, 1, 1};
  bound.bound = 3;
  CHECK(job("oracle-member", kPb, bound).status == exit_code::negative_answer);
  bound.bound = 4;
  CHECK(job("oracle-member", kPb, bound).status == exit_code::ok);

  JobConfig cap;
  cap.max_cycles = 3;
  CHECK(job("cycles", kPb, cap).status == exit_code::limit_exceeded);
  JobConfig ecap;
  ecap.max_extenders = 2;
  CHECK(job("hilbert", kPb, ecap).status == exit_code::limit_exceeded);

  JobConfig rnd;
  rnd.size = 6;
  rnd.seed = 42;
  auto a = job("random", "", rnd);
  CHECK(a.status == exit_code::ok);
  CHECK(a.output == job("random", "", rnd).output);
  CHECK(job("validate", a.output).status == exit_code::ok);

  JobConfig tbl;
  tbl.format = "dot";
  CHECK(job("canonical", kPb, tbl).status == exit_code::invalid_input);
}

TEST_CASE("binary: Hilbert table") {
  auto r = run("hilbert --input " + data("pc.json") + " --format table");
  CHECK(r.status == 0);
  std::istringstream in(r.out);
  std::string line;
  int numbered = 0;
  std::getline(in, line);
  CHECK(line.rfind("#", 0) == 0);
  while (std::getline(in, line))
    if (!line.empty() && std::isdigit(static_cast<unsigned char>(line[0]))) ++numbered;
  CHECK(numbered == 11);
  CHECK(r.out.find("{6,7}") != std::string::npos);
}

TEST_CASE("binary: exit statuses") {
  auto member = run("member --input " + data("pb.json") + " --rho 0,0,0,1,1,1,1");
  CHECK(member.status == 2);
  auto v = json::parse(member.out)["violated"];
  CHECK(v == json::parse(R"({"gamma":2,"A":[4],"B":[5,6]})"));

  auto two = run("validate --input " + data("twotwo.json"));
  CHECK(two.status == 1);
  CHECK(json::parse(two.out)["error"]["certificate"] == json::array({1, 2, 3, 4}));

  const auto bad = std::filesystem::temp_directory_path() / "ordlen_bad.json";
  std::ofstream(bad) << "{\"ascent\": [0,1";
  auto malformed = run("validate --input " + bad.string());
  CHECK(malformed.status == 1);
  CHECK(malformed.out.find("byte") != std::string::npos);

  CHECK(run("cycles --input " + data("pc.json") + " --max-cycles 5").status == 3);
  CHECK(run("validate --input " + data("pa.json")).status == 0);
  CHECK(run("bogus --input " + data("pa.json")).status != 0);
}

TEST_CASE("binary: deterministic output and files") {
  for (const char* cmd : {"cycles", "hilbert", "extgraph", "inequalities"}) {
    auto a = run(std::string(cmd) + " --input " + data("pd.json"));
    auto b = run(std::string(cmd) + " --input " + data("pd.json"));
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
  }
  auto dot = run("keygraph --input " + data("pd.json") + " --format dot");
  CHECK(dot.out.rfind("digraph keygraph {\n", 0) == 0);
  CHECK(dot.out.find("[color=blue]") != std::string::npos);
  auto eg = run("extgraph --input " + data("pd.json") + " --format dot");
  CHECK(eg.out.rfind("graph extenders {", 0) == 0);

  const auto path = std::filesystem::temp_directory_path() / "ordlen_out.json";
  std::filesystem::remove(path);
  auto r = run("canonical --input " + data("pa.json") + " --output " + path.string());
  CHECK(r.status == 0);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(json::parse(ss.str())["intervals"] == json::parse("[[0,0],[2,2],[0,1],[1,2],[4,4],[1,3],[3,4]]"));
}
