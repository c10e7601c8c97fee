#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "ordlen/cli.hpp"
#include "ordlen/errors.hpp"

int main(int argc, char** argv) {
  ordlen::JobConfig cfg;
  std::string rho;
  std::uint64_t seed = 0;

  CLI::App app{"Interval order lengths: canonical representations, key graphs, cycle inequalities, Hilbert bases"};
  app.add_option("command", cfg.command, "what to compute")
      ->required()
      ->check(CLI::IsMember(ordlen::command_names()));
  app.add_option("-i,--input", cfg.input_path, "input JSON file, - for standard input");
  app.add_option("-o,--output", cfg.output_path, "output file, - for standard output")->capture_default_str();
  app.add_option("-f,--format", cfg.format, "json, dot or table")
      ->check(CLI::IsMember({"json", "dot", "table"}))
      ->capture_default_str();
  app.add_option("--bound", cfg.bound, "endpoint bound for the brute-force oracle")->check(CLI::NonNegativeNumber);
  app.add_option("--max-cycles", cfg.max_cycles, "cycle cap")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--max-extenders", cfg.max_extenders, "extender cap")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--hole-cap", cfg.hole_cap, "longest cycle searched by berge/shortchord")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", seed, "seed for random")->capture_default_str();
  app.add_option("--size", cfg.size, "element count for random");
  app.add_option("--rho", rho, "comma-separated interval lengths, element order");
  app.add_option("--system", cfg.system, "facets: location or full")
      ->check(CLI::IsMember({"location", "full"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : ordlen::exit_code::invalid_input;
  }
  cfg.seed = seed;

  ordlen::JobResult res;
  try {
    if (!rho.empty()) cfg.rho = ordlen::parse_int_list(rho);
    res = ordlen::dispatch(cfg);
  } catch (const ordlen::Error& e) {
    res.status = ordlen::exit_code::invalid_input;
    res.diagnostic = e.what();
  }

  if (cfg.output_path == "-" || cfg.output_path.empty()) {
    std::cout << res.output;
  } else {
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) {
      std::cerr << "ordlen: cannot write " << cfg.output_path << "\n";
      return ordlen::exit_code::invalid_input;
    }
    out << res.output;
  }
  if (!res.diagnostic.empty()) std::cerr << "ordlen: " << res.diagnostic << "\n";
  return res.status;
}
