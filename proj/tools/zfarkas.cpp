#include <CLI11.hpp>

#include <iostream>

#include "zfarkas/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice-box feasibility certificates and Q_P refinement"};
  app.require_subcommand(1);

  zfarkas::cli::Command cmd;
  std::string method = "cert";

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("input", cmd.input_path, "Input JSON file ('-' for stdin)")->required();
    sub->add_option("-o,--output", cmd.output_path, "Write the JSON result here instead of stdout");
    sub->add_flag("-s,--summary", cmd.summary, "Print a human-readable summary to stderr");
  };

  add_io(app.add_subcommand("certify", "Decide class membership and print the divisor chain"));
  add_io(app.add_subcommand("certs", "Print the certificate expressions of a lattice"));
  for (const char* name : {"feasible", "solve"}) {
    auto* sub = app.add_subcommand(name, std::string(name) == "feasible" ? "Decide whether the box holds a lattice point"
                                                                         : "Find a lattice point in the box");
    add_io(sub);
    sub->add_option("-m,--method", method, "cert | recursive | oracle")
        ->check(CLI::IsMember({"cert", "recursive", "oracle"}));
    sub->add_option("--cap", cmd.oracle_cap, "Largest box the oracle enumerates");
  }
  {
    auto* sub = app.add_subcommand("oracle", "Brute-force lattice point search");
    add_io(sub);
    sub->add_option("--cap", cmd.oracle_cap, "Largest box the oracle enumerates");
  }
  add_io(app.add_subcommand("circuits", "List the circuits and prime set of a vector family"));
  add_io(app.add_subcommand("qpsolve", "Find a box solution with coordinates in Q_P"));
  {
    auto* sub = app.add_subcommand("gen-corpus", "Write random box and qpsolve instances");
    sub->add_option("dir", cmd.output_path, "Output directory")->required();
    sub->add_option("--seed", cmd.seed, "Generator seed");
    sub->add_option("--count", cmd.count, "Instances of each kind")->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : zfarkas::cli::kMalformedInput;
  }
  cmd.name = app.get_subcommands().front()->get_name();
  cmd.method = zfarkas::cli::parse_method(method);
  return zfarkas::cli::run(cmd, std::cout, std::cerr);
}
