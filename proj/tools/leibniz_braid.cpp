#include <CLI11.hpp>
#include <iostream>

#include "leibniz/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier and constructions for braided Leibniz and Lie structures"};
  leibniz::CliRequest req;
  std::string input, golden, output;
  unsigned seed = 0;
  app.add_option("command", req.command, "check, construct, roundtrip, tensor or lieize")->required();
  app.add_option("args", req.args, "command arguments");
  auto* in = app.add_option("--input", input, "workspace document (JSON)");
  auto* gd = app.add_option("--golden", golden, "directory of tensor-<name>.json golden files");
  auto* out = app.add_option("--output", output, "file for the report, workspace or golden document");
  auto* sd = app.add_option("--seed", seed, "add random identity braidings to roundtrip all-fixtures");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (*in) req.input = input;
  if (*gd) req.golden = golden;
  if (*out) req.output = output;
  if (*sd) req.seed = seed;
  leibniz::CliResult r = leibniz::run_cli(req);
  std::cout << r.report;
  return r.exit_code;
}
