#pragma once

#include <optional>
#include <string>
#include <vector>

namespace leibniz {

struct CliRequest {
  std::string command;  // check, construct, roundtrip, tensor, lieize
  std::vector<std::string> args;
  std::optional<std::string> input;   // workspace document; the fixture workspace when absent
  std::optional<std::string> golden;  // directory of tensor-<name>.json files
  std::optional<std::string> output;  // report, workspace or golden document, by command
  std::optional<unsigned> seed;       // adds random identity braidings to roundtrip all-fixtures
};

struct CliResult {
  int exit_code = 0;  // 0 pass, 1 axiom failure, 2 input error
  std::string report;
};

// Never throws for bad input; errors become exit code 2 with an error document.
CliResult run_cli(const CliRequest& request);

}  // namespace leibniz
