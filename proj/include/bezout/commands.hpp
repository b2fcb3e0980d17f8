#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bezout/exact.hpp"

namespace bezout {

struct CommandRequest {
  std::string subcommand;               // "demo" takes its name as first positional
  std::vector<std::string> positional;
  std::map<std::string, std::string> options;  // spec, sys, base, target, var, method, mm, samples
  std::uint64_t seed = 1;
  std::uint64_t prime = kMersenne61;
  int margin_cap = 6;
  int seeds = 3;
  std::string format = "json";
};

struct CommandResult {
  int exit_code = 0;  // 0 success, 1 mathematical failure, 2 usage error
  std::string output;
};

const std::vector<std::string>& subcommand_names();

// Never throws: failures become a JSON error document with the matching exit code.
CommandResult run_command(const CommandRequest& req);

}  // namespace bezout
