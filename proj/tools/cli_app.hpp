#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace lfr::cli {

/// Runs one command line (without the program name). Exit codes: 0 holds,
/// 1 fails with a witness, 2 usage, input or cap error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct ExampleCheck {
  std::string name;
  nlohmann::ordered_json expected;
  nlohmann::ordered_json actual;

  bool ok() const { return expected == actual; }
};

const std::vector<std::string>& example_ids();

/// Recomputes a named example; throws UnknownExample for other ids.
std::vector<ExampleCheck> reproduce_example(const std::string& id);

}  // namespace lfr::cli
