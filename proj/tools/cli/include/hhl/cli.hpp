#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hhl::cli {

enum ExitCode : int {
  kOk = 0,
  kAssertionFailed = 1,
  kGuardExceeded = 2,
  kIntegrityFailure = 3,
  kUsageError = 64,
};

struct RunConfig {
  std::string command;
  std::string complex = "Dpm";
  int n = 1;
  int d = 1;
  std::string q = "1";
  std::string field = "Q";
  bool assert_acyclic = false;
  std::string out;
  std::string format = "json";
  unsigned jobs = 1;
  std::optional<std::uint64_t> guard;
  bool timing = false;
  std::string export_path;
  bool perturb_xi = false;
};

// Parses args (without the program name), runs the command and writes the
// report to cfg.out or, when empty, to `out`. Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int main_entry(int argc, char** argv);

}  // namespace hhl::cli
