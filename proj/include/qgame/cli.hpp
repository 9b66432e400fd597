// Command-line front end. Verbs: solve-classical, play, search-nash,
// sweep-tau, newcomb. Reports are deterministic JSON (CSV for sweeps with
// --csv); identical inputs produce byte-identical output. Exit codes:
// 0 success, 2 input validation, 1 internal error.

#pragma once

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qgame/ewl.hpp"

namespace qgame {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when --help is requested; carries the text to print.
struct HelpRequested {
  std::string text;
};

struct Command {
  enum class Verb { SolveClassical, Play, SearchNash, SweepTau, Newcomb };

  Verb verb{};
  std::vector<std::string> argv;  // original tokens, echoed in the report

  std::optional<PayoffMatrix> payoffs;
  double tau = 1.5707963267948966;  // pi/2
  StrategyName base = StrategyName::D;
  std::optional<StrategyName> a, b;
  int theta_steps = 65;
  int phi_steps = 33;
  double epsilon = 1e-9;
  int steps = 9;
  bool csv = false;
  std::string out_file;
};

struct RunReport {
  std::string body;
  bool is_csv = false;
};

// Angles accept either a "<x>pi" multiple (e.g. "0.5pi") or raw radians.
double parse_angle(const std::string& text);

// args excludes the program name. Throws UsageError / OrderingViolation on
// bad input and HelpRequested for --help.
Command parse_command(const std::vector<std::string>& args);

RunReport execute(const Command& cmd);

int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout,
            std::ostream& err = std::cerr);

}  // namespace qgame
