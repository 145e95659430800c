#pragma once

#include "whvi/instance.hpp"
#include "whvi/oracle.hpp"

#include <string>

namespace whvi {

/// Output of one command: a human-readable report and a JSON document with the same numbers.
struct CommandResult {
  int exit_code = 0;
  std::string text;
  std::string json;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int invalid = 2;
inline constexpr int solver_failed = 3;
inline constexpr int io = 4;
inline constexpr int repro_failed = 1;
}  // namespace exit_code

/// Applicability matrix of the existence results with every checker verdict.
CommandResult cmd_check(const Instance& inst);

/// Homotopy solve plus multistart enumeration; exit code 3 when the homotopy FAILED.
CommandResult cmd_solve(const Instance& inst);

/// Grid oracle solution set and copositivity minimum (dimension <= 3).
CommandResult cmd_oracle(const Instance& inst, const OracleGrid& grid);

/// Recomputes the quantities stated for the shipped examples; one PASS/FAIL/FLAG row each.
/// FLAG marks a reproduced, documented discrepancy. Exit code is nonzero iff a row FAILs.
CommandResult cmd_repro();

}  // namespace whvi
