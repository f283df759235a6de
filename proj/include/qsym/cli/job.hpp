#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsym/numerics/json.hpp"
#include "qsym/numerics/tolerance.hpp"

namespace qsym::cli {

enum ExitCode : int { exit_ok = 0, exit_check_failed = 1, exit_input_error = 2 };

// One invocation. `command` is "<module> <action>", e.g. "qaut disjoint".
struct Job {
  std::string command;
  std::string graph;
  std::vector<std::string> inputs;
  std::optional<double> tol;  // overrides eps_proj
  std::uint64_t seed = 0;
  std::string out;
  std::string csv;

  std::optional<std::size_t> steps;
  std::optional<std::size_t> r;
  std::optional<std::size_t> k;
  std::optional<std::size_t> extra;
  std::optional<std::uint64_t> witness_bound;
  std::string policy;
  std::string sigma;
  std::string tau;
  std::string kind;
  std::string perm;
  std::vector<std::string> words;
  std::vector<std::uint64_t> coords;
  std::size_t jobs = 1;
};

[[nodiscard]] const std::vector<std::string>& registered_commands();

// Batch job files use the long flag names as keys:
// {"command": "qaut check", "in": ["c.json"], "graph": "...", "tol": 1e-9, ...}
[[nodiscard]] Job job_from_json(const json& j);

struct RunResult {
  int exit_code = exit_ok;
  json report;      // always carries tool, version, command, seed, tolerance
  std::string csv;  // count table, empty when the command has none
};

// Never throws for bad input; errors become exit_input_error with an
// "error" field in the report.
[[nodiscard]] RunResult run(const Job& job);

// run() plus writing --out / --csv when set.
[[nodiscard]] RunResult run_and_write(const Job& job);

// Deterministic serialization used for every report file.
[[nodiscard]] std::string dump_report(const json& report);

[[nodiscard]] const char* tool_version();

}  // namespace qsym::cli
