#pragma once

#include <functional>
#include <map>
#include <string>

#include "qsym/cli/job.hpp"
#include "qsym/numerics/json.hpp"

namespace qsym::cli {

struct Outcome {
  bool ok = true;
  json result = json::object();
  std::string csv;
};

using Handler = std::function<Outcome(const Job&, const Tolerance&)>;

// Helpers shared by the command files.
[[nodiscard]] json read_json_file(const std::string& path);
// The i-th --in file; ParseError when fewer were given.
[[nodiscard]] json input(const Job& job, std::size_t i, const std::string& what);

void register_algebra_commands(std::map<std::string, Handler>& out);
void register_qaut_commands(std::map<std::string, Handler>& out);
void register_pauli_commands(std::map<std::string, Handler>& out);

}  // namespace qsym::cli
