#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <vector>

#include "qsym/cli/job.hpp"

namespace {

struct Options {
  qsym::cli::Job job;
  double tol = 0.0;
  std::size_t steps = 0, r = 0, k = 0, extra = 0;
  std::uint64_t witness_bound = 0;
  bool quiet = false;
};

void add_options(CLI::App& leaf, Options& o) {
  auto& j = o.job;
  leaf.add_option("--graph", j.graph, "graph spec, e.g. union(cycle:3,2)");
  leaf.add_option("--in", j.inputs, "input JSON file (repeatable)");
  leaf.add_option("--out", j.out, "write the JSON report here");
  leaf.add_option("--csv", j.csv, "write the count table here");
  leaf.add_option("--tol", o.tol, "projection tolerance (overrides QPERM_TOL)");
  leaf.add_option("--seed", j.seed, "seed for randomized solvers");
  leaf.add_option("--jobs", j.jobs, "parallel jobs for batch runs");
  leaf.add_option("--witness-bound", o.witness_bound, "search bound for Rado witnesses");
  leaf.add_option("--r", o.r, "ball radius / window size");
  leaf.add_option("--k", o.k, "dimension parameter");
  leaf.add_option("--steps", o.steps, "back-and-forth steps");
  leaf.add_option("--extra", o.extra, "extra window coordinates");
  leaf.add_option("--policy", j.policy, "coordinate|block4");
  leaf.add_option("--sigma", j.sigma, "permutation in cycle notation");
  leaf.add_option("--tau", j.tau, "permutation in cycle notation");
  leaf.add_option("--kind", j.kind, "direct|cartesian|strong");
  leaf.add_option("--perm", j.perm, "coordinate permutation");
  leaf.add_option("--word", j.words, "word in a, b, A, B (repeatable)");
  leaf.add_option("--coords", j.coords, "coordinate of each --in");
  leaf.add_flag("-q,--quiet", o.quiet, "do not print the report");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qsym: quantum permutations, quantum graph automorphisms and the Pauli model"};
  app.set_version_flag("--version", std::string(qsym::cli::tool_version()));
  app.require_subcommand(1);
  Options opts;

  std::map<std::string, std::vector<std::string>> groups;
  for (const auto& name : qsym::cli::registered_commands()) {
    const auto space = name.find(' ');
    if (space == std::string::npos) {
      groups[name];
    } else {
      groups[name.substr(0, space)].push_back(name.substr(space + 1));
    }
  }
  for (const auto& [module, actions] : groups) {
    CLI::App* top = app.add_subcommand(module);
    if (actions.empty()) {
      add_options(*top, opts);
      top->callback([&opts, module] { opts.job.command = module; });
      continue;
    }
    top->require_subcommand(1);
    for (const auto& action : actions) {
      CLI::App* leaf = top->add_subcommand(action);
      add_options(*leaf, opts);
      const std::string full = module + " " + action;
      leaf->callback([&opts, full] { opts.job.command = full; });
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : qsym::cli::exit_input_error;
  }

  // only forward options that were actually given
  auto given = [&](const char* flag) {
    for (CLI::App* sub = app.get_subcommands().front(); sub != nullptr;) {
      const CLI::Option* opt = sub->get_option_no_throw(flag);
      if (opt != nullptr && opt->count() > 0) return true;
      const auto subs = sub->get_subcommands();
      sub = subs.empty() ? nullptr : subs.front();
    }
    return false;
  };
  auto& job = opts.job;
  if (given("--tol")) job.tol = opts.tol;
  if (given("--steps")) job.steps = opts.steps;
  if (given("--r")) job.r = opts.r;
  if (given("--k")) job.k = opts.k;
  if (given("--extra")) job.extra = opts.extra;
  if (given("--witness-bound")) job.witness_bound = opts.witness_bound;

  const auto result = qsym::cli::run_and_write(job);
  if (!opts.quiet) std::cout << qsym::cli::dump_report(result.report);
  if (result.report.contains("error")) std::cerr << "qsym: " << result.report["error"].get<std::string>() << "\n";
  return result.exit_code;
}
