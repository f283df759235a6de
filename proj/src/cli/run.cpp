#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "commands.hpp"
#include "qsym/error.hpp"

#ifndef QSYM_VERSION
#define QSYM_VERSION "dev"
#endif

namespace qsym::cli {
namespace {

const std::map<std::string, Handler>& registry() {
  static const std::map<std::string, Handler> table = [] {
    std::map<std::string, Handler> t;
    register_algebra_commands(t);
    register_qaut_commands(t);
    register_pauli_commands(t);
    return t;
  }();
  return table;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw ParseError("write to " + path + " failed");
}

template <typename T>
void maybe(const json& j, const char* key, std::optional<T>& slot) {
  if (j.contains(key)) slot = j.at(key).get<T>();
}

RunResult run_batch(const Job& job) {
  const json doc = input(job, 0, "batch file");
  const json& list = doc.is_object() ? doc.at("jobs") : doc;
  if (!list.is_array()) throw ParseError("batch: expected an array of jobs");
  const std::filesystem::path base = std::filesystem::path(job.inputs.front()).parent_path();

  std::vector<Job> jobs;
  for (const json& entry : list) {
    Job j = job_from_json(entry);
    if (j.command == "batch") throw ParseError("batch: nested batch jobs are not allowed");
    for (auto& path : j.inputs)
      if (std::filesystem::path(path).is_relative()) path = (base / path).string();
    if (!j.tol && job.tol) j.tol = job.tol;
    jobs.push_back(std::move(j));
  }

  std::vector<RunResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) results[i] = run_and_write(jobs[i]);
  };
  const std::size_t threads = std::clamp<std::size_t>(job.jobs, 1, std::max<std::size_t>(1, jobs.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  RunResult out;
  json reports = json::array();
  std::size_t passed = 0;
  for (const auto& r : results) {
    reports.push_back(r.report);
    out.exit_code = std::max(out.exit_code, r.exit_code);
    passed += r.exit_code == exit_ok ? 1 : 0;
  }
  out.report["result"] = {{"jobs", jobs.size()}, {"passed", passed}, {"reports", std::move(reports)}};
  out.report["ok"] = out.exit_code == exit_ok;
  return out;
}

}  // namespace

const char* tool_version() { return QSYM_VERSION; }

const std::vector<std::string>& registered_commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, handler] : registry()) n.push_back(name);
    n.emplace_back("batch");
    std::sort(n.begin(), n.end());
    return n;
  }();
  return names;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

json input(const Job& job, std::size_t i, const std::string& what) {
  if (job.inputs.size() <= i) throw ParseError(job.command + ": missing --in for " + what);
  return read_json_file(job.inputs[i]);
}

Job job_from_json(const json& j) {
  try {
    Job job;
    job.command = j.at("command").get<std::string>();
    job.graph = j.value("graph", std::string{});
    if (j.contains("in")) {
      const json& in = j.at("in");
      job.inputs = in.is_string() ? std::vector<std::string>{in.get<std::string>()} : in.get<std::vector<std::string>>();
    }
    maybe(j, "tol", job.tol);
    job.seed = j.value("seed", std::uint64_t{0});
    job.out = j.value("out", std::string{});
    job.csv = j.value("csv", std::string{});
    maybe(j, "steps", job.steps);
    maybe(j, "r", job.r);
    maybe(j, "k", job.k);
    maybe(j, "extra", job.extra);
    maybe(j, "witness-bound", job.witness_bound);
    job.policy = j.value("policy", std::string{});
    job.sigma = j.value("sigma", std::string{});
    job.tau = j.value("tau", std::string{});
    job.kind = j.value("kind", std::string{});
    job.perm = j.value("perm", std::string{});
    if (j.contains("word")) job.words = j.at("word").get<std::vector<std::string>>();
    if (j.contains("coords")) job.coords = j.at("coords").get<std::vector<std::uint64_t>>();
    job.jobs = j.value("jobs", std::size_t{1});
    return job;
  } catch (const json::exception& e) {
    throw ParseError(std::string("job: ") + e.what());
  }
}

std::string dump_report(const json& report) { return report.dump(2) + "\n"; }

RunResult run(const Job& job) {
  RunResult out;
  json envelope{{"tool", "qsym"}, {"version", tool_version()}, {"command", job.command}, {"seed", job.seed}};
  if (!job.graph.empty()) envelope["graph"] = job.graph;
  if (!job.inputs.empty()) envelope["inputs"] = job.inputs;
  try {
    Tolerance tol = Tolerance::from_env();
    if (job.tol) tol = Tolerance::with_proj(*job.tol);
    envelope["tolerance"] = tol;
    if (job.command == "batch") {
      out = run_batch(job);
    } else {
      const auto it = registry().find(job.command);
      if (it == registry().end()) throw ParseError("unknown command \"" + job.command + "\"");
      Outcome o = it->second(job, tol);
      out.exit_code = o.ok ? exit_ok : exit_check_failed;
      out.report["result"] = std::move(o.result);
      out.report["ok"] = o.ok;
      out.csv = std::move(o.csv);
    }
  } catch (const ConsistencyError& e) {
    out.exit_code = exit_check_failed;
    out.report["ok"] = false;
    out.report["error"] = e.what();
  } catch (const SearchExhausted& e) {
    out.exit_code = exit_check_failed;
    out.report["ok"] = false;
    out.report["error"] = e.what();
  } catch (const std::exception& e) {
    out.exit_code = exit_input_error;
    out.report["ok"] = false;
    out.report["error"] = e.what();
  }
  for (auto& [key, value] : envelope.items()) out.report[key] = value;
  out.report["exit_code"] = out.exit_code;
  return out;
}

RunResult run_and_write(const Job& job) {
  RunResult r = run(job);
  try {
    if (!job.out.empty()) write_text(job.out, dump_report(r.report));
    if (!job.csv.empty() && !r.csv.empty()) write_text(job.csv, r.csv);
  } catch (const Error& e) {
    r.exit_code = exit_input_error;
    r.report["ok"] = false;
    r.report["error"] = e.what();
    r.report["exit_code"] = r.exit_code;
  }
  return r;
}

}  // namespace qsym::cli
