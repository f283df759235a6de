#include <sstream>

#include "commands.hpp"
#include "qsym/error.hpp"
#include "qsym/pauli/folner.hpp"
#include "qsym/pauli/json.hpp"
#include "qsym/pauli/model.hpp"

namespace qsym::cli {
namespace {

// Letters a, b and A = a⁻¹, B = b⁻¹; "e" is the empty word.
Rot3 parse_word(const std::string& word) {
  const auto& gen = free_generators();
  Rot3 g;
  if (word == "e") return g;
  for (char ch : word) {
    switch (ch) {
      case 'a': g = g * gen.a; break;
      case 'A': g = g * gen.a.transpose(); break;
      case 'b': g = g * gen.b; break;
      case 'B': g = g * gen.b.transpose(); break;
      default: throw ParseError("word: unexpected letter '" + std::string(1, ch) + "' in \"" + word + "\"");
    }
  }
  return g;
}

struct Labelled {
  std::string label;
  Rot3 g;
};

// --word arguments, then --in files holding a Rot3.
std::vector<Labelled> rotations(const Job& job) {
  std::vector<Labelled> out;
  for (const auto& w : job.words) out.push_back({w, parse_word(w)});
  for (std::size_t i = 0; i < job.inputs.size(); ++i) out.push_back({job.inputs[i], rot3_from_json(input(job, i, "rotation"))});
  return out;
}

Outcome pauli_relations(const Job& job, const Tolerance& tol) {
  std::vector<Labelled> items = rotations(job);
  std::vector<std::size_t> lengths;
  if (items.empty()) {
    const auto b = ball(job.r.value_or(2));
    std::size_t len = 0;
    std::size_t left = b.sphere_sizes.front();
    for (const auto& g : b.elements) {
      while (left == 0) left = b.sphere_sizes[++len];
      --left;
      items.push_back({g.to_string(), g});
      lengths.push_back(len);
    }
  }
  bool ok = true;
  double worst = 0.0;
  json rows = json::array();
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> by_length;  // count, failures
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto rep = verify_relations(eval_rep(items[i].g), tol);
    ok = ok && rep.ok;
    worst = std::max(worst, rep.worst_residual);
    if (!job.words.empty() || !job.inputs.empty()) rows.push_back({{"rotation", items[i].label}, {"report", rep}});
    if (!lengths.empty()) {
      auto& slot = by_length[lengths[i]];
      ++slot.first;
      slot.second += rep.ok ? 0 : 1;
    }
  }
  std::ostringstream csv;
  json table = json::array();
  if (!by_length.empty()) {
    csv << "length,elements,failures\n";
    for (const auto& [len, c] : by_length) {
      csv << len << ',' << c.first << ',' << c.second << '\n';
      table.push_back({{"length", len}, {"elements", c.first}, {"failures", c.second}});
    }
  }
  json result{{"checked", items.size()}, {"worst_residual", worst}};
  if (!rows.empty()) result["rotations"] = std::move(rows);
  if (!table.empty()) result["by_length"] = std::move(table);
  return {ok, std::move(result), csv.str()};
}

Outcome pauli_packet(const Job& job, const Tolerance& tol) {
  const auto items = rotations(job);
  if (items.empty()) throw ParseError("pauli packet: give --word or --in");
  bool ok = true;
  json rows = json::array();
  for (const auto& [label, g] : items) {
    const auto orb = orbit(g);
    const auto here = packet_irreducibles(g, tol, job.seed);
    const auto there = packet_irreducibles(orb.back(), tol, job.seed);
    const auto match = cross_realise(here, there, tol);
    std::vector<std::size_t> dims;
    for (const auto& irr : here) dims.push_back(irr.dim);
    const bool row_ok = orb.size() <= 16 && here.size() <= 4 && match.has_value();
    ok = ok && row_ok;
    json row{{"rotation", label},         {"element", g},       {"canonical", orb.front()},
             {"orbit_size", orb.size()}, {"irreducible_dims", dims}, {"cross_realised", match.has_value()}};
    if (match) row["matching"] = *match;
    rows.push_back(std::move(row));
  }
  return {ok, {{"packets", std::move(rows)}}, {}};
}

Outcome pauli_fuse(const Job& job, const Tolerance& tol) {
  const auto items = rotations(job);
  if (items.size() != 2) throw ParseError("pauli fuse: exactly two rotations (--word or --in) are required");
  const auto res = fuse(items[0].g, items[1].g, tol, job.seed);
  json result = res;
  result["g"] = items[0].g;
  result["h"] = items[1].g;
  return {res.ok && res.total_dim == 16, std::move(result), {}};
}

Outcome pauli_ball(const Job& job, const Tolerance&) {
  const std::size_t r = job.r.value_or(3);
  const auto b = ball(r);
  std::ostringstream csv;
  csv << "radius,sphere,ball\n";
  std::size_t acc = 0;
  for (std::size_t i = 0; i < b.sphere_sizes.size(); ++i) {
    acc += b.sphere_sizes[i];
    csv << i << ',' << b.sphere_sizes[i] << ',' << acc << '\n';
  }
  json result{{"radius", r}, {"ball_size", b.elements.size()}, {"reduced_words", b.words}, {"sphere_sizes", b.sphere_sizes}};
  return {b.elements.size() == b.words, std::move(result), csv.str()};
}

Outcome pauli_folner(const Job& job, const Tolerance& tol) {
  const std::size_t r = job.r.value_or(3);
  const auto& gen = free_generators();
  const std::vector<Rot3> s{gen.a, gen.b};
  const auto full = ball(r);
  std::ostringstream csv;
  csv << "radius,ball,boundary,ratio\n";
  json table = json::array();
  bool ok = true;
  std::size_t prefix = 0;
  double last_ratio = 0.0;
  std::size_t last_boundary = 0;
  for (std::size_t i = 0; i <= r; ++i) {
    prefix += full.sphere_sizes[i];
    const Rot3Set f(full.elements.begin(), full.elements.begin() + static_cast<std::ptrdiff_t>(prefix));
    last_boundary = folner_boundary(f, s).size();
    last_ratio = static_cast<double>(last_boundary) / static_cast<double>(prefix);
    ok = ok && last_ratio >= 0.5;
    csv << i << ',' << prefix << ',' << last_boundary << ',' << last_ratio << '\n';
    table.push_back({{"radius", i}, {"ball", prefix}, {"boundary", last_boundary}, {"ratio", last_ratio}});
  }
  json result{{"radius", r},
              {"ball_size", full.elements.size()},
              {"boundary", last_boundary},
              {"ratio", last_ratio},
              {"table", std::move(table)}};
  // transfer comparison on a small ball; the representation solves grow quickly
  const std::size_t tr = std::min<std::size_t>(r, 3);
  const auto small = ball(tr);
  const auto transfer = transfer_check(small.elements, s, tol);
  result["transfer"] = transfer;
  result["transfer_radius"] = tr;
  ok = ok && transfer.transfer_holds && transfer.packet_bound;
  return {ok, std::move(result), csv.str()};
}

}  // namespace

void register_pauli_commands(std::map<std::string, Handler>& out) {
  out["pauli relations"] = pauli_relations;
  out["pauli packet"] = pauli_packet;
  out["pauli fuse"] = pauli_fuse;
  out["pauli ball"] = pauli_ball;
  out["pauli folner"] = pauli_folner;
}

}  // namespace qsym::cli
