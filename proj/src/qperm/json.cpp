#include "qsym/qperm/json.hpp"

#include <charconv>

#include "qsym/error.hpp"

namespace qsym {
namespace {

std::pair<Id, Id> parse_pair_key(const std::string& key) {
  const auto comma = key.find(',');
  if (comma == std::string::npos) throw ParseError("entry key \"" + key + "\" is not \"x,y\"");
  auto parse_id = [&](std::string_view s) {
    Id v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw ParseError("entry key \"" + key + "\" has a bad id");
    return v;
  };
  const std::string_view k(key);
  return {parse_id(k.substr(0, comma)), parse_id(k.substr(comma + 1))};
}

}  // namespace

json index_set_to_json(const IndexSet& s) {
  json j;
  if (s.is_finite()) {
    j = json{{"kind", "finite"}, {"n", s.size()}};
  } else {
    j = json{{"kind", "naturals"}};
  }
  if (!s.labels().empty()) j["labels"] = s.labels();
  return j;
}

IndexSet index_set_from_json(const json& j) {
  try {
    const std::string labels = j.value("labels", std::string{});
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "finite") return IndexSet::finite(j.at("n").get<Id>(), labels);
    if (kind == "naturals") return IndexSet::naturals(labels);
    throw ParseError("index_set: unknown kind " + kind);
  } catch (const json::exception& e) {
    throw ParseError(std::string("index_set: ") + e.what());
  }
}

json qperm_to_json(const QuantumPermutation& qp) {
  json entries = json::object();
  const std::size_t n = qp.support_size();
  const CMatrix one = CMatrix::identity(qp.dim());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const CMatrix& e = qp.local(i, j);
      if (i == j ? e == one : e.is_zero()) continue;
      entries[std::to_string(qp.support()[i]) + "," + std::to_string(qp.support()[j])] = e;
    }
  return json{{"index_set", index_set_to_json(qp.index_set())},
              {"dim", qp.dim()},
              {"support", qp.support()},
              {"entries", std::move(entries)}};
}

QuantumPermutation qperm_from_json(const json& j) {
  try {
    const IndexSet index_set = index_set_from_json(j.at("index_set"));
    const auto dim = j.at("dim").get<std::size_t>();
    auto support = j.at("support").get<std::vector<Id>>();
    std::sort(support.begin(), support.end());
    const std::size_t n = support.size();
    std::vector<CMatrix> entries(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        entries[i * n + k] = i == k ? CMatrix::identity(dim) : CMatrix::zero(dim, dim);
    if (j.contains("entries")) {
      for (const auto& [key, value] : j.at("entries").items()) {
        const auto [x, y] = parse_pair_key(key);
        const auto ix = std::lower_bound(support.begin(), support.end(), x);
        const auto iy = std::lower_bound(support.begin(), support.end(), y);
        if (ix == support.end() || *ix != x || iy == support.end() || *iy != y)
          throw ParseError("entry " + key + " lies outside the support");
        entries[static_cast<std::size_t>(ix - support.begin()) * n +
                static_cast<std::size_t>(iy - support.begin())] = value.get<CMatrix>();
      }
    }
    return {index_set, dim, std::move(support), std::move(entries)};
  } catch (const json::exception& e) {
    throw ParseError(std::string("quantum permutation: ") + e.what());
  } catch (const ShapeError& e) {
    throw ParseError(std::string("quantum permutation: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("quantum permutation: ") + e.what());
  }
}

void to_json(json& j, const ValidationReport& r) {
  j = json{{"ok", r.ok}, {"worst_residual", r.worst_residual},
           {"failing_constraint", r.failing_constraint}};
}

void to_json(json& j, const PartialReport& r) {
  j = json{{"ok", r.ok},
           {"worst_residual", r.worst_residual},
           {"failing_constraint", r.failing_constraint},
           {"max_row_multiplicity", r.max_row_multiplicity},
           {"max_column_multiplicity", r.max_column_multiplicity},
           {"max_support", r.max_support},
           {"supports_in_window", r.supports_in_window}};
}

json partial_to_json(const PartialQuantumPermutation& p) {
  json entries = json::array();
  for (const auto& [key, e] : p.entries())
    entries.push_back(json{{"x", key.first}, {"y", key.second}, {"support", e.support}, {"local", e.local}});
  return json{{"policy", to_string(p.policy())},
              {"seed", p.seed()},
              {"steps", p.steps()},
              {"window", p.window()},
              {"domain", p.domain()},
              {"range", p.range()},
              {"entries", std::move(entries)}};
}

}  // namespace qsym
