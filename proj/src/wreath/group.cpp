#include "qsym/wreath/group.hpp"

#include "qsym/error.hpp"

namespace qsym {

FiniteGroup FiniteGroup::from_table(std::size_t order, std::vector<std::size_t> table) {
  if (order == 0) throw DomainError("group: order must be positive");
  if (table.size() != order * order) throw DomainError("group: table must have order^2 entries");
  for (std::size_t v : table) {
    if (v >= order) throw DomainError("group: table entry out of range");
  }
  FiniteGroup g;
  g.order_ = order;
  g.table_ = std::move(table);

  bool found = false;
  for (std::size_t e = 0; e < order && !found; ++e) {
    bool unit = true;
    for (std::size_t a = 0; a < order && unit; ++a) unit = g.mul(e, a) == a && g.mul(a, e) == a;
    if (unit) {
      g.unit_ = e;
      found = true;
    }
  }
  if (!found) throw DomainError("group: no unit element");
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      for (std::size_t c = 0; c < order; ++c) {
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
          throw DomainError("group: multiplication is not associative");
        }
      }
    }
  }
  g.inverse_.assign(order, order);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      if (g.mul(a, b) == g.unit_ && g.mul(b, a) == g.unit_) g.inverse_[a] = b;
    }
    if (g.inverse_[a] == order) throw DomainError("group: element without inverse");
  }
  return g;
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  std::vector<std::size_t> t(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  }
  return from_table(n, std::move(t));
}

FiniteGroup FiniteGroup::klein() {
  std::vector<std::size_t> t(16);
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) t[a * 4 + b] = a ^ b;
  }
  return from_table(4, std::move(t));
}

void to_json(json& j, const FiniteGroup& g) {
  json rows = json::array();
  for (std::size_t a = 0; a < g.order(); ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    rows.push_back(row);
  }
  j = json{{"order", g.order()}, {"table", rows}};
}

FiniteGroup group_from_json(const json& j) {
  try {
    if (j.contains("cyclic")) return FiniteGroup::cyclic(j.at("cyclic").get<std::size_t>());
    const auto n = j.at("order").get<std::size_t>();
    std::vector<std::size_t> table;
    for (const auto& row : j.at("table")) {
      if (row.size() != n) throw ParseError("group: table rows must have `order` entries");
      for (const auto& v : row) table.push_back(v.get<std::size_t>());
    }
    return FiniteGroup::from_table(n, std::move(table));
  } catch (const json::exception& e) {
    throw ParseError(std::string("group: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("group: ") + e.what());
  }
}

}  // namespace qsym
