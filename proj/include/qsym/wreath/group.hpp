#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsym/numerics/json.hpp"

namespace qsym {

// Finite group on elements 0..order-1 given by its multiplication table.
class FiniteGroup {
 public:
  // table[a * n + b] = a·b. Throws DomainError unless the group axioms hold.
  static FiniteGroup from_table(std::size_t order, std::vector<std::size_t> table);
  static FiniteGroup cyclic(std::size_t n);
  static FiniteGroup trivial() { return cyclic(1); }
  // Z/2 x Z/2 with elements encoded as two bits.
  static FiniteGroup klein();

  [[nodiscard]] std::size_t order() const noexcept { return order_; }
  [[nodiscard]] std::size_t unit() const noexcept { return unit_; }
  [[nodiscard]] std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * order_ + b]; }
  [[nodiscard]] std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  [[nodiscard]] const std::vector<std::size_t>& table() const noexcept { return table_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  std::size_t unit_ = 0;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
};

// {"order": n, "table": [[a·b for b] for a]}
void to_json(json& j, const FiniteGroup& g);
[[nodiscard]] FiniteGroup group_from_json(const json& j);

}  // namespace qsym
