#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "qsym/numerics/json.hpp"
#include "qsym/pauli/rational.hpp"

namespace qsym {

// Exact rational 3x3 rotation, row-major.
class Rot3 {
 public:
  using Entries = std::array<Rational, 9>;

  Rot3();  // identity
  // Throws DomainError unless gᵀg = 1 and det g = 1 exactly.
  explicit Rot3(const Entries& entries);
  // Skips the rotation check (for constructing violations in tests and tools).
  static Rot3 unchecked(const Entries& entries);

  [[nodiscard]] const Rational& operator()(std::size_t i, std::size_t j) const { return e_[3 * i + j]; }
  [[nodiscard]] const Entries& entries() const noexcept { return e_; }
  [[nodiscard]] double value(std::size_t i, std::size_t j) const { return e_[3 * i + j].to_double(); }
  [[nodiscard]] bool is_rotation() const;

  [[nodiscard]] Rot3 transpose() const;  // the inverse
  [[nodiscard]] std::string to_string() const;

  friend Rot3 operator*(const Rot3& a, const Rot3& b);
  friend bool operator==(const Rot3&, const Rot3&) = default;
  // Lexicographic on the flattened entries.
  friend std::strong_ordering operator<=>(const Rot3& a, const Rot3& b) { return a.e_ <=> b.e_; }

 private:
  struct NoCheck {};
  Rot3(const Entries& entries, NoCheck) : e_(entries) {}
  Entries e_;
};

struct Rot3Hash {
  std::size_t operator()(const Rot3& g) const noexcept;
};

// d_0 = 1 and d_k = rotation by π about the k-th axis (+1 at k, -1 elsewhere).
[[nodiscard]] const std::array<Rot3, 4>& klein_d();

// 9 strings "p/q", row-major.
void to_json(json& j, const Rot3& g);
[[nodiscard]] Rot3 rot3_from_json(const json& j);

}  // namespace qsym
