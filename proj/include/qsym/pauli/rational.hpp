#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace qsym {

// Exact rational with 64-bit numerator and denominator, kept in lowest
// terms with a positive denominator. Arithmetic throws OverflowError
// instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);  // NOLINT(google-explicit-constructor)

  [[nodiscard]] std::int64_t num() const noexcept { return num_; }
  [[nodiscard]] std::int64_t den() const noexcept { return den_; }
  [[nodiscard]] double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  [[nodiscard]] Rational abs() const { return {num_ < 0 ? -num_ : num_, den_}; }
  [[nodiscard]] bool is_zero() const noexcept { return num_ == 0; }

  // "p/q", or "p" when q = 1.
  [[nodiscard]] std::string to_string() const;
  // Accepts "p/q" or "p". Throws ParseError.
  static Rational parse(const std::string& text);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a) { return {-a.num_, a.den_}; }
  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace qsym
