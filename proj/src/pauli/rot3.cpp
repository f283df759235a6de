#include "qsym/pauli/rot3.hpp"

#include "qsym/error.hpp"

namespace qsym {
namespace {

Rot3::Entries identity_entries() {
  Rot3::Entries e;
  for (std::size_t i = 0; i < 3; ++i) e[4 * i] = 1;
  return e;
}

Rot3::Entries diagonal(int a, int b, int c) {
  Rot3::Entries e;
  e[0] = a;
  e[4] = b;
  e[8] = c;
  return e;
}

}  // namespace

Rot3::Rot3() : e_(identity_entries()) {}

Rot3::Rot3(const Entries& entries) : e_(entries) {
  if (!is_rotation()) throw DomainError("not a rotation: " + to_string());
}

Rot3 Rot3::unchecked(const Entries& entries) { return {entries, NoCheck{}}; }

bool Rot3::is_rotation() const {
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      Rational dot;
      for (std::size_t k = 0; k < 3; ++k) dot = dot + (*this)(k, i) * (*this)(k, j);
      if (dot != Rational(i == j ? 1 : 0)) return false;
    }
  }
  const auto& m = *this;
  const Rational det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                       m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                       m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  return det == Rational(1);
}

Rot3 Rot3::transpose() const {
  Entries t;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) t[3 * j + i] = e_[3 * i + j];
  return {t, NoCheck{}};
}

std::string Rot3::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < 3; ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < 3; ++j) out += (j ? ", " : "") + e_[3 * i + j].to_string();
    out += "]";
  }
  return out + "]";
}

Rot3 operator*(const Rot3& a, const Rot3& b) {
  Rot3::Entries out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Rational acc;
      for (std::size_t k = 0; k < 3; ++k) {
        if (!a(i, k).is_zero() && !b(k, j).is_zero()) acc = acc + a(i, k) * b(k, j);
      }
      out[3 * i + j] = acc;
    }
  return {out, Rot3::NoCheck{}};
}

std::size_t Rot3Hash::operator()(const Rot3& g) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (const auto& r : g.entries()) {
    h ^= std::hash<std::int64_t>{}(r.num()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<std::int64_t>{}(r.den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

const std::array<Rot3, 4>& klein_d() {
  static const std::array<Rot3, 4> d = {Rot3(), Rot3(diagonal(1, -1, -1)), Rot3(diagonal(-1, 1, -1)),
                                        Rot3(diagonal(-1, -1, 1))};
  return d;
}

void to_json(json& j, const Rot3& g) {
  j = json::array();
  for (const auto& r : g.entries()) j.push_back(r.to_string());
}

Rot3 rot3_from_json(const json& j) {
  if (!j.is_array() || j.size() != 9) throw ParseError("rotation: expected 9 rational strings");
  Rot3::Entries e;
  for (std::size_t k = 0; k < 9; ++k) {
    if (j[k].is_string()) {
      e[k] = Rational::parse(j[k].get<std::string>());
    } else if (j[k].is_number_integer()) {
      e[k] = Rational(j[k].get<std::int64_t>());
    } else {
      throw ParseError("rotation: entry " + std::to_string(k) + " is not a rational");
    }
  }
  try {
    return Rot3(e);
  } catch (const DomainError& err) {
    throw ParseError(err.what());
  }
}

}  // namespace qsym
