#pragma once

#include <optional>
#include <string>

namespace qsym {

struct Tolerance {
  double eps_proj = 1e-9;   // projection / magic-unitary defects
  double eps_null = 1e-8;   // relative singular-value cutoff
  double eps_equal = 1e-12; // "exactly equal" up to rounding

  // Throws DomainError unless 0 < eps_equal <= min(eps_null, eps_proj) and
  // eps_proj, eps_null <= 1e-3.
  void check() const;

  // Default tolerance, with eps_proj taken from QPERM_TOL when that is set.
  static Tolerance from_env();

  // Default tolerance with eps_proj replaced; checked.
  static Tolerance with_proj(double eps_proj);
};

}  // namespace qsym
