#include "qsym/numerics/tolerance.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "qsym/error.hpp"

namespace qsym {

void Tolerance::check() const {
  auto bad = [](double v) { return !std::isfinite(v) || v <= 0.0; };
  if (bad(eps_proj) || bad(eps_null) || bad(eps_equal))
    throw DomainError("tolerance: every epsilon must be finite and positive");
  if (eps_proj > 1e-3 || eps_null > 1e-3) throw DomainError("tolerance: epsilon above 1e-3");
  if (eps_equal > eps_null || eps_equal > eps_proj)
    throw DomainError("tolerance: eps_equal must not exceed eps_null or eps_proj");
}

Tolerance Tolerance::with_proj(double eps_proj) {
  Tolerance t;
  t.eps_proj = eps_proj;
  t.check();
  return t;
}

Tolerance Tolerance::from_env() {
  const char* env = std::getenv("QPERM_TOL");
  if (env == nullptr || *env == '\0') return {};
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0') throw ParseError(std::string("QPERM_TOL: not a number: ") + env);
  return with_proj(v);
}

}  // namespace qsym
