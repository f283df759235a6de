#include "qsym/reptheory/line_audit.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

#include "qsym/error.hpp"
#include "qsym/numerics/linalg.hpp"

namespace qsym {
namespace {

// ||q p - p||: zero exactly when range(p) sits inside range(q).
double sub_residual(const CMatrix& p, const CMatrix& q) { return frobenius_distance(q * p, p); }

double orth_residual(const CMatrix& p, const CMatrix& q) { return frobenius_norm(p * q); }

const std::array<const char*, 14> kSteps = {"d1", "d2", "d3",    "d4",     "d5",     "d6",      "d7",
                                            "d8", "d9", "d10",   "d11",    "chain",  "commute", "induction"};

}  // namespace

CMatrix LineWindow::at(std::int64_t i, std::int64_t j) const {
  const auto it = entries.find({i, j});
  return it == entries.end() ? CMatrix::zero(dim, dim) : it->second;
}

LineWindow line_window_from_map(std::int64_t radius,
                                const std::function<std::int64_t(std::int64_t)>& f) {
  LineWindow w;
  w.radius = radius;
  w.dim = 1;
  for (std::int64_t j = -radius; j <= radius; ++j) {
    for (std::int64_t i = -radius; i <= radius; ++i) {
      w.entries[{i, j}] = CMatrix::scalar(f(j) == i ? 1.0 : 0.0);
    }
  }
  return w;
}

LineAuditReport audit_line_steps(const LineWindow& window, const Tolerance& tol) {
  LineAuditReport rep;
  const std::int64_t r = window.radius;
  const std::size_t d = window.dim;
  auto fail_pre = [&](const std::string& what, double residual) {
    if (rep.precondition_ok) {
      rep.precondition_ok = false;
      rep.precondition_failure = what;
    }
    rep.precondition_residual = std::max(rep.precondition_residual, residual);
  };

  if (r < 2 || d == 0) {
    fail_pre("window radius must be at least 2 and dimension positive", 0.0);
    return rep;
  }
  for (const auto& [key, m] : window.entries) {
    const auto [i, j] = key;
    const std::string at = std::to_string(i) + "," + std::to_string(j);
    if (std::max(std::abs(i), std::abs(j)) > r) {
      fail_pre("entry " + at + " outside the window", 0.0);
      continue;
    }
    if (m.rows() != d || m.cols() != d) {
      fail_pre("entry " + at + " has the wrong shape", 0.0);
      continue;
    }
    if (!is_projection(m, tol)) fail_pre("entry " + at + " is not a projection", 1.0);
  }
  if (!rep.precondition_ok) return rep;

  for (std::int64_t line = -r; line <= r; ++line) {
    for (std::int64_t a = -r; a <= r; ++a) {
      for (std::int64_t b = a + 1; b <= r; ++b) {
        const double row = orth_residual(window.at(line, a), window.at(line, b));
        if (row > tol.eps_proj) fail_pre("row orthogonality " + std::to_string(line), row);
        const double col = orth_residual(window.at(a, line), window.at(b, line));
        if (col > tol.eps_proj) fail_pre("column orthogonality " + std::to_string(line), col);
      }
    }
  }
  for (std::int64_t i = -r + 1; i <= r - 1; ++i) {
    for (std::int64_t j = -r + 1; j <= r - 1; ++j) {
      const double res = frobenius_distance(window.at(i, j + 1) + window.at(i, j - 1),
                                            window.at(i + 1, j) + window.at(i - 1, j));
      if (res > tol.eps_proj) {
        fail_pre("adjacency relation at " + std::to_string(i) + "," + std::to_string(j), res);
      }
    }
  }
  if (!rep.precondition_ok) return rep;

  std::map<std::string, double> worst;
  for (const char* s : kSteps) worst[s] = 0.0;
  auto note = [&](const char* step, double residual) {
    worst[step] = std::max(worst[step], residual);
  };

  const CMatrix one = CMatrix::identity(d);
  for (std::int64_t a = -r + 2; a <= r - 2; ++a) {
    for (std::int64_t b = -r + 1; b <= r - 1; ++b) {
      for (int sx : {1, -1}) {
        for (int sy : {1, -1}) {
          auto u = [&](std::int64_t di, std::int64_t dj) {
            return window.at(a + sx * di, b + sy * dj);
          };
          const CMatrix p00 = u(0, 0);
          const CMatrix p20 = u(2, 0);
          const CMatrix pm20 = u(-2, 0);
          const CMatrix p11 = u(1, 1);
          const CMatrix p1m = u(1, -1);
          const CMatrix pm1 = u(-1, 1);
          const CMatrix pmm = u(-1, -1);
          const CMatrix rest = one - (p11 + p1m);
          const CMatrix meet_00_11 = projection_meet(p00, p11, tol);
          const CMatrix meet_00_1m = projection_meet(p00, p1m, tol);
          const CMatrix meet_20_11 = projection_meet(p20, p11, tol);
          const CMatrix meet_20_1m = projection_meet(p20, p1m, tol);

          note("d1", orth_residual(p11, p1m));
          note("d2", std::max(orth_residual(pmm, p1m), sub_residual(pmm, p11 + rest)));
          note("d3", std::max(orth_residual(p00, pm20), sub_residual(pmm, p00 + pm20)));
          note("d4", sub_residual(pm20, rest));
          note("d5", std::max(orth_residual(p00, rest), sub_residual(pmm, p00 + rest)));
          note("d6", sub_residual(pmm, meet_00_11 + rest));
          note("d7", sub_residual(pm1, meet_00_1m + rest));
          note("d8", sub_residual(pm1 + pmm, meet_00_11 + meet_00_1m + rest));
          note("d9", std::max(sub_residual(p00, pm1 + pmm), sub_residual(p00, p11 + p1m)));
          note("d10", sub_residual(p00, meet_00_11 + meet_00_1m));
          note("d11", sub_residual(p20, meet_20_11 + meet_20_1m));
          note("chain", std::max(frobenius_distance(p11 + p1m, p00 + p20),
                                 frobenius_distance(p11 + p1m, meet_00_11 + meet_00_1m +
                                                                   meet_20_11 + meet_20_1m)));
          note("commute", std::max(frobenius_norm(commutator(p00, p11)),
                                   frobenius_norm(commutator(p00, p1m))));
        }
      }
      const CMatrix centre = window.at(a, b);
      for (const auto& [key, m] : window.entries) {
        note("induction", frobenius_norm(commutator(centre, m)));
      }
    }
  }

  for (const char* s : kSteps) {
    AuditStep step{s, worst[s] <= tol.eps_proj, worst[s]};
    if (!step.ok && rep.first_failure.empty()) rep.first_failure = s;
    rep.steps.push_back(step);
  }
  return rep;
}

}  // namespace qsym
