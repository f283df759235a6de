#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qsym/numerics/cmatrix.hpp"
#include "qsym/numerics/tolerance.hpp"

namespace qsym {

// Projections u_ij for i, j in [-radius, radius] on the integer line graph.
// Missing entries count as zero.
struct LineWindow {
  std::int64_t radius = 0;
  std::size_t dim = 0;
  std::map<std::pair<std::int64_t, std::int64_t>, CMatrix> entries;

  [[nodiscard]] CMatrix at(std::int64_t i, std::int64_t j) const;
};

// Classical bijection of Z restricted to the window: u_ij = 1 iff i = f(j).
[[nodiscard]] LineWindow line_window_from_map(std::int64_t radius,
                                              const std::function<std::int64_t(std::int64_t)>& f);

struct AuditStep {
  std::string step;
  bool ok = true;
  double residual = 0.0;
};

struct LineAuditReport {
  bool precondition_ok = true;
  std::string precondition_failure;  // first violated relation
  double precondition_residual = 0.0;
  std::vector<AuditStep> steps;      // d1..d11, chain, commute, induction; empty when the precondition fails
  std::string first_failure;         // first failing step, empty when all pass

  [[nodiscard]] bool ok() const { return precondition_ok && first_failure.empty(); }
};

// Checks the window input (projections, line orthogonality, the adjacency
// relation u_{i,j+1} + u_{i,j-1} = u_{i+1,j} + u_{i-1,j} where all four
// entries are inside) and then every step of the commutation argument at
// each centre that has the needed neighbours, in all four reflections.
[[nodiscard]] LineAuditReport audit_line_steps(const LineWindow& window, const Tolerance& tol = {});

}  // namespace qsym
