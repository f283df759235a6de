#pragma once

#include <cstddef>
#include <string>

#include "qsym/graphs/graph.hpp"
#include "qsym/numerics/tolerance.hpp"
#include "qsym/qperm/quantum_permutation.hpp"

namespace qsym {

// finitary: the identity tail is part of the claim, so the support must be
// closed under the vertices that tell moved pairs apart.
// window: the candidate is the restriction of a non-finitary quantum
// automorphism to its support; only support pairs are checked.
enum class CheckScope { finitary, window };

[[nodiscard]] std::string to_string(CheckScope s);
[[nodiscard]] CheckScope parse_check_scope(const std::string& s);

struct QAutCandidate {
  GraphPtr graph;
  QuantumPermutation qp;
  CheckScope scope = CheckScope::finitary;
};

// Builds a candidate, checking that the index set has the graph's points and
// the support consists of vertices. Throws DomainError.
[[nodiscard]] QAutCandidate make_candidate(GraphPtr graph, QuantumPermutation qp,
                                           CheckScope scope = CheckScope::finitary);
// Classical candidate; the permutation is not checked to be an automorphism.
[[nodiscard]] QAutCandidate classical_candidate(GraphPtr graph, const Permutation& perm);

struct QAutReport {
  bool ok = true;
  std::string failure;         // first failing constraint
  double worst_residual = 0.0;
  std::size_t products_checked = 0;

  void record(double residual, double threshold, const std::string& what);
  void fail(const std::string& what);
};

// u_{x1y1} u_{x2y2} = 0 whenever rel(x1,x2) != rel(y1,y2), over support pairs.
// In finitary scope also requires distinguishing(x, y) ⊆ support for every
// nonzero off-diagonal u_xy ("support not rel-closed" otherwise).
[[nodiscard]] QAutReport is_quantum_automorphism(const QAutCandidate& c, const Tolerance& tol = {});

// Same products for support 4-tuples with d(x1,x2) != d(y1,y2). Reports the
// precondition failure when the candidate is not a quantum automorphism.
[[nodiscard]] QAutReport distance_obstruction(const QAutCandidate& c, const Tolerance& tol = {});

// Largest ||[A, u]|| over the support block, A the adjacency matrix there
// (block matrices with d x d entries).
[[nodiscard]] double adjacency_commutator(const QAutCandidate& c);

}  // namespace qsym
