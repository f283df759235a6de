#pragma once

// Hand-built instances shared by the unit tests. Every matrix here is written
// out directly rather than produced by the library's constructors.

#include <cmath>

#include "qsym/numerics/cmatrix.hpp"
#include "qsym/qperm/quantum_permutation.hpp"

namespace fixtures {

using qsym::CMatrix;
using qsym::cplx;

inline CMatrix diag_p() { return CMatrix{{1, 0}, {0, 0}}; }

// Projection onto (1, 1)/sqrt(2).
inline CMatrix plus_p() { return CMatrix{{0.5, 0.5}, {0.5, 0.5}}; }

// Projection onto (1, i)/sqrt(2).
inline CMatrix circ_p() { return CMatrix{{0.5, cplx(0, -0.5)}, {cplx(0, 0.5), 0.5}}; }

// 4-point magic unitary [[p, 1-p, 0, 0], [1-p, p, 0, 0], [0, 0, q, 1-q], [0, 0, 1-q, q]].
inline qsym::QuantumPermutation two_block(const CMatrix& p, const CMatrix& q, qsym::Id offset = 0,
                                          qsym::IndexSet set = qsym::IndexSet::finite(4)) {
  const CMatrix one = CMatrix::identity(p.rows());
  const CMatrix zero = CMatrix::zero(p.rows(), p.rows());
  const CMatrix np = one - p;
  const CMatrix nq = one - q;
  return {set,
          p.rows(),
          {offset, offset + 1, offset + 2, offset + 3},
          {p, np, zero, zero, np, p, zero, zero, zero, zero, q, nq, zero, zero, nq, q}};
}

// Non-commuting entries: p = diag(1,0), q = projection onto (1,1)/sqrt(2).
inline qsym::QuantumPermutation nonclassical4() { return two_block(diag_p(), plus_p()); }

}  // namespace fixtures
