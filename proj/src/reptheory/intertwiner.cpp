#include "qsym/reptheory/intertwiner.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "qsym/error.hpp"
#include "qsym/numerics/linalg.hpp"

namespace qsym {
namespace {

bool is_scalar_identity(const CMatrix& m, cplx& value) {
  if (!m.is_square() || m.empty()) return false;
  value = m(0, 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) != (i == j ? value : cplx{})) return false;
    }
  }
  return true;
}

// Pairs where T a = b T holds for every T carry no information.
bool trivially_satisfied(const CMatrix& a, const CMatrix& b) {
  cplx va;
  cplx vb;
  return is_scalar_identity(a, va) && is_scalar_identity(b, vb) && va == vb;
}

void check_family(const MatrixFamily& family, std::size_t dim, const char* what) {
  for (const auto& m : family) {
    if (m.rows() != dim || m.cols() != dim) {
      throw ShapeError(std::string("intertwiners: ") + what + " element has the wrong shape");
    }
  }
}

}  // namespace

IntertwinerBasis intertwiners(const MatrixFamily& source, std::size_t source_dim,
                              const MatrixFamily& target, std::size_t target_dim,
                              const Tolerance& tol) {
  if (source.size() != target.size()) {
    throw ShapeError("intertwiners: families differ in length");
  }
  check_family(source, source_dim, "source");
  check_family(target, target_dim, "target");

  const std::size_t m = target_dim;
  const std::size_t n = source_dim;
  IntertwinerBasis out;
  out.source_dim = n;
  out.target_dim = m;
  if (m == 0 || n == 0) return out;

  std::vector<std::size_t> active;
  for (std::size_t k = 0; k < source.size(); ++k) {
    if (!trivially_satisfied(source[k], target[k])) active.push_back(k);
  }

  const std::size_t unknowns = m * n;
  CMatrix basis;
  if (active.empty()) {
    basis = CMatrix::identity(unknowns);
  } else {
    // Row (r, c) of block k encodes (T a_k - b_k T)_{rc} with T row-major.
    CMatrix system(active.size() * unknowns, unknowns);
    std::size_t row0 = 0;
    for (std::size_t k : active) {
      const CMatrix& a = source[k];
      const CMatrix& b = target[k];
      for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          const std::size_t row = row0 + r * n + c;
          for (std::size_t cc = 0; cc < n; ++cc) system(row, r * n + cc) += a(cc, c);
          for (std::size_t rr = 0; rr < m; ++rr) system(row, rr * n + c) -= b(r, rr);
        }
      }
      row0 += unknowns;
    }
    // Cutoff relative to the operator scale but never below eps_null itself:
    // families that agree up to rounding give a system of norm ~1e-17, whose
    // singular values must still count as zero.
    const Svd s = svd(system);
    const double cutoff = tol.eps_null * std::max(1.0, s.values.empty() ? 0.0 : s.values.front());
    std::size_t rank = 0;
    while (rank < s.values.size() && s.values[rank] > cutoff) ++rank;
    basis = s.v.columns(rank, unknowns - rank);
  }

  out.basis.reserve(basis.cols());
  for (std::size_t col = 0; col < basis.cols(); ++col) {
    CMatrix t(m, n);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < n; ++c) t(r, c) = basis(r * n + c, col);
    }
    out.basis.push_back(std::move(t));
  }
  return out;
}

double intertwining_residual(const CMatrix& t, const MatrixFamily& source,
                             const MatrixFamily& target) {
  if (source.size() != target.size()) {
    throw ShapeError("intertwining_residual: families differ in length");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < source.size(); ++k) {
    worst = std::max(worst, frobenius_distance(t * source[k], target[k] * t));
  }
  return worst;
}

std::optional<CMatrix> unitary_intertwiner(const MatrixFamily& source, std::size_t source_dim,
                                           const MatrixFamily& target, std::size_t target_dim,
                                           const Tolerance& tol, std::uint64_t seed) {
  if (source_dim != target_dim) return std::nullopt;
  if (source_dim == 0) return CMatrix(0, 0);
  const IntertwinerBasis space = intertwiners(source, source_dim, target, target_dim, tol);
  if (space.basis.empty()) return std::nullopt;

  constexpr int kAttempts = 8;
  constexpr double kUnitarityLimit = 1e-6;
  Rng rng(seed);
  std::normal_distribution<double> gauss;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    CMatrix x(target_dim, source_dim);
    if (attempt == 0 && space.basis.size() == 1) {
      x = space.basis.front();
    } else {
      for (const auto& t : space.basis) x.add_scaled(cplx(gauss(rng), gauss(rng)), t);
    }
    const Svd s = svd(x);
    if (s.values.empty() || s.values.back() <= 1e-6 * s.values.front()) continue;
    CMatrix u = polar_unitary(x);
    // Remove the arbitrary global phase so that a scalar answer comes out as 1.
    const cplx tr = u.trace();
    if (std::abs(tr) > 1e-6) u *= std::conj(tr) / std::abs(tr);
    if (unitarity_defect(u) > std::min(kUnitarityLimit, tol.eps_proj * 10 * source_dim)) continue;
    if (intertwining_residual(u, source, target) > 10 * tol.eps_null) continue;
    return u;
  }
  return std::nullopt;
}

PairedFamilies paired_entries(const QuantumPermutation& sigma, const QuantumPermutation& tau) {
  if (!(sigma.index_set() == tau.index_set())) {
    throw DomainError("intertwiner: quantum permutations live on different index sets");
  }
  std::vector<Id> joint = sigma.support();
  joint.insert(joint.end(), tau.support().begin(), tau.support().end());
  std::sort(joint.begin(), joint.end());
  joint.erase(std::unique(joint.begin(), joint.end()), joint.end());

  PairedFamilies out;
  for (Id x : joint) {
    for (Id y : joint) {
      const bool in_sigma = sigma.in_support(x) && sigma.in_support(y);
      const bool in_tau = tau.in_support(x) && tau.in_support(y);
      if (!in_sigma && !in_tau) continue;  // both tails
      out.source.push_back(sigma.entry(x, y));
      out.target.push_back(tau.entry(x, y));
    }
  }
  return out;
}

MatrixFamily entry_family(const QuantumPermutation& qp) {
  MatrixFamily out;
  for (const auto& e : qp.entries()) {
    cplx v;
    if (is_scalar_identity(e, v)) continue;
    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
  }
  return out;
}

IntertwinerBasis intertwiner_space(const QuantumPermutation& sigma, const QuantumPermutation& tau,
                                   const Tolerance& tol) {
  const PairedFamilies fam = paired_entries(sigma, tau);
  return intertwiners(fam.source, sigma.dim(), fam.target, tau.dim(), tol);
}

bool is_irreducible(const MatrixFamily& family, std::size_t dim, const Tolerance& tol) {
  if (dim == 0) return false;
  return intertwiners(family, dim, family, dim, tol).dimension() == 1;
}

bool is_irreducible(const QuantumPermutation& qp, const Tolerance& tol) {
  return is_irreducible(entry_family(qp), qp.dim(), tol);
}

std::optional<CMatrix> unitarily_equivalent(const QuantumPermutation& sigma,
                                            const QuantumPermutation& tau, const Tolerance& tol,
                                            std::uint64_t seed) {
  if (!(sigma.index_set() == tau.index_set())) return std::nullopt;
  const PairedFamilies fam = paired_entries(sigma, tau);
  return unitary_intertwiner(fam.source, sigma.dim(), fam.target, tau.dim(), tol, seed);
}

std::size_t generated_algebra_dimension(const MatrixFamily& generators, std::size_t max_length,
                                        const Tolerance& tol) {
  if (generators.empty() && max_length == 0) return 1;
  std::size_t dim = 0;
  if (!generators.empty()) {
    dim = generators.front().rows();
  }
  check_family(generators, dim, "generator");
  if (dim == 0) return 0;

  std::vector<CMatrix> basis;  // Frobenius-orthonormal
  auto absorb = [&](CMatrix w) -> bool {
    const double norm = frobenius_norm(w);
    if (norm == 0.0) return false;
    w *= cplx(1.0 / norm);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) w.add_scaled(-frobenius_inner(b, w), b);
    }
    const double rest = frobenius_norm(w);
    if (rest <= tol.eps_null) return false;
    w *= cplx(1.0 / rest);
    basis.push_back(std::move(w));
    return true;
  };

  std::vector<CMatrix> frontier;
  CMatrix one = CMatrix::identity(dim);
  absorb(one);
  frontier.push_back(std::move(one));
  const std::size_t full = dim * dim;
  for (std::size_t len = 1; len <= max_length && !frontier.empty() && basis.size() < full; ++len) {
    std::vector<CMatrix> next;
    for (const auto& w : frontier) {
      for (const auto& g : generators) {
        CMatrix word = w * g;
        if (absorb(word)) next.push_back(basis.back());
        if (basis.size() == full) break;
      }
      if (basis.size() == full) break;
    }
    frontier = std::move(next);
  }
  return basis.size();
}

}  // namespace qsym
