#include "qsym/reptheory/decompose.hpp"

#include <cmath>
#include <random>

#include "qsym/error.hpp"
#include "qsym/numerics/linalg.hpp"

namespace qsym {
namespace {

constexpr double kEigenGap = 1e-6;
constexpr int kSplitAttempts = 8;

struct Piece {
  MatrixFamily family;
  CMatrix isometry;
};

MatrixFamily compress_family(const MatrixFamily& family, const CMatrix& v) {
  MatrixFamily out;
  out.reserve(family.size());
  const CMatrix vt = v.adjoint();
  for (const auto& a : family) out.push_back(vt * a * v);
  return out;
}

void split(const MatrixFamily& family, std::size_t dim, const CMatrix& embedding,
           const Tolerance& tol, Rng& rng, std::vector<Piece>& out) {
  const IntertwinerBasis commutant = intertwiners(family, dim, family, dim, tol);
  if (commutant.dimension() <= 1) {
    out.push_back({family, embedding});
    return;
  }
  std::normal_distribution<double> gauss;
  for (int attempt = 0; attempt < kSplitAttempts; ++attempt) {
    CMatrix x(dim, dim);
    for (const auto& t : commutant.basis) x.add_scaled(cplx(gauss(rng), gauss(rng)), t);
    const CMatrix h = x + x.adjoint();
    const double scale = frobenius_norm(h);
    if (scale == 0.0) continue;
    const HermitianEigen eig = hermitian_eigen(h * cplx(1.0 / scale));

    std::vector<std::pair<std::size_t, std::size_t>> groups;  // [first, last)
    std::size_t first = 0;
    for (std::size_t i = 1; i <= dim; ++i) {
      if (i == dim || eig.values[i] - eig.values[i - 1] > kEigenGap) {
        groups.emplace_back(first, i);
        first = i;
      }
    }
    if (groups.size() < 2) continue;
    for (auto [lo, hi] : groups) {
      const CMatrix v = eig.vectors.columns(lo, hi - lo);
      split(compress_family(family, v), hi - lo, embedding * v, tol, rng, out);
    }
    return;
  }
  throw ConsistencyError("decompose: commutant is not trivial but no split was found");
}

bool traces_match(const MatrixFamily& a, const MatrixFamily& b, std::size_t dim) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (std::abs(a[k].trace() - b[k].trace()) > 1e-6 * static_cast<double>(dim)) return false;
  }
  return true;
}

}  // namespace

std::vector<FamilyComponent> decompose_family(const MatrixFamily& family, std::size_t dim,
                                              const Tolerance& tol, std::uint64_t seed) {
  std::vector<FamilyComponent> out;
  if (dim == 0) return out;
  Rng rng(seed);
  std::vector<Piece> pieces;
  split(family, dim, CMatrix::identity(dim), tol, rng, pieces);

  for (auto& piece : pieces) {
    const std::size_t d = piece.isometry.cols();
    bool placed = false;
    for (auto& comp : out) {
      if (comp.dim != d || !traces_match(comp.family, piece.family, d)) continue;
      const auto u = unitary_intertwiner(comp.family, d, piece.family, d, tol, seed);
      if (!u) continue;
      comp.isometries.push_back(piece.isometry * *u);
      ++comp.multiplicity;
      placed = true;
      break;
    }
    if (!placed) {
      out.push_back({std::move(piece.family), d, 1, {piece.isometry}});
    }
  }
  return out;
}

QuantumPermutation compress(const QuantumPermutation& qp, const CMatrix& isometry) {
  if (isometry.rows() != qp.dim()) throw ShapeError("compress: isometry has the wrong height");
  return QuantumPermutation(qp.index_set(), isometry.cols(), qp.support(),
                            compress_family(qp.entries(), isometry));
}

std::vector<Component> decompose(const QuantumPermutation& qp, const Tolerance& tol,
                                 std::uint64_t seed) {
  const MatrixFamily family = entry_family(qp);
  std::vector<Component> out;
  for (auto& comp : decompose_family(family, qp.dim(), tol, seed)) {
    QuantumPermutation piece = trim_support(compress(qp, comp.isometries.front()), tol);
    out.push_back({std::move(piece), comp.multiplicity, std::move(comp.isometries)});
  }
  return out;
}

QuantumPermutation reassemble(const std::vector<Component>& components) {
  if (components.empty()) throw DomainError("reassemble: no components");
  std::optional<QuantumPermutation> acc;
  for (const auto& comp : components) {
    for (std::size_t k = 0; k < comp.multiplicity; ++k) {
      acc = acc ? direct_sum(*acc, comp.irreducible) : comp.irreducible;
    }
  }
  return *acc;
}

}  // namespace qsym
