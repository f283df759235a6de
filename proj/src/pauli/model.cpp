#include "qsym/pauli/model.hpp"

#include <algorithm>
#include <array>

#include "qsym/error.hpp"
#include "qsym/numerics/linalg.hpp"
#include "qsym/reptheory/decompose.hpp"
#include "qsym/reptheory/intertwiner.hpp"

namespace qsym {
namespace {

constexpr double kFingerprintTol = 1e-8;
constexpr double kFusionResidual = 1e-8;

const cplx kI{0.0, 1.0};

// T(d_0) = 1, T(d_k) = t_k
CMatrix klein_operator(std::size_t k) {
  return k == 0 ? CMatrix::identity(2) : pauli_matrices()[k - 1];
}

std::size_t klein_index(const Rot3& d) {
  const auto& ds = klein_d();
  for (std::size_t k = 0; k < 4; ++k)
    if (ds[k] == d) return k;
  throw DomainError("not an element of the Klein subgroup: " + d.to_string());
}

}  // namespace

const std::array<CMatrix, 3>& pauli_matrices() {
  static const std::array<CMatrix, 3> t = {
      CMatrix{{kI, 0.0}, {0.0, -kI}},
      CMatrix{{0.0, 1.0}, {-1.0, 0.0}},
      CMatrix{{0.0, -kI}, {-kI, 0.0}},
  };
  return t;
}

EvalRep eval_rep_unchecked(const Rot3& g) {
  const auto& t = pauli_matrices();
  EvalRep r{g, {}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r.v[3 * i + j] = g.value(i, j) * kron(t[i], t[j]);
  return r;
}

EvalRep eval_rep(const Rot3& g) {
  if (!g.is_rotation()) throw DomainError("eval_rep: not a rotation: " + g.to_string());
  return eval_rep_unchecked(g);
}

RelationReport verify_relations(const std::vector<CMatrix>& v, const Tolerance& tol) {
  if (v.size() != 9) throw ShapeError("verify_relations: expected 9 generators");
  const std::size_t n = v[0].rows();
  for (const auto& m : v) {
    if (m.rows() != n || m.cols() != n) throw ShapeError("verify_relations: generators differ in shape");
  }
  auto at = [&](std::size_t i, std::size_t j) -> const CMatrix& { return v[3 * i + j]; };
  const CMatrix one = CMatrix::identity(n);
  RelationReport r;

  for (const auto& m : v) r.self_adjoint = std::max(r.self_adjoint, frobenius_distance(m, m.adjoint()));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 3; ++k) {
        if (j == k) continue;
        r.anticommute = std::max(r.anticommute, frobenius_norm(at(i, j) * at(i, k) + at(i, k) * at(i, j)));
        r.anticommute = std::max(r.anticommute, frobenius_norm(at(j, i) * at(k, i) + at(k, i) * at(j, i)));
      }
    }
  }
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l)
          if (i != k && j != l) r.commute = std::max(r.commute, frobenius_norm(commutator(at(i, j), at(k, l))));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      CMatrix rows = CMatrix::zero(n, n);
      CMatrix cols = CMatrix::zero(n, n);
      for (std::size_t k = 0; k < 3; ++k) {
        rows += at(i, k) * at(j, k);
        cols += at(k, i) * at(k, j);
      }
      if (i == j) {
        rows -= one;
        cols -= one;
      }
      r.orthogonal = std::max({r.orthogonal, frobenius_norm(rows), frobenius_norm(cols)});
    }
  }
  std::array<std::size_t, 3> perm{0, 1, 2};
  CMatrix sum = CMatrix::zero(n, n);
  do {
    sum += at(0, perm[0]) * at(1, perm[1]) * at(2, perm[2]);
  } while (std::next_permutation(perm.begin(), perm.end()));
  r.s3_sum = frobenius_norm(sum - one);

  const std::array<std::pair<const char*, double>, 5> parts = {{{"self-adjoint", r.self_adjoint},
                                                                {"anticommutation", r.anticommute},
                                                                {"commutation", r.commute},
                                                                {"orthogonality", r.orthogonal},
                                                                {"S3 sum", r.s3_sum}}};
  for (const auto& [name, value] : parts) {
    r.worst_residual = std::max(r.worst_residual, value);
    if (value > tol.eps_proj && r.ok) {
      r.ok = false;
      r.failure = name;
    }
  }
  return r;
}

IdentityDecomposition decompose_identity_rep() {
  const auto& t = pauli_matrices();
  const auto& ds = klein_d();
  IdentityDecomposition out{{}, ds};
  const CMatrix one = CMatrix::identity(4);
  for (std::size_t k = 0; k < 4; ++k) {
    CMatrix p = one;
    for (std::size_t i = 0; i < 3; ++i) {
      // joint eigenspace of t_i ⊗ t_i with eigenvalue (d_k)_ii
      p = p * (0.5 * (one + ds[k].value(i, i) * kron(t[i], t[i])));
    }
    out.projections[k] = std::move(p);
  }
  return out;
}

std::vector<Rot3> orbit(const Rot3& g) {
  std::vector<Rot3> out;
  for (const auto& c : klein_d())
    for (const auto& d : klein_d()) out.push_back(c * g * d);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rot3 canonical(const Rot3& g) { return orbit(g).front(); }

bool same_packet(const Rot3& g, const Rot3& h) {
  for (std::size_t k = 0; k < 9; ++k)
    if (g.entries()[k].abs() != h.entries()[k].abs()) return false;
  return true;
}

std::optional<CMatrix> equiv_intertwiner(const Rot3& g, const Rot3& h) {
  const auto& ds = klein_d();
  for (std::size_t c = 0; c < 4; ++c) {
    for (std::size_t d = 0; d < 4; ++d) {
      if (!(ds[c] * g * ds[d] == h)) continue;
      // (t_c ⊗ t_d) π_g (t_c ⊗ t_d)* = π_{c g d}
      return kron(klein_operator(c), klein_operator(d));
    }
  }
  return std::nullopt;
}

std::vector<CMatrix> fusion_tensor(const std::vector<CMatrix>& a, const std::vector<CMatrix>& b) {
  if (a.size() != 9 || b.size() != 9) throw ShapeError("fusion_tensor: expected 9 generators each");
  std::vector<CMatrix> out;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      CMatrix acc = CMatrix::zero(a[0].rows() * b[0].rows(), a[0].cols() * b[0].cols());
      for (std::size_t k = 0; k < 3; ++k) acc += kron(a[3 * i + k], b[3 * k + j]);
      out.push_back(std::move(acc));
    }
  }
  return out;
}

FusionResult fuse(const Rot3& g, const Rot3& h, const Tolerance& tol, std::uint64_t seed) {
  FusionResult res;
  res.tensor = fusion_tensor(eval_rep(g).family(), eval_rep(h).family());
  const IdentityDecomposition id = decompose_identity_rep();
  const CMatrix one2 = CMatrix::identity(2);
  res.ok = true;
  for (std::size_t k = 0; k < 4; ++k) {
    FusionBlock& b = res.blocks[k];
    b.product = g * id.characters[k] * h;
    b.isometry = kron({one2, range_basis(id.projections[k]), one2});
    const CMatrix va = b.isometry.adjoint();
    for (const auto& m : res.tensor) b.block.push_back(va * m * b.isometry);
    const std::vector<CMatrix> target = eval_rep(b.product).family();
    const auto u = unitary_intertwiner(b.block, 4, target, 4, tol, seed + k);
    if (u) {
      b.residual = intertwining_residual(*u, b.block, target);
      b.certified = b.residual <= kFusionResidual;
    }
    res.total_dim += b.isometry.cols();
    res.ok = res.ok && b.certified;
  }
  res.ok = res.ok && res.total_dim == 16;
  return res;
}

std::vector<cplx> trace_fingerprint(const std::vector<CMatrix>& v) {
  std::vector<cplx> out;
  for (const auto& a : v) out.push_back(a.trace());
  for (const auto& a : v)
    for (const auto& b : v) out.push_back((a * b).trace());
  return out;
}

bool equivalent(const Irreducible& a, const Irreducible& b, const Tolerance& tol, std::uint64_t seed) {
  if (a.dim != b.dim) return false;
  for (std::size_t k = 0; k < a.fingerprint.size(); ++k) {
    if (std::abs(a.fingerprint[k] - b.fingerprint[k]) > kFingerprintTol) return false;
  }
  return unitary_intertwiner(a.v, a.dim, b.v, b.dim, tol, seed).has_value();
}

std::vector<Irreducible> packet_irreducibles(const Rot3& g, const Tolerance& tol, std::uint64_t seed) {
  std::vector<Irreducible> out;
  for (auto& c : decompose_family(eval_rep(g).family(), 4, tol, seed)) {
    Irreducible irr{g, c.dim, std::move(c.family), {}};
    irr.fingerprint = trace_fingerprint(irr.v);
    out.push_back(std::move(irr));
  }
  return out;
}

std::optional<std::vector<std::size_t>> cross_realise(const std::vector<Irreducible>& at_g,
                                                      const std::vector<Irreducible>& at_h, const Tolerance& tol) {
  if (at_g.size() != at_h.size()) return std::nullopt;
  std::vector<std::size_t> match(at_g.size());
  std::vector<bool> used(at_h.size(), false);
  for (std::size_t i = 0; i < at_g.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < at_h.size() && !found; ++j) {
      if (!used[j] && equivalent(at_g[i], at_h[j], tol)) {
        used[j] = true;
        match[i] = j;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return match;
}

}  // namespace qsym
