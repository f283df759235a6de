#include "qsym/wreath/corep.hpp"

#include <algorithm>
#include <set>

#include "qsym/error.hpp"

namespace qsym {
namespace {

CMatrix counit_value(std::size_t gamma, const FiniteGroup& g, std::size_t dim) {
  return gamma == g.unit() ? CMatrix::identity(dim) : CMatrix::zero(dim, dim);
}

bool is_counit(const std::vector<CMatrix>& family, const FiniteGroup& g, std::size_t dim) {
  for (std::size_t gamma = 0; gamma < family.size(); ++gamma) {
    if (!(family[gamma] == counit_value(gamma, g, dim))) return false;
  }
  return true;
}

std::vector<Id> merged(std::vector<Id> a, const std::vector<Id>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

// Points y with u_xy possibly nonzero: the support, plus x itself.
std::vector<Id> row_partners(const QuantumPermutation& qp, Id x) {
  return merged(qp.support(), {x});
}

void require_compatible(const WreathCorep& a, const WreathCorep& b, const char* what) {
  if (!(a.group() == b.group())) throw DomainError(std::string(what) + ": groups differ");
  if (!(a.index_set() == b.index_set())) throw DomainError(std::string(what) + ": index sets differ");
}

}  // namespace

WreathCorep::WreathCorep(FiniteGroup group, QuantumPermutation qperm,
                         std::map<Id, std::vector<CMatrix>> spectral)
    : group_(std::move(group)), qperm_(std::move(qperm)), spectral_(std::move(spectral)) {
  for (const auto& [x, family] : spectral_) {
    if (!qperm_.index_set().contains(x)) {
      throw DomainError("wreath: spectral point " + std::to_string(x) + " is not in the index set");
    }
    if (family.size() != group_.order()) {
      throw ShapeError("wreath: spectral family needs one projection per group element");
    }
    for (const auto& p : family) {
      if (p.rows() != qperm_.dim() || p.cols() != qperm_.dim()) {
        throw ShapeError("wreath: spectral projection has the wrong size");
      }
    }
  }
}

WreathCorep WreathCorep::trivial(FiniteGroup group, IndexSet points, std::size_t dim) {
  return {std::move(group), QuantumPermutation::trivial(std::move(points), dim), {}};
}

WreathCorep WreathCorep::classical(FiniteGroup group, IndexSet points,
                                   const std::map<Id, std::size_t>& elements,
                                   const Permutation& perm) {
  std::map<Id, std::vector<CMatrix>> spectral;
  for (const auto& [x, g] : elements) {
    if (g >= group.order()) throw DomainError("wreath: group element out of range");
    if (g == group.unit()) continue;
    std::vector<CMatrix> family(group.order(), CMatrix::zero(1, 1));
    family[g] = CMatrix::identity(1);
    spectral[x] = std::move(family);
  }
  QuantumPermutation qp = from_permutation(points, perm);
  return {std::move(group), std::move(qp), std::move(spectral)};
}

CMatrix WreathCorep::projection(Id x, std::size_t gamma) const {
  if (gamma >= group_.order()) throw DomainError("wreath: group element out of range");
  const auto it = spectral_.find(x);
  return it == spectral_.end() ? counit_value(gamma, group_, dim()) : it->second[gamma];
}

std::vector<Id> WreathCorep::active_points() const {
  std::vector<Id> keys;
  for (const auto& [x, family] : spectral_) keys.push_back(x);
  return merged(keys, qperm_.support());
}

ValidationReport wreath_validate(const WreathCorep& w, const Tolerance& tol) {
  ValidationReport rep = validate(w.qperm(), tol);
  const std::size_t d = w.dim();
  const CMatrix one = CMatrix::identity(d);
  for (const auto& [x, family] : w.spectral()) {
    CMatrix sum(d, d);
    for (std::size_t gamma = 0; gamma < family.size(); ++gamma) {
      const CMatrix& p = family[gamma];
      const std::string at = std::to_string(x) + "," + std::to_string(gamma);
      if (!p.all_finite()) {
        rep.record(1.0, 0.0, "non-finite spectral entry " + at);
        continue;
      }
      rep.record(frobenius_distance(p, p.adjoint()), tol.eps_proj, "self-adjoint spectral " + at);
      rep.record(frobenius_distance(p * p, p), tol.eps_proj, "idempotent spectral " + at);
      sum += p;
      for (Id y : w.qperm().support()) {
        rep.record(frobenius_norm(commutator(p, w.qperm().entry(x, y))), tol.eps_proj,
                   "commutation " + at + " with row entry " + std::to_string(x) + "," +
                       std::to_string(y));
      }
    }
    rep.record(frobenius_distance(sum, one), tol.eps_proj, "spectral sum " + std::to_string(x));
  }
  return rep;
}

WreathCorep wreath_tensor(const WreathCorep& a, const WreathCorep& b) {
  require_compatible(a, b, "wreath_tensor");
  const FiniteGroup& g = a.group();
  const std::size_t dim = a.dim() * b.dim();
  std::map<Id, std::vector<CMatrix>> spectral;
  for (Id x : merged(a.active_points(), b.active_points())) {
    std::vector<CMatrix> family(g.order(), CMatrix::zero(dim, dim));
    for (Id y : row_partners(a.qperm(), x)) {
      const CMatrix uxy = a.qperm().entry(x, y);
      if (uxy.is_zero()) continue;
      for (std::size_t alpha = 0; alpha < g.order(); ++alpha) {
        const CMatrix left = uxy * a.projection(x, alpha);
        if (left.is_zero()) continue;
        for (std::size_t beta = 0; beta < g.order(); ++beta) {
          family[g.mul(alpha, beta)] += kron(left, b.projection(y, beta));
        }
      }
    }
    if (!is_counit(family, g, dim)) spectral[x] = std::move(family);
  }
  return {g, tensor(a.qperm(), b.qperm()), std::move(spectral)};
}

WreathCorep wreath_contragredient(const WreathCorep& w) {
  const FiniteGroup& g = w.group();
  const std::size_t d = w.dim();
  std::map<Id, std::vector<CMatrix>> spectral;
  for (Id x : w.active_points()) {
    std::vector<CMatrix> family(g.order(), CMatrix::zero(d, d));
    for (Id y : row_partners(w.qperm(), x)) {
      const CMatrix uyx = w.qperm().entry(y, x);
      if (uyx.is_zero()) continue;
      for (std::size_t gamma = 0; gamma < g.order(); ++gamma) {
        family[gamma] += w.projection(y, g.inverse(gamma)) * uyx;
      }
    }
    for (auto& p : family) p = p.conj();
    if (!is_counit(family, g, d)) spectral[x] = std::move(family);
  }
  return {g, contragredient(w.qperm()), std::move(spectral)};
}

double wreath_distance(const WreathCorep& a, const WreathCorep& b) {
  require_compatible(a, b, "wreath_distance");
  if (a.dim() != b.dim()) throw DomainError("wreath_distance: dimensions differ");
  double worst = entry_distance(a.qperm(), b.qperm());
  for (Id x : merged(a.active_points(), b.active_points())) {
    for (std::size_t gamma = 0; gamma < a.group().order(); ++gamma) {
      worst = std::max(worst, frobenius_distance(a.projection(x, gamma), b.projection(x, gamma)));
    }
  }
  return worst;
}

WreathFamilies wreath_paired_generators(const WreathCorep& a, const WreathCorep& b) {
  require_compatible(a, b, "wreath generators");
  WreathFamilies out;
  const std::vector<Id> points = merged(a.active_points(), b.active_points());
  for (Id x : points) {
    for (std::size_t gamma = 0; gamma < a.group().order(); ++gamma) {
      out.source.push_back(a.projection(x, gamma));
      out.target.push_back(b.projection(x, gamma));
    }
  }
  const std::vector<Id> support = merged(a.qperm().support(), b.qperm().support());
  for (Id x : support) {
    for (Id y : support) {
      out.source.push_back(a.qperm().entry(x, y));
      out.target.push_back(b.qperm().entry(x, y));
    }
  }
  return out;
}

namespace {

// max ||ev · T(a) − counit(a) · ev|| over the generators a of T.
double left_residual(const CMatrix& ev, const WreathCorep& t) {
  double worst = 0.0;
  for (Id x : t.active_points()) {
    for (std::size_t gamma = 0; gamma < t.group().order(); ++gamma) {
      const double eps = gamma == t.group().unit() ? 1.0 : 0.0;
      worst = std::max(worst, frobenius_distance(ev * t.projection(x, gamma), cplx(eps) * ev));
    }
  }
  for (Id x : t.qperm().support()) {
    for (Id y : t.qperm().support()) {
      const double delta = x == y ? 1.0 : 0.0;
      worst = std::max(worst, frobenius_distance(ev * t.qperm().entry(x, y), cplx(delta) * ev));
    }
  }
  return worst;
}

double right_residual(const CMatrix& db, const WreathCorep& t) {
  double worst = 0.0;
  for (Id x : t.active_points()) {
    for (std::size_t gamma = 0; gamma < t.group().order(); ++gamma) {
      const double eps = gamma == t.group().unit() ? 1.0 : 0.0;
      worst = std::max(worst, frobenius_distance(t.projection(x, gamma) * db, cplx(eps) * db));
    }
  }
  for (Id x : t.qperm().support()) {
    for (Id y : t.qperm().support()) {
      const double delta = x == y ? 1.0 : 0.0;
      worst = std::max(worst, frobenius_distance(t.qperm().entry(x, y) * db, cplx(delta) * db));
    }
  }
  return worst;
}

double zigzag(const CMatrix& ev, const CMatrix& db, std::size_t d) {
  const CMatrix one = CMatrix::identity(d);
  const CMatrix first = kron(one, ev) * kron(db, one);
  const CMatrix second = kron(ev, one) * kron(one, db);
  return std::max(frobenius_distance(first, one), frobenius_distance(second, one));
}

}  // namespace

EvDbCertificate wreath_evdb(const WreathCorep& w, const Tolerance& tol) {
  const std::size_t d = w.dim();
  EvDbCertificate c;
  c.ev = CMatrix(1, d * d);
  c.db = CMatrix(d * d, 1);
  for (std::size_t i = 0; i < d; ++i) {
    c.ev(0, i * d + i) = 1.0;
    c.db(i * d + i, 0) = 1.0;
  }
  const WreathCorep conj = wreath_contragredient(w);
  const WreathCorep conj_w = wreath_tensor(conj, w);
  const WreathCorep w_conj = wreath_tensor(w, conj);
  c.ev_residual = left_residual(c.ev, conj_w);
  c.db_residual = right_residual(c.db, w_conj);
  c.zigzag_residual = zigzag(c.ev, c.db, d);
  // Dual pair: the same matrices with the roles of w and its conjugate swapped.
  c.dual_ev_residual = left_residual(c.ev, w_conj);
  c.dual_db_residual = right_residual(c.db, conj_w);
  c.dual_zigzag_residual = zigzag(c.ev, c.db, d);
  const double limit = 10 * tol.eps_null;
  c.ok = c.ev_residual <= limit && c.db_residual <= limit && c.zigzag_residual <= limit &&
         c.dual_ev_residual <= limit && c.dual_db_residual <= limit &&
         c.dual_zigzag_residual <= limit;
  return c;
}

WreathFlags wreath_flags(const WreathCorep& w, const Tolerance& tol) {
  WreathFlags f;
  for (const auto& [x, family] : w.spectral()) {
    if (!is_counit(family, w.group(), w.dim())) ++f.spectral_support;
  }
  for (auto it = w.spectral().begin(); it != w.spectral().end(); ++it) {
    for (auto jt = std::next(it); jt != w.spectral().end(); ++jt) {
      for (const auto& p : it->second) {
        for (const auto& q : jt->second) {
          f.cross_commutator = std::max(f.cross_commutator, frobenius_norm(commutator(p, q)));
        }
      }
    }
  }
  f.half_liberated = f.cross_commutator <= tol.eps_proj && is_classical(w.qperm(), tol);
  return f;
}

}  // namespace qsym
