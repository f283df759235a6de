#include "qsym/qaut/candidate.hpp"

#include <algorithm>

#include "qsym/error.hpp"
#include "qsym/numerics/linalg.hpp"

namespace qsym {
namespace {

bool same_points(const IndexSet& a, const IndexSet& b) {
  return a.kind() == b.kind() && (!a.is_finite() || a.size() == b.size());
}

std::string pair_name(Id a, Id b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

// Nonzero support entries with their positions; zero entries never fail a product check.
struct Block {
  std::vector<Id> support;
  std::vector<const CMatrix*> entry;  // nullptr when zero
};

Block nonzero_block(const QuantumPermutation& qp) {
  Block b{qp.support(), {}};
  const std::size_t n = qp.support_size();
  b.entry.resize(n * n, nullptr);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!qp.local(i, j).is_zero()) b.entry[i * n + j] = &qp.local(i, j);
    }
  }
  return b;
}

// Checks u_{x1y1}u_{x2y2} = 0 whenever label(x1,x2) != label(y1,y2).
template <typename Label>
void check_products(const QuantumPermutation& qp, const std::vector<Label>& labels,
                    const Tolerance& tol, const char* what, QAutReport& rep) {
  const Block b = nonzero_block(qp);
  const std::size_t n = b.support.size();
  for (std::size_t x1 = 0; x1 < n; ++x1) {
    for (std::size_t y1 = 0; y1 < n; ++y1) {
      const CMatrix* a = b.entry[x1 * n + y1];
      if (a == nullptr) continue;
      for (std::size_t x2 = 0; x2 < n; ++x2) {
        for (std::size_t y2 = 0; y2 < n; ++y2) {
          const CMatrix* c = b.entry[x2 * n + y2];
          if (c == nullptr || labels[x1 * n + x2] == labels[y1 * n + y2]) continue;
          ++rep.products_checked;
          rep.record(frobenius_norm(*a * *c), tol.eps_proj,
                     std::string(what) + " product u" + pair_name(b.support[x1], b.support[y1]) + " u" +
                         pair_name(b.support[x2], b.support[y2]));
        }
      }
    }
  }
}

}  // namespace

std::string to_string(CheckScope s) { return s == CheckScope::finitary ? "finitary" : "window"; }

CheckScope parse_check_scope(const std::string& s) {
  if (s == "finitary") return CheckScope::finitary;
  if (s == "window") return CheckScope::window;
  throw ParseError("unknown check scope '" + s + "'");
}

QAutCandidate make_candidate(GraphPtr graph, QuantumPermutation qp, CheckScope scope) {
  if (!graph) throw DomainError("candidate: missing graph");
  if (!same_points(graph->index_set(), qp.index_set())) {
    throw DomainError("candidate: index set " + qp.index_set().describe() + " does not match " +
                      graph->name());
  }
  for (Id v : qp.support()) {
    if (!graph->contains(v)) throw DomainError("candidate: " + std::to_string(v) + " is not a vertex");
  }
  // adopt the graph's labelled index set
  if (!(qp.index_set() == graph->index_set())) {
    qp = relabel(qp, [](Id v) { return v; }, graph->index_set());
  }
  return {std::move(graph), std::move(qp), scope};
}

QAutCandidate classical_candidate(GraphPtr graph, const Permutation& perm) {
  IndexSet set = graph->index_set();
  return make_candidate(std::move(graph), from_permutation(set, perm));
}

void QAutReport::record(double residual, double threshold, const std::string& what) {
  worst_residual = std::max(worst_residual, residual);
  if (residual > threshold && ok) {
    ok = false;
    failure = what;
  }
}

void QAutReport::fail(const std::string& what) {
  if (ok) {
    ok = false;
    failure = what;
  }
}

QAutReport is_quantum_automorphism(const QAutCandidate& c, const Tolerance& tol) {
  QAutReport rep;
  const ValidationReport v = validate(c.qp, tol);
  rep.worst_residual = v.worst_residual;
  if (!v.ok) {
    rep.fail("not a quantum permutation: " + v.failing_constraint);
    return rep;
  }
  const auto& s = c.qp.support();
  const std::size_t n = s.size();
  if (c.scope == CheckScope::finitary) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || c.qp.local(i, j).is_zero()) continue;
        const auto dist = c.graph->distinguishing(s[i], s[j]);
        const bool closed =
            dist && std::all_of(dist->begin(), dist->end(),
                                [&](Id z) { return std::binary_search(s.begin(), s.end(), z); });
        if (!closed) {
          rep.fail("support not rel-closed at u" + pair_name(s[i], s[j]));
          return rep;
        }
      }
    }
  }
  std::vector<Rel> rel(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rel[i * n + j] = c.graph->rel(s[i], s[j]);
  }
  check_products(c.qp, rel, tol, "relation", rep);
  return rep;
}

QAutReport distance_obstruction(const QAutCandidate& c, const Tolerance& tol) {
  QAutReport rep = is_quantum_automorphism(c, tol);
  if (!rep.ok) {
    rep.failure = "precondition: " + rep.failure;
    return rep;
  }
  const auto& s = c.qp.support();
  const std::size_t n = s.size();
  std::vector<Distance> dist(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) dist[i * n + j] = c.graph->distance(s[i], s[j]);
  }
  rep.products_checked = 0;
  check_products(c.qp, dist, tol, "distance", rep);
  return rep;
}

double adjacency_commutator(const QAutCandidate& c) {
  const auto& s = c.qp.support();
  const std::size_t n = s.size();
  double worst = 0.0;
  // (A u - u A)_{xy} = Σ_z A_xz u_zy - u_xz A_zy
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      CMatrix acc = CMatrix::zero(c.qp.dim(), c.qp.dim());
      for (std::size_t z = 0; z < n; ++z) {
        if (c.graph->adjacent(s[x], s[z])) acc += c.qp.local(z, y);
        if (c.graph->adjacent(s[z], s[y])) acc -= c.qp.local(x, z);
      }
      worst = std::max(worst, frobenius_norm(acc));
    }
  }
  return worst;
}

}  // namespace qsym
