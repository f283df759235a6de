#include "qsym/qaut/rado_certify.hpp"

#include <algorithm>
#include <set>

#include "qsym/error.hpp"
#include "qsym/graphs/rado.hpp"
#include "qsym/numerics/linalg.hpp"

namespace qsym {
namespace {

// Columns y with u_{xy} != 0, the row's first column placed first.
std::vector<Id> row_columns(const QuantumPermutation& qp, Id x, Id first) {
  std::vector<Id> out{first};
  for (Id y : qp.support()) {
    if (y != first && !qp.entry(x, y).is_zero()) out.push_back(y);
  }
  return out;
}

}  // namespace

std::string to_string(RadoVerdict v) {
  switch (v) {
    case RadoVerdict::all_commute: return "all entries commute";
    case RadoVerdict::relation_violated: return "relation violated";
    case RadoVerdict::inconclusive: return "inconclusive";
    case RadoVerdict::precondition_failed: return "precondition failed";
  }
  return "?";
}

RadoCertificate rado_certify(const QAutCandidate& c, const Tolerance& tol, Id witness_bound) {
  if (c.graph->name() != "rado") throw DomainError("rado_certify: graph is " + c.graph->name());
  RadoCertificate cert;
  cert.witness_bound = witness_bound;

  QAutCandidate windowed = c;
  windowed.scope = CheckScope::window;
  const QAutReport pre = is_quantum_automorphism(windowed, tol);
  if (!pre.ok) {
    cert.verdict = RadoVerdict::precondition_failed;
    cert.detail = pre.failure;
    return cert;
  }

  const auto& qp = c.qp;
  const auto& s = qp.support();
  struct Pair {
    Id xp, yp, xm, ym;
  };
  std::vector<Pair> noncommuting;
  for (Id x1 : s) {
    for (Id y1 : s) {
      const CMatrix a = qp.entry(x1, y1);
      if (a.is_zero()) continue;
      for (Id x2 : s) {
        for (Id y2 : s) {
          const double n = frobenius_norm(commutator(a, qp.entry(x2, y2)));
          cert.max_commutator = std::max(cert.max_commutator, n);
          if (n > tol.eps_proj) noncommuting.push_back({x1, y1, x2, y2});
        }
      }
    }
  }
  if (noncommuting.empty()) {
    cert.verdict = RadoVerdict::all_commute;
    return cert;
  }

  cert.verdict = RadoVerdict::inconclusive;
  cert.detail = "no non-commuting pair admits a witness";
  for (const Pair& p : noncommuting) {
    const std::vector<Id> row_p = row_columns(qp, p.xp, p.yp);
    const std::vector<Id> row_m = row_columns(qp, p.xm, p.ym);
    std::set<Id> adj{p.yp, p.ym};
    std::set<Id> non;
    for (std::size_t j = 1; j < row_p.size(); ++j) non.insert(row_p[j]);
    for (std::size_t j = 1; j < row_m.size(); ++j) non.insert(row_m[j]);
    if (std::any_of(adj.begin(), adj.end(), [&](Id y) { return non.contains(y); })) continue;

    std::vector<Id> adj_primes;
    std::vector<Id> non_primes;
    for (Id y : adj) adj_primes.push_back(rado_vertex(y));
    for (Id y : non) non_primes.push_back(rado_vertex(y));
    Id prime = 0;
    try {
      prime = rado_witness(adj_primes, non_primes, witness_bound);
    } catch (const SearchExhausted&) {
      cert.detail = "witness search exhausted below " + std::to_string(witness_bound);
      continue;
    }
    const Id w = *rado_index(prime);
    cert.witness = w;
    cert.witness_prime = prime;

    std::set<Id> column(s.begin(), s.end());
    column.insert(w);
    double worst = 0.0;
    for (Id v : column) {
      const CMatrix uvw = qp.entry(v, w);
      if (uvw.is_zero()) continue;
      for (const auto& [x, row] : {std::pair{p.xp, row_p}, std::pair{p.xm, row_m}}) {
        for (Id y : row) {
          if (c.graph->rel(v, x) == c.graph->rel(w, y)) continue;
          const double r = frobenius_norm(uvw * qp.entry(x, y));
          if (r > worst) {
            worst = r;
            cert.relation = std::array<Id, 4>{v, w, x, y};
          }
        }
      }
    }
    if (worst > tol.eps_proj) {
      cert.verdict = RadoVerdict::relation_violated;
      cert.relation_residual = worst;
      const auto& rel = *cert.relation;
      cert.detail = "u(" + std::to_string(rel[0]) + "," + std::to_string(rel[1]) + ") u(" +
                    std::to_string(rel[2]) + "," + std::to_string(rel[3]) + ") != 0 at witness " +
                    std::to_string(w) + " (prime " + std::to_string(prime) + ")";
      return cert;
    }
    cert.relation.reset();
    cert.detail = "relations at witness " + std::to_string(w) + " hold although the pair does not commute";
  }
  return cert;
}

}  // namespace qsym
