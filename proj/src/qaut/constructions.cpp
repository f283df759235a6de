#include "qsym/qaut/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <set>

#include "qsym/error.hpp"
#include "qsym/graphs/composite.hpp"
#include "qsym/numerics/linalg.hpp"

namespace qsym {
namespace {

void require_qaut(const QAutCandidate& c, const Tolerance& tol, const std::string& where) {
  const QAutReport rep = is_quantum_automorphism(c, tol);
  if (!rep.ok) throw DomainError(where + ": input is not a quantum automorphism (" + rep.failure + ")");
}

Id power_image(const Permutation& p, Id y, std::size_t r) {
  for (std::size_t i = 0; i < r; ++i) y = p(y);
  return y;
}

// Window tuples of length m over `values`, in lexicographic order.
std::vector<std::vector<Id>> window_tuples(std::size_t m, const std::vector<Id>& values) {
  std::vector<std::vector<Id>> out{{}};
  for (std::size_t pos = 0; pos < m; ++pos) {
    std::vector<std::vector<Id>> next;
    next.reserve(out.size() * values.size());
    for (const auto& t : out) {
      for (Id v : values) {
        next.push_back(t);
        next.back().push_back(v);
      }
    }
    out = std::move(next);
  }
  return out;
}

struct Embedding {
  const WeakPowerGraph* graph;
  std::vector<std::vector<Id>> tuples;  // padded to the window length
  std::vector<Id> ids;
};

Embedding make_window(const GraphPtr& weak, const std::map<Id, QAutCandidate>& family, std::size_t m) {
  const auto* wp = dynamic_cast<const WeakPowerGraph*>(weak.get());
  if (wp == nullptr) throw DomainError("weak product embedding needs a weak power graph, got " + weak->name());
  std::vector<Id> values;
  if (const auto n = wp->factor()->order()) {
    for (Id v = 0; v < *n; ++v) values.push_back(v);
  } else {
    std::set<Id> vs{0};
    for (const auto& [k, c] : family) vs.insert(c.qp.support().begin(), c.qp.support().end());
    values.assign(vs.begin(), vs.end());
  }
  Embedding e{wp, window_tuples(m, values), {}};
  for (const auto& t : e.tuples) e.ids.push_back(wp->vertex(t));
  return e;
}

}  // namespace

std::vector<CMatrix> coordinate_projections(std::size_t k) {
  std::vector<CMatrix> out;
  for (std::size_t r = 0; r < k; ++r) {
    CMatrix p(k, k);
    p(r, r) = 1.0;
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<CMatrix> fourier_projections(std::size_t k) {
  std::vector<CMatrix> out;
  const double kd = static_cast<double>(k);
  for (std::size_t s = 0; s < k; ++s) {
    CMatrix q(k, k);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        // exponent reduced mod k keeps the phases exact on the diagonal
        const std::size_t e = (s * ((a + k - b) % k)) % k;
        q(a, b) = std::polar(1.0 / kd, 2.0 * std::numbers::pi * static_cast<double>(e) / kd);
      }
    }
    out.push_back(std::move(q));
  }
  return out;
}

QAutCandidate disjoint_auto(const Permutation& sigma, const Permutation& tau, std::size_t k, GraphPtr graph,
                            const Tolerance& tol) {
  if (k == 0) throw DomainError("disjoint_auto: k must be positive");
  for (Id x : sigma.moved_points()) {
    if (tau(x) != x) throw DomainError("disjoint_auto: both permutations move " + std::to_string(x));
  }
  if (k > sigma.order() || k > tau.order()) {
    throw DomainError("disjoint_auto: k = " + std::to_string(k) + " exceeds the order of a permutation");
  }
  require_qaut(classical_candidate(graph, sigma), tol, "disjoint_auto (first permutation)");
  require_qaut(classical_candidate(graph, tau), tol, "disjoint_auto (second permutation)");

  const auto ps = coordinate_projections(k);
  const auto qs = fourier_projections(k);
  std::vector<Id> support = sigma.moved_points();
  const auto tm = tau.moved_points();
  support.insert(support.end(), tm.begin(), tm.end());

  auto entry = [&](Id x, Id y) {
    CMatrix acc(k, k);
    // r runs over 1..k; r = k is the unit of Z/k
    if (sigma(y) != y) {
      for (std::size_t r = 1; r <= k; ++r)
        if (power_image(sigma, y, r) == x) acc += ps[r % k];
    } else if (tau(y) != y) {
      for (std::size_t s = 1; s <= k; ++s)
        if (power_image(tau, y, s) == x) acc += qs[s % k];
    } else if (x == y) {
      acc = CMatrix::identity(k);
    }
    return acc;
  };
  return make_candidate(graph, QuantumPermutation::from_function(graph->index_set(), k, support, entry));
}

std::optional<std::vector<Id>> orbit_separating_tuple(const Permutation& sigma, std::size_t k,
                                                      std::size_t max_length) {
  // t values in 1..k-1 still fixing the tuple
  std::vector<std::size_t> alive;
  for (std::size_t t = 1; t < k; ++t) alive.push_back(t);
  std::vector<Id> tuple;
  const auto moved = sigma.moved_points();
  while (!alive.empty()) {
    if (tuple.size() == max_length) return std::nullopt;
    Id best = 0;
    std::size_t best_left = alive.size() + 1;
    for (Id v : moved) {
      std::size_t left = 0;
      for (std::size_t t : alive) left += power_image(sigma, v, t) == v ? 1 : 0;
      if (left < best_left) {
        best_left = left;
        best = v;
      }
    }
    if (best_left >= alive.size()) return std::nullopt;
    tuple.push_back(best);
    std::erase_if(alive, [&](std::size_t t) { return power_image(sigma, best, t) != best; });
  }
  return tuple;
}

QAutCandidate product_lift(const QAutCandidate& x, const QAutCandidate& y, ProductKind kind,
                           const Tolerance& tol) {
  require_qaut(x, tol, "product_lift");
  require_qaut(y, tol, "product_lift");
  const GraphPtr g = product(kind, x.graph, y.graph);
  const auto& pg = dynamic_cast<const ProductGraph&>(*g);

  auto all_vertices = [](const QAutCandidate& c, const QAutCandidate& partner) {
    std::vector<Id> out;
    if (partner.qp.support().empty()) return out;
    const auto n = c.graph->order();
    if (!n) throw DomainError("product_lift: " + c.graph->name() + " is infinite and its partner moves points");
    for (Id v = 0; v < *n; ++v) out.push_back(v);
    return out;
  };
  std::set<std::pair<Id, Id>> pairs;
  for (Id a : x.qp.support())
    for (Id b : all_vertices(y, x)) pairs.emplace(a, b);
  for (Id a : all_vertices(x, y))
    for (Id b : y.qp.support()) pairs.emplace(a, b);

  std::vector<Id> support;
  for (const auto& [a, b] : pairs) support.push_back(pg.vertex(a, b));
  auto entry = [&](Id s, Id t) {
    const auto [a1, b1] = pg.coordinates(s);
    const auto [a2, b2] = pg.coordinates(t);
    return kron(x.qp.entry(a1, a2), y.qp.entry(b1, b2));
  };
  const CheckScope scope = x.scope == CheckScope::window || y.scope == CheckScope::window
                               ? CheckScope::window
                               : CheckScope::finitary;
  return make_candidate(
      g, QuantumPermutation::from_function(g->index_set(), x.qp.dim() * y.qp.dim(), support, entry), scope);
}

namespace {

QAutCandidate embed_on_window(const std::map<Id, QAutCandidate>& family, const GraphPtr& weak, std::size_t m,
                              const Tolerance& tol) {
  const Embedding e = make_window(weak, family, m);
  std::size_t dim = 1;
  for (const auto& [k, c] : family) {
    if (c.graph->name() != e.graph->factor()->name()) {
      throw DomainError("weak_product_embed: coordinate " + std::to_string(k) + " is on " + c.graph->name() +
                        ", expected " + e.graph->factor()->name());
    }
    require_qaut(c, tol, "weak_product_embed");
    dim *= c.qp.dim();
  }
  auto entry = [&](Id s, Id t) {
    std::vector<Id> xs = e.graph->tuple(s);
    std::vector<Id> ys = e.graph->tuple(t);
    xs.resize(m, 0);
    ys.resize(m, 0);
    for (std::size_t pos = 0; pos < m; ++pos) {
      if (!family.contains(pos) && xs[pos] != ys[pos]) return CMatrix::zero(dim, dim);
    }
    CMatrix acc = CMatrix::identity(1);
    for (const auto& [k, c] : family) acc = kron(acc, c.qp.entry(xs[k], ys[k]));
    return acc;
  };
  return make_candidate(weak, QuantumPermutation::from_function(weak->index_set(), dim, e.ids, entry),
                        CheckScope::window);
}

std::size_t family_span(const std::map<Id, QAutCandidate>& family) {
  return family.empty() ? 0 : static_cast<std::size_t>(family.rbegin()->first) + 1;
}

}  // namespace

QAutCandidate weak_product_embed(const std::map<Id, QAutCandidate>& family, GraphPtr weak,
                                 std::size_t extra_coordinates, const Tolerance& tol) {
  return embed_on_window(family, weak, family_span(family) + extra_coordinates, tol);
}

QAutCandidate hamming_wreath(const std::map<Id, QuantumPermutation>& family, const Permutation& coordinate_perm,
                             Id n, std::size_t extra_coordinates, const Tolerance& tol) {
  const GraphPtr kn = complete_graph(n);
  const GraphPtr h = hamming_graph(n);
  std::map<Id, QAutCandidate> lifted;
  for (const auto& [k, qp] : family) lifted.emplace(k, make_candidate(kn, qp));
  std::size_t m = family_span(lifted);
  for (Id c : coordinate_perm.moved_points()) m = std::max<std::size_t>(m, c + 1);
  m += extra_coordinates;

  const QAutCandidate embedded = embed_on_window(lifted, h, m, tol);
  const auto& wp = dynamic_cast<const WeakPowerGraph&>(*h);
  // (E · P)_{xy} = E_{x, P(y)} with P(y)_k = y_{π^{-1}(k)}
  auto moved = [&](Id y) {
    std::vector<Id> ys = wp.tuple(y);
    ys.resize(m, 0);
    std::vector<Id> out(m, 0);
    for (std::size_t k = 0; k < m; ++k) out[coordinate_perm(k)] = ys[k];
    return wp.vertex(out);
  };
  auto entry = [&](Id x, Id y) { return embedded.qp.entry(x, moved(y)); };
  return make_candidate(
      h, QuantumPermutation::from_function(h->index_set(), embedded.qp.dim(), embedded.qp.support(), entry),
      CheckScope::window);
}

}  // namespace qsym
