#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "structure_fixtures.hpp"
#include "qsym/error.hpp"
#include "qsym/graphs/composite.hpp"
#include "qsym/graphs/rado.hpp"
#include "qsym/numerics/linalg.hpp"
#include "qsym/qaut/candidate.hpp"
#include "qsym/qaut/constructions.hpp"
#include "qsym/qaut/disjoint_union.hpp"
#include "qsym/qaut/json.hpp"
#include "qsym/qaut/rado_certify.hpp"
#include "qsym/reptheory/intertwiner.hpp"

using namespace qsym;

namespace {

const Tolerance kTol{};

// Automorphism of johnson:k induced by a permutation of the ground set,
// restricted to the subsets of {0..ground-1}. It moves infinitely many
// vertices, so candidates built from it use window scope.
Permutation johnson_auto(const GraphFamily& g, const Permutation& ground, unsigned k, Id ground_size) {
  std::map<Id, Id> images;
  const Id count = [&] {
    Id c = 1;
    for (unsigned i = 0; i < k; ++i) c = c * (ground_size - i) / (i + 1);
    return c;
  }();
  for (Id v = 0; v < count; ++v) {
    json label = g.decode(v);
    std::vector<Id> set;
    for (const auto& e : label) set.push_back(ground(e.get<Id>()));
    std::sort(set.begin(), set.end());
    images[v] = g.encode(json(set));
  }
  return Permutation::from_map(images);
}

using fixtures::du_fixtures;
using fixtures::k4_quantum;
using fixtures::plus_rotation;
using fixtures::union_rotations;

}  // namespace

TEST_CASE("quantum automorphism checks on small examples") {
  const GraphPtr c5 = make_graph("cycle:5");
  CHECK(is_quantum_automorphism(classical_candidate(c5, Permutation::parse("(0 1 2 3 4)"))).ok);
  CHECK(is_quantum_automorphism(classical_candidate(c5, Permutation::parse("(1 4)(2 3)"))).ok);
  const GraphPtr p4 = make_graph("path:4");
  const QAutReport bad = is_quantum_automorphism(classical_candidate(p4, Permutation::parse("(0 1)")));
  CHECK_FALSE(bad.ok);
  CHECK(bad.failure.find("rel-closed") != std::string::npos);
  // Swapping the two ends breaks a relation inside the support.
  const QAutReport ends =
      is_quantum_automorphism(classical_candidate(p4, Permutation::parse("(0 3)(1 2)(0 1)")));
  CHECK_FALSE(ends.ok);
  CHECK(ends.failure.find("relation") == 0);

  const QAutReport q = is_quantum_automorphism(k4_quantum(), kTol);
  CHECK(q.ok);
  CHECK(q.worst_residual <= 1e-12);

  // Not a magic unitary.
  const QuantumPermutation broken(IndexSet::finite(4), 1, {0, 1}, {CMatrix::scalar(1), CMatrix::scalar(1),
                                                                    CMatrix::scalar(0), CMatrix::scalar(1)});
  CHECK(is_quantum_automorphism(make_candidate(make_graph("complete:4"), broken)).failure.find(
            "not a quantum permutation") == 0);
  CHECK_THROWS_AS((void)make_candidate(c5, QuantumPermutation::trivial(IndexSet::finite(4))), DomainError);
}

TEST_CASE("finitary scope needs a rel-closed support") {
  // Swapping one vertex of copy 0 with one of copy 1 leaves their neighbours fixed.
  const GraphPtr u = make_graph("union(complete:3, inf)");
  const auto& du = dynamic_cast<const DisjointUnionGraph&>(*u);
  const Permutation half = Permutation::cycle({du.vertex(0, 0), du.vertex(1, 0)});
  const QAutReport r = is_quantum_automorphism(classical_candidate(u, half));
  CHECK_FALSE(r.ok);
  CHECK(r.failure.find("support not rel-closed") == 0);
  // Swapping the whole copies is fine.
  std::map<Id, Id> whole;
  for (Id x = 0; x < 3; ++x) {
    whole[du.vertex(0, x)] = du.vertex(1, x);
    whole[du.vertex(1, x)] = du.vertex(0, x);
  }
  CHECK(is_quantum_automorphism(classical_candidate(u, Permutation::from_map(whole))).ok);
  // On Rado any transposition is closed only in window scope.
  QAutCandidate rado = classical_candidate(rado_graph(), Permutation::parse("(0 1)"));
  CHECK_FALSE(is_quantum_automorphism(rado).ok);
  rado.scope = CheckScope::window;
  CHECK(is_quantum_automorphism(rado).ok);
}

TEST_CASE("distance obstruction") {
  const GraphPtr j2 = make_graph("johnson:2");
  QAutCandidate cl = classical_candidate(j2, johnson_auto(*j2, Permutation::parse("(0 3 1)(2 4)"), 2, 5));
  CHECK_FALSE(is_quantum_automorphism(cl, kTol).ok);
  cl.scope = CheckScope::window;
  const QAutReport r = distance_obstruction(cl, kTol);
  CHECK(r.ok);
  // nonzero entries of an automorphism never pair up across a distance mismatch
  CHECK(r.products_checked == 0);

  const QAutReport u = distance_obstruction(union_rotations(), kTol);
  CHECK(u.ok);
  CHECK(u.products_checked > 0);
  CHECK(u.worst_residual <= 1e-12);

  const QAutReport pre =
      distance_obstruction(classical_candidate(make_graph("path:4"), Permutation::parse("(0 1)")), kTol);
  CHECK_FALSE(pre.ok);
  CHECK(pre.failure.find("precondition") == 0);
}

TEST_CASE("disjoint automorphism construction") {
  const GraphPtr k4 = make_graph("complete:4");
  const Permutation s = Permutation::parse("(0 1)");
  const Permutation t = Permutation::parse("(2 3)");
  // k = 1 collapses to the product of the two permutations.
  CHECK(entry_distance(disjoint_auto(s, t, 1, k4).qp,
                       from_permutation(k4->index_set(), compose(s, t))) == 0.0);

  const QAutCandidate two = k4_quantum();
  CHECK(two.qp.dim() == 2);
  CHECK(two.qp.entry(0, 0) == CMatrix{{1, 0}, {0, 0}});
  CHECK(frobenius_distance(two.qp.entry(2, 2), fixtures::plus_p()) <= 1e-15);
  CHECK(max_entry_commutator(two.qp) > 0.4);

  const QAutCandidate three = union_rotations();
  CHECK(three.qp.dim() == 3);
  CHECK(is_quantum_automorphism(three, kTol).worst_residual <= 1e-12);
  CHECK(is_irreducible(three.qp, kTol));
  CHECK(generated_algebra_dimension(entry_family(three.qp), 4, kTol) == 9);
  CHECK(orbit_separating_tuple(Permutation::parse("(0 1 2)"), 3).has_value());
  CHECK_FALSE(orbit_separating_tuple(Permutation::parse("(0 1)(2 3)"), 3, 6).has_value());

  CHECK_THROWS_AS((void)disjoint_auto(Permutation::parse("(0 1)"), Permutation::parse("(1 2)"), 2, k4),
                  DomainError);
  CHECK_THROWS_AS((void)disjoint_auto(s, t, 3, k4), DomainError);
  CHECK_THROWS_AS((void)disjoint_auto(s, t, 2, make_graph("path:4")), DomainError);
}

TEST_CASE("product lifts") {
  const GraphPtr c5 = make_graph("cycle:5");
  const GraphPtr k4 = make_graph("complete:4");
  const QAutCandidate id5 = make_candidate(c5, QuantumPermutation::trivial(c5->index_set()));
  for (ProductKind kind : {ProductKind::direct, ProductKind::cartesian, ProductKind::strong}) {
    const QAutCandidate lift = product_lift(k4_quantum(), id5, kind, kTol);
    CHECK(lift.qp.dim() == 2);
    const QAutReport r = is_quantum_automorphism(lift, kTol);
    CHECK(r.ok);
    CHECK(r.worst_residual <= 1e-10);
    CHECK(adjacency_commutator(lift) <= 1e-10);
    CHECK(max_entry_commutator(lift.qp) > 0.4);
  }

  // classical x classical is the product permutation
  const Permutation a = Permutation::parse("(0 1 2 3)");
  const Permutation b = Permutation::parse("(1 4)(2 3)");
  const QAutCandidate cl =
      product_lift(classical_candidate(k4, a), classical_candidate(c5, b), ProductKind::cartesian, kTol);
  const auto& pg = dynamic_cast<const ProductGraph&>(*cl.graph);
  std::map<Id, Id> images;
  for (Id x = 0; x < 4; ++x)
    for (Id y = 0; y < 5; ++y) images[pg.vertex(x, y)] = pg.vertex(a(x), b(y));
  CHECK(entry_distance(cl.qp, from_permutation(cl.graph->index_set(), Permutation::from_map(images))) == 0.0);

  const GraphPtr k6 = make_graph("complete:6");
  const QAutCandidate dim3 = disjoint_auto(Permutation::parse("(0 1 2)"), Permutation::parse("(3 4 5)"), 3, k6);
  const QAutCandidate six = product_lift(k4_quantum(), dim3, ProductKind::strong, kTol);
  CHECK(six.qp.dim() == 6);
  CHECK(is_quantum_automorphism(six, kTol).ok);

  const QAutCandidate bad = classical_candidate(make_graph("path:4"), Permutation::parse("(0 1)"));
  CHECK_THROWS_AS((void)product_lift(bad, id5, ProductKind::direct, kTol), DomainError);
}

TEST_CASE("weak product embeddings") {
  const GraphPtr k4 = make_graph("complete:4");
  const GraphPtr weak = make_graph("weak(complete:4)");
  const QAutCandidate empty = weak_product_embed({}, weak);
  CHECK(moved_points(empty.qp, kTol).empty());
  CHECK(empty.qp.dim() == 1);

  const auto& wp = dynamic_cast<const WeakPowerGraph&>(*weak);
  const Permutation p = Permutation::parse("(1 2 3)");
  const QAutCandidate single = weak_product_embed({{0, classical_candidate(k4, p)}}, weak, 1);
  CHECK(is_quantum_automorphism(single, kTol).ok);
  for (Id x : single.qp.support()) {
    std::vector<Id> t = wp.tuple(x);
    t.resize(2, 0);
    std::vector<Id> image = t;
    image[0] = p(t[0]);
    for (Id y : single.qp.support()) {
      CHECK(single.qp.entry(wp.vertex(image), y)(0, 0) == cplx(y == x ? 1.0 : 0.0));
    }
  }

  const QAutCandidate two = weak_product_embed({{0, k4_quantum()}, {2, k4_quantum()}}, weak);
  CHECK(two.qp.dim() == 4);
  CHECK(two.scope == CheckScope::window);
  const QAutReport r = is_quantum_automorphism(two, kTol);
  CHECK(r.ok);
  CHECK(r.worst_residual <= 1e-12);
  // Coordinates outside F are never moved.
  for (Id x : two.qp.support()) {
    for (Id y : two.qp.support()) {
      auto tx = wp.tuple(x);
      auto ty = wp.tuple(y);
      tx.resize(3, 0);
      ty.resize(3, 0);
      if (tx[1] != ty[1]) CHECK(two.qp.entry(x, y).is_zero());
    }
  }

  CHECK_THROWS_AS((void)weak_product_embed({{0, k4_quantum()}}, make_graph("complete:4")), DomainError);
  CHECK_THROWS_AS(
      (void)weak_product_embed({{0, classical_candidate(make_graph("cycle:5"), Permutation{})}}, weak),
      DomainError);
}

TEST_CASE("Hamming wreath elements") {
  const QAutCandidate triv = hamming_wreath({}, Permutation{}, 3);
  CHECK(moved_points(triv.qp, kTol).empty());

  const QAutCandidate swap = hamming_wreath({}, Permutation::parse("(0 1)"), 3);
  CHECK(is_classical(swap.qp, kTol));
  CHECK_FALSE(moved_points(swap.qp, kTol).empty());
  CHECK(is_quantum_automorphism(swap, kTol).ok);

  const QAutCandidate quantum = hamming_wreath({{0, fixtures::nonclassical4()}}, Permutation::parse("(0 1)"), 4);
  CHECK_FALSE(is_classical(quantum.qp, kTol));
  CHECK(is_quantum_automorphism(quantum, kTol).ok);
  CHECK(quantum.graph->name() == "hamming:4");

  const QuantumPermutation junk(IndexSet::finite(4), 1, {0, 1},
                                {CMatrix::scalar(1), CMatrix::scalar(1), CMatrix::scalar(1), CMatrix::scalar(1)});
  CHECK_THROWS_AS((void)hamming_wreath({{0, junk}}, Permutation{}, 4), DomainError);
}

TEST_CASE("disjoint union functors are mutually inverse") {
  const GraphPtr k3 = make_graph("complete:3");
  const auto fx = du_fixtures(k3);
  for (const auto& pi : fx) {
    REQUIRE(magic_wreath_validate(pi, kTol).ok);
    const QAutCandidate f = du_forward(pi, k3, kTol);
    CHECK(is_quantum_automorphism(f, kTol).ok);
    CHECK(magic_wreath_distance(du_backward(f, kTol), pi) <= 1e-12);
    CHECK(entry_distance(du_forward(du_backward(f, kTol), k3, kTol).qp, f.qp) <= 1e-12);
    for (const auto& rho : fx) {
      const QAutCandidate lhs = du_forward(magic_wreath_tensor(pi, rho), k3, kTol);
      CHECK(entry_distance(lhs.qp, tensor(f.qp, du_forward(rho, k3, kTol).qp)) <= 1e-12);
    }
  }
  CHECK(du_forward(fx[0], k3).qp.support().empty());
  CHECK_FALSE(is_classical(du_forward(fx[3], k3).qp, kTol));
  CHECK(max_entry_commutator(du_forward(fx[3], k3).qp) == 0.0);

  // Quantum automorphisms of the union read back.
  const QAutCandidate rot = union_rotations();
  const MagicWreathCorep back = du_backward(rot, kTol);
  CHECK(back.local().size() == 2);
  CHECK(entry_distance(du_forward(back, make_graph("cycle:3"), kTol).qp, rot.qp) <= 1e-12);
  const GraphPtr u = make_graph("union(complete:3, 2)");
  for (const auto& s : u->automorphism_samples()) {
    const QAutCandidate c = classical_candidate(u, s);
    CHECK(entry_distance(du_forward(du_backward(c, kTol), k3, kTol).qp, c.qp) <= 1e-12);
  }

  CHECK_THROWS_AS((void)du_forward(fx[0], make_graph("union(complete:2, 2)")), DomainError);
  CHECK_THROWS_AS((void)du_backward(k4_quantum()), DomainError);
}

TEST_CASE("Rado certification") {
  const GraphPtr r = rado_graph();
  QAutCandidate id = make_candidate(r, QuantumPermutation::trivial(r->index_set(), 2));
  CHECK(rado_certify(id, kTol).verdict == RadoVerdict::all_commute);
  QAutCandidate swap = classical_candidate(r, Permutation::parse("(2 5)"));
  CHECK(rado_certify(swap, kTol).verdict == RadoVerdict::all_commute);

  const QAutCandidate noncommuting = fixtures::rado_noncommuting(r);
  const RadoCertificate cert = rado_certify(noncommuting, kTol);
  CHECK(cert.verdict == RadoVerdict::relation_violated);
  REQUIRE(cert.witness);
  CHECK(*cert.witness_prime == rado_vertex(*cert.witness));
  CHECK(cert.relation_residual > 0.1);
  REQUIRE(cert.relation);
  CHECK((*cert.relation)[1] == *cert.witness);
  CHECK(cert.max_commutator > 0.1);

  // Tiny bound: inconclusive.
  CHECK(rado_certify(noncommuting, kTol, 5).verdict == RadoVerdict::inconclusive);
  CHECK_THROWS_AS((void)rado_certify(k4_quantum(), kTol), DomainError);
}

TEST_CASE("closure under tensor and contragredient") {
  const std::vector<QAutCandidate> fx = {k4_quantum(),
                                         classical_candidate(make_graph("complete:4"), Permutation::parse("(0 2 1)")),
                                         make_candidate(make_graph("complete:4"), fixtures::nonclassical4())};
  for (const auto& a : fx) {
    CHECK(is_quantum_automorphism(make_candidate(a.graph, contragredient(a.qp)), kTol).ok);
    for (const auto& b : fx) CHECK(is_quantum_automorphism(make_candidate(a.graph, tensor(a.qp, b.qp)), kTol).ok);
  }
  const QAutCandidate rot = union_rotations();
  CHECK(is_quantum_automorphism(make_candidate(rot.graph, tensor(rot.qp, contragredient(rot.qp))), kTol).ok);
}

TEST_CASE("constructible johnson automorphisms commute") {
  const GraphPtr j2 = make_graph("johnson:2");
  const std::vector<Permutation> ground = {Permutation::parse("(0 1)"), Permutation::parse("(1 2 3)"),
                                           Permutation::parse("(0 4)(1 3)")};
  std::vector<QAutCandidate> made;
  for (const auto& g : ground) {
    made.push_back(classical_candidate(j2, johnson_auto(*j2, g, 2, 5)));
    made.back().scope = CheckScope::window;
  }
  for (const auto& c : made) {
    CHECK(is_quantum_automorphism(c, kTol).ok);
    CHECK(c.qp.support().back() < 12);
    for (const auto& e : made) {
      const QuantumPermutation t = tensor(c.qp, e.qp);
      CHECK(max_entry_commutator(t) <= 1e-12);
      CHECK(max_entry_commutator(direct_sum(t, contragredient(c.qp))) <= 1e-12);
    }
  }
  // Disjoint ground permutations still overlap on vertices, so the
  // construction has nothing to work with.
  CHECK_THROWS_AS((void)disjoint_auto(johnson_auto(*j2, Permutation::parse("(0 1)"), 2, 5),
                                      johnson_auto(*j2, Permutation::parse("(2 3)"), 2, 5), 2, j2),
                  DomainError);
}

TEST_CASE("candidate JSON") {
  const QAutCandidate c = k4_quantum();
  const QAutCandidate back = candidate_from_json(json::parse(candidate_to_json(c).dump()));
  CHECK(back.graph->name() == "complete:4");
  CHECK(entry_distance(back.qp, c.qp) == 0.0);
  json rep = is_quantum_automorphism(c, kTol);
  CHECK(rep.at("ok") == true);
  CHECK_THROWS_AS((void)candidate_from_json(json::parse(R"({"graph": "nope"})")), ParseError);
}
