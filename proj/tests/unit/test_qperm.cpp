#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "fixtures.hpp"
#include "qsym/error.hpp"
#include "qsym/numerics/linalg.hpp"
#include "qsym/qperm/json.hpp"
#include "qsym/qperm/partial.hpp"
#include "qsym/qperm/quantum_permutation.hpp"

using namespace qsym;

namespace {

const Tolerance kTol{};

std::vector<Permutation> all_permutations(Id n) {
  std::vector<Id> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do out.push_back(Permutation::from_images(img));
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// Σ_z a_xz ⊗ b_zy with z over an explicit range wide enough to contain both supports.
CMatrix coproduct_entry(const QuantumPermutation& a, const QuantumPermutation& b, Id x, Id y, Id zmax) {
  CMatrix acc(a.dim() * b.dim(), a.dim() * b.dim());
  for (Id z = 0; z <= zmax; ++z) acc += kron(a.entry(x, z), b.entry(z, y));
  return acc;
}

}  // namespace

TEST_CASE("permutation parsing, composition and order") {
  const Permutation c = Permutation::parse("(0 1 2)");
  CHECK(c(0) == 1);
  CHECK(c(2) == 0);
  CHECK(c(7) == 7);
  CHECK(c.order() == 3);
  CHECK(Permutation::parse("(0 1)(2 3 4)").order() == 6);
  CHECK(Permutation::parse("").is_identity());
  CHECK(Permutation::parse("()").is_identity());
  CHECK(Permutation::parse("(3, 4)") == Permutation::cycle({3, 4}));
  // right-to-left: (0 1)(1 2) sends 1 -> 2 -> 2? first (1 2): 1 -> 2, then (0 1) fixes 2
  const Permutation p = Permutation::parse("(0 1)(1 2)");
  CHECK(p(1) == 2);
  CHECK(p(2) == 0);
  CHECK(p(0) == 1);
  CHECK(compose(c, c.inverse()).is_identity());
  CHECK(Permutation::parse("(0 1 2)").to_string() == "(0 1 2)");
  CHECK_THROWS_AS(Permutation::parse("(0 1"), ParseError);
  CHECK_THROWS_AS(Permutation::parse("(0 a)"), ParseError);
  CHECK_THROWS_AS(Permutation::parse("(0 0)"), DomainError);
  CHECK_THROWS_AS(Permutation::from_map({{0, 1}, {1, 1}}), DomainError);
  CHECK_THROWS_AS(Permutation::from_map({{0, 1}}), DomainError);
}

TEST_CASE("from_permutation examples") {
  const IndexSet set = IndexSet::naturals();
  const auto triv = from_permutation(set, Permutation{});
  CHECK(triv.support().empty());
  CHECK(triv.dim() == 1);

  const auto t = from_permutation(set, Permutation::parse("(0 1)"));
  CHECK(t.support() == std::vector<Id>{0, 1});
  CHECK(t.entry(0, 1) == CMatrix::scalar(1));
  CHECK(t.entry(1, 0) == CMatrix::scalar(1));
  CHECK(t.entry(0, 0) == CMatrix::scalar(0));
  CHECK(t.entry(1, 1) == CMatrix::scalar(0));
  CHECK(t.entry(5, 5) == CMatrix::scalar(1));

  const Permutation c = Permutation::parse("(0 1 2)");
  const auto q = from_permutation(set, c);
  for (Id y = 0; y < 3; ++y)
    for (Id x = 0; x < 3; ++x) CHECK(q.entry(x, y)(0, 0) == cplx(x == c(y) ? 1.0 : 0.0));
  const auto r = validate(q, kTol);
  CHECK(r.ok);
  CHECK(r.worst_residual == 0.0);
  CHECK_THROWS_AS((void)from_permutation(IndexSet::finite(2), c), DomainError);
}

TEST_CASE("validate flags a missing diagonal entry at the row sum") {
  auto q = from_permutation(IndexSet::finite(3), Permutation{});
  q = extend_support(q, {0, 1, 2});
  std::vector<CMatrix> e = q.entries();
  e[0] = CMatrix::scalar(0);
  const QuantumPermutation broken(q.index_set(), 1, q.support(), e);
  const auto r = validate(broken, kTol);
  CHECK_FALSE(r.ok);
  CHECK(r.failing_constraint == "row sum 0");
  CHECK(r.worst_residual == doctest::Approx(1.0));
}

TEST_CASE("validate accepts the nonclassical fixture and rejects non-projections") {
  CHECK(validate(fixtures::nonclassical4(), kTol).ok);
  const auto bad = fixtures::two_block(CMatrix{{1, 1}, {0, 0}}, fixtures::plus_p());
  const auto r = validate(bad, kTol);
  CHECK_FALSE(r.ok);
  CHECK(r.failing_constraint.rfind("self-adjoint", 0) == 0);
}

TEST_CASE("classical embedding is a monoid map on S4 and contragredient inverts") {
  const IndexSet set = IndexSet::finite(4);
  const auto perms = all_permutations(4);
  REQUIRE(perms.size() == 24);
  for (const auto& s : perms) {
    const auto qs = from_permutation(set, s);
    CHECK(entry_distance(contragredient(qs), from_permutation(set, s.inverse())) == 0.0);
    CHECK(entry_distance(antipode_transpose(qs), from_permutation(set, s.inverse())) == 0.0);
    for (const auto& t : perms) {
      const auto prod = tensor(qs, from_permutation(set, t));
      CHECK(entry_distance(prod, from_permutation(set, compose(s, t))) == 0.0);
    }
  }
}

TEST_CASE("tensor unit law, dimensions and support") {
  const IndexSet set = IndexSet::finite(4);
  const auto s = fixtures::nonclassical4();
  const auto triv = QuantumPermutation::trivial(set);
  const auto u = tensor(triv, s);
  CHECK(u.dim() == 2);
  for (Id x = 0; x < 4; ++x)
    for (Id y = 0; y < 4; ++y) CHECK(u.entry(x, y) == kron(CMatrix::scalar(1), s.entry(x, y)));

  const auto three = direct_sum(direct_sum(from_permutation(set, Permutation::parse("(0 1)")),
                                           from_permutation(set, Permutation{})),
                                from_permutation(set, Permutation::parse("(2 3)")));
  CHECK(three.dim() == 3);
  const auto six = tensor(s, three);
  CHECK(six.dim() == 6);
  CHECK(validate(six, kTol).ok);

  const auto a = from_permutation(set, Permutation::parse("(0 1)"));
  const auto b = from_permutation(set, Permutation::parse("(2 3)"));
  CHECK(tensor(a, b).support() == std::vector<Id>{0, 1, 2, 3});
  CHECK_THROWS_AS((void)tensor(a, QuantumPermutation::trivial(IndexSet::finite(5))), DomainError);
}

TEST_CASE("coproduct identity: tensor entries are the explicit finite sums") {
  const IndexSet set = IndexSet::naturals();
  const auto s = fixtures::two_block(fixtures::diag_p(), fixtures::plus_p(), 0, set);
  const auto t = fixtures::two_block(fixtures::circ_p(), fixtures::diag_p(), 2, set);  // on {2..5}
  const auto st = tensor(s, t);
  CHECK(st.support() == std::vector<Id>{0, 1, 2, 3, 4, 5});
  for (Id x = 0; x < 8; ++x)
    for (Id y = 0; y < 8; ++y)
      CHECK(frobenius_distance(st.entry(x, y), coproduct_entry(s, t, x, y, 9)) <= 1e-15);
  CHECK(validate(st, kTol).ok);
}

TEST_CASE("tensor is associative on entries") {
  const IndexSet set = IndexSet::finite(4);
  const auto a = fixtures::nonclassical4();
  const auto b = fixtures::two_block(fixtures::circ_p(), fixtures::diag_p());
  const auto c = from_permutation(set, Permutation::parse("(1 2 3)"));
  const auto left = tensor(tensor(a, b), c);
  const auto right = tensor(a, tensor(b, c));
  CHECK(entry_distance(left, right) <= kTol.eps_equal);
}

TEST_CASE("direct_sum examples") {
  const IndexSet set = IndexSet::finite(3);
  const auto a = from_permutation(set, Permutation::parse("(0 1)"));
  const auto b = from_permutation(set, Permutation::parse("(1 2)"));
  const auto s = direct_sum(a, b);
  CHECK(s.dim() == 2);
  CHECK(s.entry(1, 0) == CMatrix{{1, 0}, {0, 0}});
  CHECK(s.entry(2, 1) == CMatrix{{0, 0}, {0, 1}});
  CHECK(validate(s, kTol).ok);
}

TEST_CASE("contragredient and antipode") {
  const auto s = fixtures::two_block(fixtures::circ_p(), fixtures::plus_p());
  const auto sbar = contragredient(s);
  CHECK(validate(sbar, kTol).ok);
  CHECK(entry_distance(contragredient(sbar), s) == 0.0);
  CHECK(sbar.entry(0, 0) == s.entry(0, 0).conj());
  const auto st = antipode_transpose(s);
  CHECK(entry_distance(antipode_transpose(st), s) == 0.0);
  for (Id x = 0; x < 4; ++x)
    for (Id y = 0; y < 4; ++y) CHECK(st.entry(x, y).conj() == sbar.entry(x, y));
  CHECK(validate(st, kTol).ok);
}

TEST_CASE("evaluation map intertwines the conjugate tensor square with the trivial one") {
  const auto s = fixtures::two_block(fixtures::circ_p(), fixtures::plus_p());
  const std::size_t d = s.dim();
  CMatrix ev(1, d * d);
  for (std::size_t i = 0; i < d; ++i) ev(0, i * d + i) = 1.0;
  const auto t = tensor(contragredient(s), s);
  for (Id x = 0; x < 4; ++x)
    for (Id y = 0; y < 4; ++y) {
      const CMatrix lhs = ev * t.entry(x, y);
      const CMatrix rhs = ev * cplx(x == y ? 1.0 : 0.0);
      CHECK(frobenius_distance(lhs, rhs) <= 1e-14);
    }
}

TEST_CASE("moved_points and counit_check") {
  const IndexSet set = IndexSet::finite(5);
  CHECK(moved_points(QuantumPermutation::trivial(set)).empty());
  CHECK(moved_points(from_permutation(set, Permutation::parse("(0 1)"))) == std::vector<Id>{0, 1});
  CHECK(moved_points(extend_support(from_permutation(set, Permutation::parse("(0 1)")), {3, 4})) ==
        std::vector<Id>{0, 1});
  CHECK(counit_check(QuantumPermutation::trivial(set)));
  CHECK_FALSE(counit_check(from_permutation(set, Permutation::parse("(0 1)"))));
  CHECK_FALSE(counit_check(from_permutation(set, Permutation::parse("(0 1 2)"))));
  CHECK_THROWS_AS((void)counit_check(fixtures::two_block(fixtures::diag_p(), fixtures::plus_p(), 0,
                                                         IndexSet::finite(5))),
                  DomainError);
}

TEST_CASE("entries of quantum permutations on three points commute") {
  // Constructors available on 3 points: classical embeddings and everything
  // reachable from them by tensor, direct sum, contragredient, antipode and
  // unitary conjugation.
  const IndexSet set = IndexSet::finite(3);
  std::vector<QuantumPermutation> pool;
  for (const auto& p : all_permutations(3)) pool.push_back(from_permutation(set, p));
  const std::size_t base = pool.size();
  Rng rng(17);
  for (std::size_t i = 0; i < base; ++i)
    for (std::size_t j = 0; j < base; ++j) {
      pool.push_back(tensor(pool[i], pool[j]));
      const auto sum = direct_sum(pool[i], pool[j]);
      pool.push_back(conjugate(sum, random_unitary(2, rng)));
      pool.push_back(contragredient(pool.back()));
    }
  for (const auto& q : pool) {
    CHECK(validate(q, kTol).ok);
    CHECK(max_entry_commutator(q) <= 1e-12);
  }
}

TEST_CASE("json round trip keeps entries and omits tail values") {
  const auto s = fixtures::two_block(fixtures::circ_p(), fixtures::plus_p());
  const json j = qperm_to_json(s);
  CHECK(j.at("dim") == 2);
  CHECK(j.at("index_set").at("kind") == "finite");
  const auto back = qperm_from_json(j);
  CHECK(entry_distance(back, s) == 0.0);

  const auto t = from_permutation(IndexSet::naturals(), Permutation::parse("(0 1)"));
  const json jt = qperm_to_json(t);
  CHECK(jt.at("entries").size() == 4);  // u_00 = u_11 = 0 differ from the tail value
  CHECK(entry_distance(qperm_from_json(jt), t) == 0.0);

  CHECK_THROWS_AS((void)qperm_from_json(json::parse(R"({"dim":1})")), ParseError);
  CHECK_THROWS_AS((void)qperm_from_json(json::parse(
                      R"({"index_set":{"kind":"naturals"},"dim":1,"support":[0],"entries":{"0,7":{"rows":1,"cols":1,"data":[[0,0]]}}})")),
                  ParseError);
}

TEST_CASE("bf_init uses coordinate projections on the first row") {
  const auto s = bf_init();
  CHECK(s.domain() == std::set<Id>{0});
  CHECK(s.range().empty());
  CHECK(s.window() == kBfInitialWindow);
  for (Id y = 0; y < s.window(); ++y) {
    const CMatrix u = s.dense_entry(0, y);
    for (Id z = 0; z < s.window(); ++z) {
      CMatrix e(s.window(), 1);
      e(z, 0) = 1.0;
      const CMatrix ue = u * e;
      CHECK(ue == (z == y ? e : CMatrix(s.window(), 1)));
    }
  }
  const auto r = validate_partial(s);
  CHECK(r.ok);
  CHECK(r.worst_residual == 0.0);
  CHECK(r.max_support == 1);
  CHECK(r.max_row_multiplicity == 1);
}

TEST_CASE("one domain step and one range step keep the partial axioms exactly") {
  const auto s0 = bf_init();
  const auto s1 = bf_step(s0, BfSide::domain);
  CHECK(s1.domain() == std::set<Id>{0, 1});
  const auto s2 = bf_step(s1, BfSide::range);
  CHECK(s2.range() == std::set<Id>{0});
  for (const auto* s : {&s1, &s2}) {
    const auto r = validate_partial(*s);
    CHECK(r.ok);
    CHECK(r.worst_residual == 0.0);
  }
  // Committed entries never change.
  for (const auto& [key, e] : s1.entries()) {
    const auto* later = s2.find(key.first, key.second);
    REQUIRE(later != nullptr);
    CHECK(later->support == e.support);
    CHECK(later->local == e.local);
  }
}

TEST_CASE("row of a new domain point plus its assigned pieces is the window identity") {
  const auto s = bf_step(bf_step(bf_init(), BfSide::range), BfSide::domain);
  CMatrix sum(s.window(), s.window());
  for (Id y : s.row_keys(1)) sum += s.dense_entry(1, y);
  CHECK(sum == CMatrix::identity(s.window()));
}

TEST_CASE("bf_run enumerates points on both sides") {
  for (std::size_t m : {1u, 2u, 5u, 10u, 17u}) {
    const auto s = bf_run(m);
    const auto r = validate_partial(s);
    CHECK(r.ok);
    CHECK(r.worst_residual == 0.0);
    for (Id i = 1; i <= (m + 1) / 2; ++i) {
      const Id x = i - 1;
      CHECK((s.domain().contains(x) || s.range().contains(x)));
    }
  }
}

TEST_CASE("bf_step rejects an input that breaks the partial axioms") {
  const auto s = bf_init();
  const auto broken = s.with_entry(0, 0, SparseProjection{{0}, CMatrix::scalar(0.5)});
  CHECK_THROWS_AS((void)bf_step(broken, BfSide::domain), DomainError);
}

TEST_CASE("block4 policy produces non-coordinate pieces that still satisfy the axioms") {
  const auto s = bf_run(8, BfPolicy::block4, 42);
  const auto r = validate_partial(s);
  CHECK(r.ok);
  CHECK(r.worst_residual <= 1e-10);
  CHECK(r.max_support > 1);
  CHECK(r.max_support <= kBfBlock);
  // deterministic per seed
  const auto again = bf_run(8, BfPolicy::block4, 42);
  CHECK(partial_to_json(again) == partial_to_json(s));
}
