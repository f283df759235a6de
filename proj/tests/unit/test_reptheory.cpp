#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "qsym/error.hpp"
#include "qsym/numerics/linalg.hpp"
#include "qsym/reptheory/decompose.hpp"
#include "qsym/reptheory/intertwiner.hpp"
#include "qsym/reptheory/json.hpp"
#include "qsym/reptheory/line_audit.hpp"

using namespace qsym;

namespace {

const Tolerance kTol{};
const IndexSet kFour = IndexSet::finite(4);

// Projection onto (cos t, sin t).
CMatrix line_p(double t) {
  const double c = std::cos(t);
  const double s = std::sin(t);
  return CMatrix{{c * c, c * s}, {c * s, s * s}};
}

QuantumPermutation classical(const char* cycles) {
  return from_permutation(kFour, Permutation::parse(cycles));
}

}  // namespace

TEST_CASE("intertwiner dimensions on hand-counted pairs") {
  const auto swap01 = classical("(0 1)");
  CHECK(intertwiner_space(swap01, swap01, kTol).dimension() == 1);
  CHECK(intertwiner_space(swap01, classical("(2 3)"), kTol).dimension() == 0);

  // M_2 is generated by diag(1,0) and the (1,1) projection, so the commutant is scalar.
  const auto nc = fixtures::nonclassical4();
  CHECK(intertwiner_space(nc, nc, kTol).dimension() == 1);
  // Commutant of a doubled irreducible is M_2.
  const auto twice = direct_sum(nc, nc);
  const IntertwinerBasis b = intertwiner_space(twice, twice, kTol);
  CHECK(b.dimension() == 4);
  const PairedFamilies fam = paired_entries(twice, twice);
  for (const auto& t : b.basis) {
    CHECK(std::abs(frobenius_norm(t) - 1.0) < 1e-12);
    CHECK(intertwining_residual(t, fam.source, fam.target) <= 10 * kTol.eps_null);
  }
  // Trivial dim-3 quantum permutation: every 3x3 matrix intertwines.
  const auto triv = QuantumPermutation::trivial(kFour, 3);
  CHECK(intertwiner_space(triv, triv, kTol).dimension() == 9);

  CHECK_THROWS_AS((void)intertwiner_space(swap01, from_permutation(IndexSet::finite(5), {}), kTol),
                  DomainError);
}

TEST_CASE("intertwiner dimension is symmetric under swapping source and target") {
  const std::vector<QuantumPermutation> pool = {
      classical("(0 1)"),
      classical("(0 1)(2 3)"),
      fixtures::nonclassical4(),
      fixtures::two_block(fixtures::diag_p(), line_p(M_PI / 3)),
      direct_sum(classical("(0 1)"), classical("(2 3)")),
      direct_sum(classical("(0 1)"), classical("(0 1)")),
      direct_sum(fixtures::nonclassical4(), classical("")),
  };
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      CHECK(intertwiner_space(a, b, kTol).dimension() == intertwiner_space(b, a, kTol).dimension());
    }
  }
}

TEST_CASE("irreducibility") {
  CHECK(is_irreducible(classical("(0 1 2)"), kTol));
  CHECK(is_irreducible(fixtures::nonclassical4(), kTol));
  CHECK_FALSE(is_irreducible(direct_sum(classical("(0 1)"), classical("(1 2)")), kTol));
  CHECK_FALSE(is_irreducible(fixtures::two_block(fixtures::diag_p(), fixtures::diag_p()), kTol));
}

TEST_CASE("unitary equivalence") {
  const auto nc = fixtures::nonclassical4();
  const auto self = unitarily_equivalent(nc, nc, kTol);
  REQUIRE(self.has_value());
  CHECK(frobenius_distance(*self, CMatrix::identity(2)) < 1e-10);

  CHECK_FALSE(unitarily_equivalent(nc, direct_sum(nc, nc), kTol).has_value());
  CHECK_FALSE(unitarily_equivalent(classical("(0 1)"), classical("(2 3)"), kTol).has_value());
  // Same two projections at a different angle: not equivalent.
  CHECK_FALSE(
      unitarily_equivalent(nc, fixtures::two_block(fixtures::diag_p(), line_p(M_PI / 3)), kTol)
          .has_value());

  Rng rng(7);
  const auto big = direct_sum(nc, fixtures::two_block(fixtures::diag_p(), line_p(M_PI / 3)));
  const CMatrix v = random_unitary(4, rng);
  const auto rotated = conjugate(big, v);
  const auto u = unitarily_equivalent(big, rotated, kTol, 3);
  REQUIRE(u.has_value());
  CHECK(unitarity_defect(*u) <= kTol.eps_proj);
  const PairedFamilies fam = paired_entries(big, rotated);
  CHECK(intertwining_residual(*u, fam.source, fam.target) <= 10 * kTol.eps_null);
}

TEST_CASE("decomposition examples") {
  const auto cls = classical("(0 1 2)");
  auto comps = decompose(cls, kTol, 1);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].multiplicity == 1);
  CHECK(entry_distance(comps[0].irreducible, cls) < 1e-12);

  const auto nc = fixtures::nonclassical4();
  comps = decompose(direct_sum(nc, nc), kTol, 5);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].multiplicity == 2);
  CHECK(comps[0].irreducible.dim() == 2);
  CHECK(is_irreducible(comps[0].irreducible, kTol));

  // Trivial dim 3 splits into three copies of the counit.
  comps = decompose(QuantumPermutation::trivial(kFour, 3), kTol, 2);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].multiplicity == 3);
}

TEST_CASE("decomposition: multiplicities, reassembly and isometries") {
  const auto nc = fixtures::nonclassical4();
  const auto other = fixtures::two_block(fixtures::diag_p(), line_p(M_PI / 3));
  Rng rng(11);
  const std::vector<QuantumPermutation> inputs = {
      direct_sum(direct_sum(nc, other), nc),
      conjugate(direct_sum(direct_sum(nc, classical("(0 1)")), classical("(0 1)")),
                random_unitary(4, rng)),
      direct_sum(classical("(0 2)"), classical("(1 3)")),
  };
  for (const auto& qp : inputs) {
    for (std::uint64_t seed : {0u, 9u}) {
      const auto comps = decompose(qp, kTol, seed);
      std::size_t squares = 0;
      std::size_t total = 0;
      for (const auto& c : comps) {
        squares += c.multiplicity * c.multiplicity;
        total += c.multiplicity * c.irreducible.dim();
        CHECK(is_irreducible(c.irreducible, kTol));
        CHECK(c.isometries.size() == c.multiplicity);
      }
      CHECK(total == qp.dim());
      CHECK(squares == intertwiner_space(qp, qp, kTol).dimension());

      const auto back = reassemble(comps);
      const auto u = unitarily_equivalent(back, qp, kTol, seed);
      REQUIRE(u.has_value());
      const PairedFamilies fam = paired_entries(back, qp);
      CHECK(intertwining_residual(*u, fam.source, fam.target) <= 1e-8);

      // The isometries compress every entry to the irreducible's entry.
      for (const auto& c : comps) {
        for (const auto& w : c.isometries) {
          CHECK(entry_distance(trim_support(compress(qp, w), kTol), c.irreducible) < 1e-8);
        }
      }
    }
  }
  // Deterministic given the seed.
  const auto a = decompose(inputs[1], kTol, 4);
  const auto b = decompose(inputs[1], kTol, 4);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].isometries.front() == b[k].isometries.front());
  }
}

TEST_CASE("generated algebra dimension") {
  CHECK(generated_algebra_dimension(entry_family(fixtures::nonclassical4()), 4, kTol) == 4);
  CHECK(generated_algebra_dimension(
            entry_family(fixtures::two_block(fixtures::diag_p(), fixtures::diag_p())), 4, kTol) == 2);
  CHECK(generated_algebra_dimension({}, 0, kTol) == 1);
  // Word length 1 only reaches span{1, p, q}.
  CHECK(generated_algebra_dimension(entry_family(fixtures::nonclassical4()), 1, kTol) == 3);
}

TEST_CASE("line audit passes on classical windows") {
  for (auto f : {+[](std::int64_t i) { return i + 1; }, +[](std::int64_t i) { return -i; }}) {
    const LineWindow w = line_window_from_map(6, f);
    const LineAuditReport rep = audit_line_steps(w, kTol);
    CHECK(rep.precondition_ok);
    CHECK(rep.ok());
    CHECK(rep.steps.size() == 14);
    CHECK(rep.steps.front().step == "d1");
  }
}

TEST_CASE("line audit on a rotated direct sum of shift and reflection") {
  const LineWindow shift = line_window_from_map(5, [](std::int64_t i) { return i + 1; });
  const LineWindow refl = line_window_from_map(5, [](std::int64_t i) { return -i; });
  Rng rng(2);
  const CMatrix v = random_unitary(2, rng);
  LineWindow w{5, 2, {}};
  for (const auto& [key, m] : shift.entries) {
    w.entries[key] = v * block_diag(m, refl.entries.at(key)) * v.adjoint();
  }
  const LineAuditReport rep = audit_line_steps(w, kTol);
  CHECK(rep.ok());
}

TEST_CASE("line audit rejects relation violations at the precondition") {
  LineWindow w = line_window_from_map(6, [](std::int64_t i) { return i + 1; });
  w.entries[{0, 0}] = CMatrix::scalar(1.0);  // breaks u_01 + u_0,-1 = u_10 + u_-1,0 and a column
  const LineAuditReport rep = audit_line_steps(w, kTol);
  CHECK_FALSE(rep.precondition_ok);
  CHECK_FALSE(rep.ok());
  CHECK(rep.steps.empty());

  // Row/column orthogonality holds but the adjacency relation does not: identity map
  // composed with a swap of 0 and 1 somewhere in the middle.
  LineWindow bad = line_window_from_map(6, [](std::int64_t i) {
    return i == 0 ? 1 : (i == 1 ? 0 : i);
  });
  const LineAuditReport rep2 = audit_line_steps(bad, kTol);
  CHECK_FALSE(rep2.precondition_ok);
  CHECK(rep2.precondition_failure.rfind("adjacency relation", 0) == 0);
}

TEST_CASE("reptheory JSON") {
  const LineWindow w = line_window_from_map(3, [](std::int64_t i) { return -i; });
  const json jw = line_window_to_json(w);
  const LineWindow back = line_window_from_json(jw);
  CHECK(back.entries.size() == w.entries.size());
  CHECK(back.at(-2, 2) == w.at(-2, 2));

  const json rep = audit_line_steps(w, kTol);
  CHECK(rep.at("ok").get<bool>());
  CHECK(rep.at("steps")[0].at("step") == "d1");
  CHECK(rep.at("steps")[0].contains("residual"));

  CHECK_THROWS_AS((void)line_window_from_json(json{{"radius", 2}}), ParseError);
  CHECK_THROWS_AS((void)line_window_from_json(json::parse(R"({"radius":2,"dim":1,"entries":{"a":1}})")),
                  ParseError);
}
