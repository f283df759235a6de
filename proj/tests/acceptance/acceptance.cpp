// Acceptance suite: one PASS/FAIL line per criterion, exit 1 on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "structure_fixtures.hpp"
#include "qsym/graphs/rado.hpp"
#include "qsym/numerics/linalg.hpp"
#include "qsym/pauli/folner.hpp"
#include "qsym/pauli/model.hpp"
#include "qsym/qaut/disjoint_union.hpp"
#include "qsym/qaut/rado_certify.hpp"
#include "qsym/qperm/partial.hpp"
#include "qsym/reptheory/decompose.hpp"
#include "qsym/reptheory/intertwiner.hpp"
#include "qsym/reptheory/line_audit.hpp"

using namespace qsym;

namespace {

const Tolerance kTol{};

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail.str("");
      detail << "failed: " << what;
    }
  }
};

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<Permutation> all_permutations(Id n) {
  std::vector<Id> images(n);
  for (Id i = 0; i < n; ++i) images[i] = i;
  std::vector<Permutation> out;
  do out.push_back(Permutation::from_images(images));
  while (std::next_permutation(images.begin(), images.end()));
  return out;
}

// Deterministic words in a, b and their inverses of length 1..5.
std::vector<Rot3> sample_words(std::size_t count, std::uint64_t state) {
  const auto& gen = free_generators();
  const std::array<Rot3, 4> letters = {gen.a, gen.a.transpose(), gen.b, gen.b.transpose()};
  std::vector<Rot3> out;
  for (std::size_t i = 0; i < count; ++i) {
    Rot3 g;
    const std::size_t len = 1 + i % 5;
    for (std::size_t k = 0; k < len; ++k) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      g = g * letters[(state >> 33) % 4];
    }
    out.push_back(g);
  }
  return out;
}

void ac1(Verdict& v) {
  const auto t0 = Clock::now();
  const IndexSet four = IndexSet::finite(4);
  const auto perms = all_permutations(4);
  double worst = 0.0;
  for (const auto& s : perms) {
    const auto qs = from_permutation(four, s);
    worst = std::max(worst, entry_distance(contragredient(qs), from_permutation(four, s.inverse())));
    for (const auto& t : perms)
      worst = std::max(worst, entry_distance(tensor(qs, from_permutation(four, t)), from_permutation(four, compose(s, t))));
  }
  const double secs = seconds_since(t0);
  v.require(perms.size() == 24, "24 permutations");
  v.require(worst == 0.0, "tensor/contragredient residual is exactly 0");
  v.require(secs < 1.0, "runtime below 1 s");
  v.detail << "576 products + 24 inverses, residual " << worst << ", " << secs << " s";
}

void ac2(Verdict& v) {
  const IndexSet three = IndexSet::finite(3);
  std::vector<QuantumPermutation> pool;
  for (const auto& s : all_permutations(3)) pool.push_back(from_permutation(three, s));
  for (std::size_t d = 1; d <= 3; ++d) pool.push_back(QuantumPermutation::trivial(three, d));
  const std::size_t base = pool.size();
  for (std::size_t i = 0; i < base; ++i) {
    pool.push_back(contragredient(pool[i]));
    pool.push_back(antipode_transpose(pool[i]));
    for (std::size_t j = 0; j < base; ++j) {
      pool.push_back(tensor(pool[i], pool[j]));
      pool.push_back(direct_sum(pool[i], pool[j]));
    }
  }
  Rng rng(2024);
  const std::size_t mixed = pool.size();
  for (std::size_t i = base; i < mixed; i += 7) {
    pool.push_back(conjugate(pool[i], random_unitary(pool[i].dim(), rng)));
    for (const auto& c : decompose(pool.back(), kTol, 1)) pool.push_back(c.irreducible);
  }
  const GraphPtr k3 = make_graph("complete:3");
  // three points admit no disjoint pair of nontrivial permutations, so k = 1
  pool.push_back(disjoint_auto(Permutation::parse("(0 1)"), Permutation(), 1, k3).qp);
  pool.push_back(disjoint_auto(Permutation::parse("(0 1 2)"), Permutation(), 1, k3).qp);
  pool.push_back(disjoint_auto(Permutation::parse("(0 2)"), Permutation(), 1, make_graph("path:3")).qp);
  pool.push_back(fixtures::plus_rotation());
  for (const auto& pi : fixtures::du_fixtures(k3))
    for (const auto& [copy, local] : pi.local()) pool.push_back(local);
  double worst = 0.0;
  for (const auto& qp : pool) {
    v.require(validate(qp, kTol).ok, "every pooled instance is a quantum permutation");
    worst = std::max(worst, max_entry_commutator(qp));
  }
  v.require(worst <= 1e-12, "entry commutators at most 1e-12");
  v.detail << pool.size() << " instances on 3 points, max commutator " << worst;
}

void ac3(Verdict& v) {
  const auto t0 = Clock::now();
  const QAutCandidate c = fixtures::union_rotations();
  const QAutReport rep = is_quantum_automorphism(c, kTol);
  const bool irreducible = is_irreducible(c.qp, kTol);
  const std::size_t alg = generated_algebra_dimension(entry_family(c.qp), 4, kTol);
  const double secs = seconds_since(t0);
  v.require(rep.ok && rep.worst_residual <= 1e-12, "is_quantum_automorphism with residual <= 1e-12");
  v.require(irreducible, "irreducible");
  v.require(alg == 9, "generated algebra has dimension 9");
  v.require(secs < 1.0, "runtime below 1 s");
  v.detail << "residual " << rep.worst_residual << ", irreducible " << irreducible << ", algebra dim " << alg << ", "
           << secs << " s";
}

void ac4(Verdict& v) {
  double worst = 0.0;
  double s3 = 0.0;
  for (const auto& g : sample_words(20, 4)) {
    const auto rep = verify_relations(eval_rep(g), kTol);
    v.require(rep.ok, "relations hold for " + g.to_string());
    worst = std::max(worst, rep.worst_residual);
    s3 = std::max(s3, rep.s3_sum);
  }
  v.require(worst <= 1e-12, "relation residual <= 1e-12");
  const auto dec = decompose_identity_rep();
  std::set<Rot3> chars(dec.characters.begin(), dec.characters.end());
  v.require(chars.size() == 4, "four distinct characters");
  for (std::size_t k = 0; k < 4; ++k) {
    v.require(dec.characters[k] == klein_d()[k], "character k matches d_k");
    v.require(std::abs(dec.projections[k].trace() - cplx(1.0)) < 1e-12, "characters are one-dimensional");
  }
  const auto irr = packet_irreducibles(Rot3(), kTol);
  v.require(irr.size() == 4 && std::all_of(irr.begin(), irr.end(), [](const Irreducible& x) { return x.dim == 1; }),
            "identity packet is four 1-dim irreducibles");
  v.detail << "20 words, worst residual " << worst << " (S3 sum " << s3 << "), 4 characters d0..d3";
}

void ac5(Verdict& v) {
  const auto gs = sample_words(10, 55);
  const auto hs = sample_words(10, 77);
  double worst = 0.0;
  for (std::size_t i = 0; i < 10; ++i) {
    const auto res = fuse(gs[i], hs[(i * 3) % 10], kTol);
    std::size_t dims = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      const auto& b = res.blocks[k];
      v.require(b.certified && b.residual <= 1e-8, "block certified with residual <= 1e-8");
      v.require(b.product == gs[i] * klein_d()[k] * hs[(i * 3) % 10], "block sits over g d_i h");
      worst = std::max(worst, b.residual);
      dims += b.isometry.cols();
    }
    v.require(dims == 16 && res.total_dim == 16, "block dimensions sum to 16");
  }
  v.detail << "10 pairs, 40 blocks, worst intertwining residual " << worst;
}

void ac6(Verdict& v) {
  std::size_t max_orbit = 0;
  std::size_t max_irr = 0;
  for (const auto& g : sample_words(20, 99)) {
    const auto orb = orbit(g);
    const auto here = packet_irreducibles(g, kTol);
    const Rot3 other = orb.front() == g ? orb.back() : orb.front();
    const auto there = packet_irreducibles(other, kTol);
    max_orbit = std::max(max_orbit, orb.size());
    max_irr = std::max(max_irr, here.size());
    v.require(orb.size() <= 16, "orbit size <= 16");
    v.require(here.size() <= 4, "at most 4 irreducibles");
    v.require(cross_realise(here, there, kTol).has_value(), "cross realisation at a second orbit point");
  }
  v.detail << "20 elements, max orbit " << max_orbit << ", max packet " << max_irr;
}

void ac7(Verdict& v) {
  const auto t0 = Clock::now();
  const auto& gen = free_generators();
  const std::vector<Rot3> s{gen.a, gen.b};
  const auto full = ball(8);
  std::size_t prefix = 0;
  std::size_t expect = 1;
  double min_ratio = 1e9;
  for (std::size_t r = 0; r <= 8; ++r) {
    prefix += full.sphere_sizes[r];
    v.require(prefix == 2 * expect - 1, "ball size 2*3^r - 1 at r = " + std::to_string(r));
    expect *= 3;
    if (r >= 2) {
      const Rot3Set f(full.elements.begin(), full.elements.begin() + static_cast<std::ptrdiff_t>(prefix));
      const double ratio = static_cast<double>(folner_boundary(f, s).size()) / static_cast<double>(prefix);
      min_ratio = std::min(min_ratio, ratio);
      v.require(ratio >= 0.5, "boundary ratio >= 1/2 at r = " + std::to_string(r));
    }
  }
  const auto tr = transfer_check(ball(3).elements, s, kTol);
  v.require(tr.transfer_holds, "16x packet transfer on ball(3)");
  v.require(tr.packet_bound, "|F| <= 4|F-|");
  const double secs = seconds_since(t0);
  v.require(secs < 60.0, "runtime below 60 s");
  v.detail << "|B_8| = " << full.elements.size() << ", min ratio " << min_ratio << ", transfer " << tr.group_boundary
           << " <= 16*" << tr.irreducible_boundary() << ", " << secs << " s";
}

void ac8(Verdict& v) {
  const GraphPtr k3 = make_graph("complete:3");
  const auto fx = fixtures::du_fixtures(k3);
  bool has_classical = false;
  bool has_quantum = false;
  double worst = 0.0;
  for (const auto& pi : fx) {
    const QAutCandidate f = du_forward(pi, k3, kTol);
    v.require(is_quantum_automorphism(f, kTol).ok, "forward image is a quantum automorphism");
    (is_classical(f.qp, kTol) ? has_classical : has_quantum) = true;
    worst = std::max(worst, magic_wreath_distance(du_backward(f, kTol), pi));
    worst = std::max(worst, entry_distance(du_forward(du_backward(f, kTol), k3, kTol).qp, f.qp));
    for (const auto& rho : fx) {
      const QAutCandidate lhs = du_forward(magic_wreath_tensor(pi, rho), k3, kTol);
      worst = std::max(worst, entry_distance(lhs.qp, tensor(f.qp, du_forward(rho, k3, kTol).qp)));
    }
  }
  v.require(has_classical && has_quantum, "fixture set has classical and nonclassical members");
  v.require(worst <= 1e-12, "round trips and tensor compatibility within 1e-12");
  v.detail << fx.size() << " wreath coreps, " << fx.size() * fx.size() << " tensor pairs, worst " << worst;
}

void ac9(Verdict& v) {
  const QAutCandidate k4 = fixtures::k4_quantum();
  v.require(!is_classical(k4.qp, kTol), "K4 candidate is nonclassical");
  const QAutCandidate c5 = classical_candidate(make_graph("cycle:5"), Permutation::parse("(0 1 2 3 4)"));
  double worst = 0.0;
  for (ProductKind kind : {ProductKind::direct, ProductKind::cartesian, ProductKind::strong}) {
    const QAutReport rep = is_quantum_automorphism(product_lift(k4, c5, kind, kTol), kTol);
    v.require(rep.ok && rep.worst_residual <= 1e-10, "lift is a quantum automorphism on " + to_string(kind));
    worst = std::max(worst, rep.worst_residual);
  }
  v.detail << "direct, cartesian, strong products of K4 and C5, worst residual " << worst;
}

void ac10(Verdict& v) {
  const auto t0 = Clock::now();
  const GraphPtr r = rado_graph();
  for (Id i = 0; i < 50; ++i)
    for (Id j = 0; j < 50; ++j)
      if (i != j) v.require(r->adjacent(i, j) == r->adjacent(j, i), "symmetric adjacency");
  std::size_t searches = 0;
  for (unsigned a = 0; a < 256; ++a) {
    if (std::popcount(a) > 3) continue;
    for (unsigned b = 0; b < 256; ++b) {
      if ((a & b) != 0 || std::popcount(b) > 3) continue;
      std::vector<Id> in;
      std::vector<Id> out;
      for (unsigned k = 0; k < 8; ++k) {
        if ((a >> k) & 1U) in.push_back(rado_vertex(k));
        if ((b >> k) & 1U) out.push_back(rado_vertex(k));
      }
      const Id w = rado_witness(in, out, 1'000'000);
      for (Id p : in) v.require(rado_adjacent(w, p), "witness adjacent to A");
      for (Id p : out) v.require(!rado_adjacent(w, p), "witness not adjacent to B");
      ++searches;
    }
  }
  std::vector<QAutCandidate> classical{
      make_candidate(r, QuantumPermutation::trivial(r->index_set(), 1)),
      make_candidate(r, QuantumPermutation::trivial(r->index_set(), 2)),
      classical_candidate(r, Permutation::parse("(2 5)")),
  };
  for (const auto& c : classical)
    v.require(rado_certify(c, kTol).verdict == RadoVerdict::all_commute, "classical fixture: all entries commute");
  const RadoCertificate bad = rado_certify(fixtures::rado_noncommuting(r), kTol);
  v.require(bad.verdict == RadoVerdict::relation_violated && bad.witness.has_value(),
            "synthetic fixture rejected with a witness");
  const double secs = seconds_since(t0);
  v.require(secs < 30.0, "runtime below 30 s");
  v.detail << searches << " witness searches, " << classical.size() << " classical fixtures";
  if (bad.witness) v.detail << ", rejection witness vertex " << *bad.witness << " (prime " << *bad.witness_prime << ")";
  v.detail << ", " << secs << " s";
}

void ac11(Verdict& v) {
  const auto state = bf_run(50, BfPolicy::coordinate, 0, kTol);
  const auto rep = validate_partial(state, kTol);
  v.require(rep.ok && rep.worst_residual == 0.0, "partial axioms hold exactly");
  v.require(rep.max_row_multiplicity >= 1 && rep.max_column_multiplicity >= 1 && rep.max_support >= 1,
            "locally finite rank counts are finite and positive");
  v.require(rep.supports_in_window, "supports lie in the window");
  // 50 steps alternate range/domain, so 25 points are enumerated on each side
  for (Id x = 0; x < 25; ++x)
    v.require(state.domain().contains(x) || state.range().contains(x), "point " + std::to_string(x) + " covered");
  v.detail << "domain " << state.domain().size() << ", range " << state.range().size() << ", row/col/support ranks "
           << rep.max_row_multiplicity << "/" << rep.max_column_multiplicity << "/" << rep.max_support;
}

void ac12(Verdict& v) {
  double worst = 0.0;
  for (const auto& w : {fixtures::z2_fixture(), fixtures::z3_fixture(),
                        WreathCorep::classical(FiniteGroup::cyclic(3), IndexSet::finite(4), {{0, 1}, {2, 2}},
                                               Permutation::parse("(0 1 2)"))}) {
    const auto cert = wreath_evdb(w, kTol);
    v.require(cert.ok, "ev/db certified");
    for (double r : {cert.ev_residual, cert.db_residual, cert.zigzag_residual, cert.dual_ev_residual,
                     cert.dual_db_residual, cert.dual_zigzag_residual})
      worst = std::max(worst, r);
  }
  v.require(worst <= 1e-12, "intertwining and zig-zag residuals <= 1e-12");
  v.detail << "Z/2, Z/3 and classical Z/3 fixtures, worst residual " << worst;
}

void ac13(Verdict& v) {
  const auto shift = audit_line_steps(line_window_from_map(6, [](std::int64_t i) { return i + 1; }), kTol);
  const auto refl = audit_line_steps(line_window_from_map(6, [](std::int64_t i) { return -i; }), kTol);
  v.require(shift.ok(), "shift passes every step");
  v.require(refl.ok(), "reflection passes every step");
  const auto bad = audit_line_steps(line_window_from_map(6, [](std::int64_t i) { return i == 0 ? 1 : (i == 1 ? 0 : i); }), kTol);
  v.require(!bad.precondition_ok && bad.steps.empty(), "violating fixture rejected at the precondition");
  v.detail << shift.steps.size() << " + " << refl.steps.size() << " steps passed; violation: " << bad.precondition_failure;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Verdict&)>>> criteria{
      {"AC1", ac1},  {"AC2", ac2},  {"AC3", ac3},  {"AC4", ac4},   {"AC5", ac5},   {"AC6", ac6},  {"AC7", ac7},
      {"AC8", ac8},  {"AC9", ac9},  {"AC10", ac10}, {"AC11", ac11}, {"AC12", ac12}, {"AC13", ac13}};
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Verdict v;
    try {
      fn(v);
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail.str("");
      v.detail << "exception: " << e.what();
    }
    failures += v.pass ? 0 : 1;
    std::cout << name << ' ' << (v.pass ? "PASS" : "FAIL") << "  " << v.detail.str() << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failures == 0 ? 0 : 1;
}
