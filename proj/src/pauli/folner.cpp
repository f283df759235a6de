#include "qsym/pauli/folner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qsym/error.hpp"
#include "qsym/reptheory/intertwiner.hpp"

namespace qsym {
namespace {

Rot3 rational_rotation(std::size_t axis) {
  // rotation by arccos(3/5) in the plane orthogonal to `axis`
  Rot3::Entries e;
  const std::size_t p = (axis + 1) % 3;
  const std::size_t q = (axis + 2) % 3;
  e[3 * axis + axis] = 1;
  e[3 * p + p] = Rational(3, 5);
  e[3 * q + q] = Rational(3, 5);
  e[3 * p + q] = Rational(-4, 5);
  e[3 * q + p] = Rational(4, 5);
  return Rot3(e);
}

// Orbit data keyed by canonical representative.
class PacketCache {
 public:
  explicit PacketCache(const Tolerance& tol) : tol_(tol) {}

  const std::vector<Irreducible>& irreducibles(const Rot3& canon) {
    auto it = irr_.find(canon);
    if (it == irr_.end()) it = irr_.emplace(canon, packet_irreducibles(canon, tol_)).first;
    return it->second;
  }
  const std::vector<CMatrix>& eval(const Rot3& canon) {
    auto it = eval_.find(canon);
    if (it == eval_.end()) it = eval_.emplace(canon, eval_rep(canon).family()).first;
    return it->second;
  }

 private:
  Tolerance tol_;
  std::map<Rot3, std::vector<Irreducible>> irr_;
  std::map<Rot3, std::vector<CMatrix>> eval_;
};

}  // namespace

const FreeGenerators& free_generators() {
  // z is axis 2, x is axis 0
  static const FreeGenerators g{rational_rotation(2), rational_rotation(0)};
  return g;
}

Ball ball(std::size_t radius) {
  if (radius > 10) throw DomainError("ball: radius above 10");
  const auto& gen = free_generators();
  // letters a, a⁻¹, b, b⁻¹; letter ^ 1 is the inverse
  const std::array<Rot3, 4> letters = {gen.a, gen.a.transpose(), gen.b, gen.b.transpose()};
  Ball out;
  Rot3Set seen;
  struct Word {
    Rot3 value;
    int last;
  };
  std::vector<Word> frontier{{Rot3(), -1}};
  seen.insert(Rot3());
  out.elements.push_back(Rot3());
  out.words = 1;
  out.sphere_sizes.push_back(1);
  for (std::size_t len = 1; len <= radius; ++len) {
    std::vector<Word> next;
    std::size_t fresh = 0;
    for (const Word& w : frontier) {
      for (int l = 0; l < 4; ++l) {
        if (w.last >= 0 && l == (w.last ^ 1)) continue;
        Rot3 v = w.value * letters[l];
        ++out.words;
        if (seen.insert(v).second) {
          out.elements.push_back(v);
          ++fresh;
        }
        next.push_back({std::move(v), l});
      }
    }
    out.sphere_sizes.push_back(fresh);
    frontier = std::move(next);
  }
  return out;
}

Rot3Set folner_boundary(const Rot3Set& f, const std::vector<Rot3>& s) {
  if (s.empty()) throw DomainError("folner_boundary: S must be nonempty");
  Rot3Set out;
  std::vector<Rot3> inverses;
  for (const auto& g : s) inverses.push_back(g.transpose());
  for (const auto& t : f) {
    for (const auto& g : s) {
      if (!f.contains(t * g)) {
        out.insert(t);
        break;
      }
    }
    // outside points t with t s ∈ F are exactly f s⁻¹ ∉ F
    for (const auto& gi : inverses) {
      Rot3 u = t * gi;
      if (!f.contains(u)) out.insert(std::move(u));
    }
  }
  return out;
}

std::vector<PacketEntry> packet_lift(const std::vector<Rot3>& s, const Tolerance& tol) {
  std::set<Rot3> canon;
  for (const auto& g : s) canon.insert(canonical(g));
  std::vector<PacketEntry> out;
  for (const auto& c : canon) out.push_back({c, packet_irreducibles(c, tol)});
  return out;
}

std::vector<Rot3> packet_drop(const std::vector<Irreducible>& t) {
  std::set<Rot3> canon;
  for (const auto& irr : t) canon.insert(canonical(irr.base));
  return {canon.begin(), canon.end()};
}

Rot3Set packet_drop_elements(const std::vector<Irreducible>& t) {
  Rot3Set out;
  for (const auto& c : packet_drop(t))
    for (auto& g : orbit(c)) out.insert(std::move(g));
  return out;
}

TransferReport transfer_check(const std::vector<Rot3>& f_points, const std::vector<Rot3>& s, const Tolerance& tol) {
  TransferReport rep;
  PacketCache cache(tol);
  std::set<Rot3> f_orbits;
  for (const auto& g : f_points) f_orbits.insert(canonical(g));
  Rot3Set f_minus;
  for (const auto& c : f_orbits) {
    for (auto& g : orbit(c)) f_minus.insert(std::move(g));
    rep.f_irreducibles += cache.irreducibles(c).size();
  }
  rep.f_minus = f_minus.size();
  rep.f_minus_orbits = f_orbits.size();

  std::vector<Irreducible> s_plus;
  for (auto& e : packet_lift(s, tol))
    for (auto& irr : e.irreducibles) s_plus.push_back(std::move(irr));
  rep.s_plus = s_plus.size();
  rep.group_boundary = folner_boundary(f_minus, s).size();

  const auto& ds = klein_d();
  // does t ⊠ r contain an irreducible over one of the orbits selected by `want`?
  auto meets = [&](const Irreducible& t, const Irreducible& r, bool want_inside) {
    const std::vector<CMatrix> prod = fusion_tensor(t.v, r.v);
    std::set<Rot3> ys;
    for (const auto& d : ds) ys.insert(canonical(t.base * d * r.base));
    for (const auto& y : ys) {
      if (f_orbits.contains(y) != want_inside) continue;
      if (intertwiners(cache.eval(y), 4, prod, t.dim * r.dim, tol).dimension() > 0) return true;
    }
    return false;
  };

  for (const auto& c : f_orbits) {
    for (const auto& t : cache.irreducibles(c)) {
      if (std::any_of(s_plus.begin(), s_plus.end(), [&](const Irreducible& r) { return meets(t, r, false); })) {
        ++rep.inner_boundary;
      }
    }
  }

  std::set<Rot3> outer_orbits;
  std::set<Rot3> r_bases;
  for (const auto& r : s_plus) r_bases.insert(r.base);
  for (const auto& f : f_minus) {
    for (const auto& sb : r_bases) {
      Rot3 c = canonical(f * sb.transpose());
      if (!f_orbits.contains(c)) outer_orbits.insert(std::move(c));
    }
  }
  for (const auto& c : outer_orbits) {
    for (const auto& t : cache.irreducibles(c)) {
      if (std::any_of(s_plus.begin(), s_plus.end(), [&](const Irreducible& r) { return meets(t, r, true); })) {
        ++rep.outer_boundary;
      }
    }
  }

  rep.packet_bound = rep.f_irreducibles <= 4 * rep.f_minus;
  rep.transfer_holds = rep.group_boundary <= 16 * rep.irreducible_boundary();
  return rep;
}

}  // namespace qsym
