#pragma once

#include <cstddef>
#include <unordered_set>
#include <vector>

#include "qsym/pauli/model.hpp"
#include "qsym/pauli/rot3.hpp"

namespace qsym {

using Rot3Set = std::unordered_set<Rot3, Rot3Hash>;

struct FreeGenerators {
  Rot3 a;  // angle arccos(3/5) about z
  Rot3 b;  // angle arccos(3/5) about x
};

[[nodiscard]] const FreeGenerators& free_generators();

struct Ball {
  std::vector<Rot3> elements;  // distinct, in order of first appearance by word length
  std::size_t words = 0;       // reduced words enumerated (2·3^r − 1)
  std::vector<std::size_t> sphere_sizes;  // distinct new elements per length
};

// Reduced words of length <= radius in a, b and their inverses, evaluated
// exactly and deduplicated. Throws DomainError for radius > 10.
[[nodiscard]] Ball ball(std::size_t radius);

// {t ∈ F : ts ∉ F for some s ∈ S} ∪ {t ∉ F : ts ∈ F for some s ∈ S}.
// Throws DomainError for empty S.
[[nodiscard]] Rot3Set folner_boundary(const Rot3Set& f, const std::vector<Rot3>& s);

// Union of the packets over S, one entry per orbit (deduplicated by
// canonical representative).
struct PacketEntry {
  Rot3 canonical;
  std::vector<Irreducible> irreducibles;
};
[[nodiscard]] std::vector<PacketEntry> packet_lift(const std::vector<Rot3>& s, const Tolerance& tol = {});

// Canonical orbit representatives of the packets met by T, sorted.
[[nodiscard]] std::vector<Rot3> packet_drop(const std::vector<Irreducible>& t);
// The full preimage: every element of those orbits.
[[nodiscard]] Rot3Set packet_drop_elements(const std::vector<Irreducible>& t);

// Both sides of |∂_S(F⁻)| <= 16 |∂_{S⁺}(F)| for F the union of the packets
// over `f_points`. Fusion supports are resolved per orbit: an irreducible η
// over y meets t ⊠ r iff π_y and t ⊠ r share an irreducible, which is
// tested by a nonzero intertwiner space.
struct TransferReport {
  std::size_t f_irreducibles = 0;    // |F|
  std::size_t f_minus = 0;           // |F⁻| (group elements)
  std::size_t f_minus_orbits = 0;
  std::size_t s_plus = 0;            // |S⁺|
  std::size_t group_boundary = 0;    // |∂_S(F⁻)|
  std::size_t inner_boundary = 0;    // irreducibles of F in ∂_{S⁺}(F)
  std::size_t outer_boundary = 0;    // irreducibles outside F in ∂_{S⁺}(F)
  [[nodiscard]] std::size_t irreducible_boundary() const { return inner_boundary + outer_boundary; }
  bool packet_bound = false;         // |F| <= 4 |F⁻|
  bool transfer_holds = false;       // |∂_S(F⁻)| <= 16 |∂_{S⁺}(F)|
};

[[nodiscard]] TransferReport transfer_check(const std::vector<Rot3>& f_points, const std::vector<Rot3>& s,
                                            const Tolerance& tol = {});

}  // namespace qsym
