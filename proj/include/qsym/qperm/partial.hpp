#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qsym/numerics/cmatrix.hpp"
#include "qsym/numerics/tolerance.hpp"
#include "qsym/qperm/index_set.hpp"

namespace qsym {

// Projection on l²(N) supported on finitely many basis vectors: `local` acts
// on span{e_v : v in support}, support ascending.
struct SparseProjection {
  std::vector<Id> support;
  CMatrix local;
};

enum class BfPolicy {
  coordinate,  // one coordinate projection per uncovered basis vector
  block4,      // rank-one pieces mixed by a seeded unitary inside aligned blocks of 4 vectors
};

enum class BfSide { domain, range };

// Back-and-forth state on the naturals, enumerated as x_i = i - 1. Entries
// live on the window W = {0, ..., window - 1}; rows in the domain and
// columns in the range are partitions of unity on span(W).
class PartialQuantumPermutation {
 public:
  using Key = std::pair<Id, Id>;

  [[nodiscard]] const std::set<Id>& domain() const noexcept { return domain_; }
  [[nodiscard]] const std::set<Id>& range() const noexcept { return range_; }
  [[nodiscard]] Id window() const noexcept { return window_; }
  [[nodiscard]] BfPolicy policy() const noexcept { return policy_; }
  [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }
  [[nodiscard]] std::uint64_t steps() const noexcept { return steps_; }
  [[nodiscard]] const std::map<Key, SparseProjection>& entries() const noexcept { return entries_; }
  [[nodiscard]] const SparseProjection* find(Id x, Id y) const;

  // u_xy as a dense window x window matrix (zero when undefined).
  [[nodiscard]] CMatrix dense_entry(Id x, Id y) const;

  // Copy with u_xy replaced (or added). No axioms are checked here.
  [[nodiscard]] PartialQuantumPermutation with_entry(Id x, Id y, SparseProjection p) const;

  // Columns used by row x / rows used by column y.
  [[nodiscard]] const std::set<Id>& row_keys(Id x) const;
  [[nodiscard]] const std::set<Id>& column_keys(Id y) const;

 private:
  friend PartialQuantumPermutation bf_init(BfPolicy, std::uint64_t);
  friend PartialQuantumPermutation bf_step(const PartialQuantumPermutation&, BfSide, const Tolerance&);
  friend PartialQuantumPermutation bf_run(std::size_t, BfPolicy, std::uint64_t, const Tolerance&);

  void step_in_place(BfSide side, const Tolerance& tol);
  void assign(Id x, Id y, SparseProjection p);
  void fill_line(Id point, bool as_row, const std::vector<SparseProjection>& pieces,
                 const Tolerance& tol);
  [[nodiscard]] bool line_orthogonal(Id line, bool is_column, const SparseProjection& piece,
                                     const Tolerance& tol) const;
  [[nodiscard]] std::vector<SparseProjection> complement_pieces(Id point, bool as_row, Id from,
                                                                Id to, std::uint64_t salt) const;
  void grow_window(const Tolerance& tol);

  std::set<Id> domain_;
  std::set<Id> range_;
  Id window_ = 0;
  BfPolicy policy_ = BfPolicy::coordinate;
  std::uint64_t seed_ = 0;
  std::uint64_t steps_ = 0;
  std::map<Key, SparseProjection> entries_;
  std::map<Id, std::set<Id>> rows_;     // x -> {y : u_xy defined}
  std::map<Id, std::set<Id>> columns_;  // y -> {x : u_xy defined}
  // line -> basis vector -> partners whose entry has that vector in its support
  std::map<Id, std::map<Id, std::vector<Id>>> row_cover_;
  std::map<Id, std::map<Id, std::vector<Id>>> column_cover_;
};

inline constexpr Id kBfInitialWindow = 8;
inline constexpr Id kBfWindowGrowth = 8;
// block4 pieces live inside aligned blocks of this many basis vectors.
inline constexpr Id kBfBlock = 4;

// A = {0}, B = ∅, u_{0,y} = projection onto e_y for y in the initial window.
[[nodiscard]] PartialQuantumPermutation bf_init(BfPolicy policy = BfPolicy::coordinate,
                                                std::uint64_t seed = 0);

// Adds the least missing point to the chosen side, splits the uncovered part
// of its line into pieces and assigns each to the least admissible partner.
// The window then grows and every domain row and range column is extended
// over the new basis vectors. Throws DomainError when the input violates the
// partial axioms.
[[nodiscard]] PartialQuantumPermutation bf_step(const PartialQuantumPermutation& state, BfSide side,
                                                const Tolerance& tol = {});

// bf_init followed by `steps` alternating steps, range side first.
[[nodiscard]] PartialQuantumPermutation bf_run(std::size_t steps,
                                               BfPolicy policy = BfPolicy::coordinate,
                                               std::uint64_t seed = 0, const Tolerance& tol = {});

struct PartialReport {
  bool ok = true;
  double worst_residual = 0.0;
  std::string failing_constraint;
  // Locally finite rank, as counted on the window.
  std::size_t max_row_multiplicity = 0;     // max over x in A, v in W of #{y : v in supp u_xy}
  std::size_t max_column_multiplicity = 0;  // max over y in B, v in W of #{x : v in supp u_xy}
  std::size_t max_support = 0;              // largest support of a defined entry
  bool supports_in_window = true;
};

// Partial axioms on the window plus the three locally-finite-rank counts.
[[nodiscard]] PartialReport validate_partial(const PartialQuantumPermutation& state,
                                             const Tolerance& tol = {});

[[nodiscard]] std::string to_string(BfPolicy p);
[[nodiscard]] BfPolicy parse_bf_policy(const std::string& s);

}  // namespace qsym
