#pragma once

#include <array>
#include <optional>
#include <string>

#include "qsym/qaut/candidate.hpp"

namespace qsym {

enum class RadoVerdict { all_commute, relation_violated, inconclusive, precondition_failed };

[[nodiscard]] std::string to_string(RadoVerdict v);

struct RadoCertificate {
  RadoVerdict verdict = RadoVerdict::all_commute;
  double max_commutator = 0.0;
  std::string detail;
  // Set when a witness was found: its vertex id and prime label.
  std::optional<Id> witness;
  std::optional<Id> witness_prime;
  // The violated vanishing relation u_{v w} u_{x y} = 0 and its residual.
  std::optional<std::array<Id, 4>> relation;  // v, w, x, y
  double relation_residual = 0.0;
  Id witness_bound = 0;
};

// Runs the witness procedure on a candidate over the Rado graph: for a
// non-commuting pair u_{x+ y+}, u_{x- y-} pick w adjacent to y+ and y- and
// to no other column in those two rows, then look for a product
// u_{v w} u_{x± y} with rel(v, x±) != rel(w, y) that does not vanish.
// The candidate only needs to pass the window check on its support.
[[nodiscard]] RadoCertificate rado_certify(const QAutCandidate& c, const Tolerance& tol = {},
                                           Id witness_bound = 1'000'000);

}  // namespace qsym
