#pragma once

#include <optional>
#include <vector>

#include "qsym/qperm/index_set.hpp"

namespace qsym {

// i-th prime congruent to 1 mod 4 (0 -> 5, 1 -> 13, 2 -> 17, ...).
[[nodiscard]] Id rado_vertex(Id index);
// Inverse of rado_vertex; nullopt when p is not such a prime.
[[nodiscard]] std::optional<Id> rado_index(Id p);

[[nodiscard]] bool is_prime(Id n);
// b^e mod m with 128-bit intermediates.
[[nodiscard]] Id pow_mod(Id base, Id exp, Id mod);

// p is a square mod q (Euler criterion). Symmetric by reciprocity for these
// primes. Throws CodecError on invalid vertices, DomainError when p == q.
[[nodiscard]] bool rado_adjacent(Id p, Id q);

// Least vertex w <= bound outside A ∪ B adjacent to all of A and to none of
// B. Throws DomainError when A and B meet, SearchExhausted past the bound.
[[nodiscard]] Id rado_witness(const std::vector<Id>& adjacent_to, const std::vector<Id>& not_adjacent_to,
                              Id bound = 1'000'000);

}  // namespace qsym
