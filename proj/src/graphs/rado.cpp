#include "qsym/graphs/rado.hpp"

#include <algorithm>
#include <mutex>
#include <string>

#include "qsym/error.hpp"
#include "qsym/numerics/wide.hpp"

namespace qsym {
namespace {

// Append-only list of primes ≡ 1 (mod 4), extended by re-sieving a larger range.
class RadoPrimes {
 public:
  Id at(Id index) {
    std::lock_guard lock(mutex_);
    while (primes_.size() <= index) grow();
    return primes_[index];
  }

  std::optional<Id> index_of(Id p) {
    if (p % 4 != 1 || !is_prime(p)) return std::nullopt;
    std::lock_guard lock(mutex_);
    while (limit_ < p) grow();
    const auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
    return static_cast<Id>(it - primes_.begin());
  }

 private:
  void grow() {
    const Id next = limit_ == 0 ? 1 << 16 : limit_ * 2;
    if (next > (Id{1} << 34)) throw OverflowError("rado: prime table would exceed 2^34");
    std::vector<bool> composite(next + 1, false);
    for (Id i = 2; i * i <= next; ++i) {
      if (composite[i]) continue;
      for (Id j = i * i; j <= next; j += i) composite[j] = true;
    }
    primes_.clear();
    for (Id n = 5; n <= next; n += 4) {
      if (!composite[n]) primes_.push_back(n);
    }
    limit_ = next;
  }

  std::mutex mutex_;
  std::vector<Id> primes_;
  Id limit_ = 0;
};

RadoPrimes& table() {
  static RadoPrimes t;
  return t;
}

void require_vertex(Id p) {
  if (p % 4 != 1 || !is_prime(p)) {
    throw CodecError("rado: " + std::to_string(p) + " is not a prime congruent to 1 mod 4");
  }
}

}  // namespace

Id pow_mod(Id base, Id exp, Id mod) {
  u128 result = 1 % mod;
  u128 b = base % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<Id>(result);
}

bool is_prime(Id n) {
  if (n < 2) return false;
  for (Id p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  Id d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases decide every 64-bit input.
  for (Id a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    Id x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = static_cast<Id>(static_cast<u128>(x) * x % n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Id rado_vertex(Id index) { return table().at(index); }

std::optional<Id> rado_index(Id p) { return table().index_of(p); }

bool rado_adjacent(Id p, Id q) {
  require_vertex(p);
  require_vertex(q);
  if (p == q) throw DomainError("rado_adjacent: vertices must be distinct");
  return pow_mod(p, (q - 1) / 2, q) == 1;
}

Id rado_witness(const std::vector<Id>& adjacent_to, const std::vector<Id>& not_adjacent_to,
                Id bound) {
  for (Id a : adjacent_to) require_vertex(a);
  for (Id b : not_adjacent_to) require_vertex(b);
  for (Id a : adjacent_to) {
    if (std::find(not_adjacent_to.begin(), not_adjacent_to.end(), a) != not_adjacent_to.end()) {
      throw DomainError("rado_witness: the two vertex sets must be disjoint");
    }
  }
  auto listed = [&](Id w) {
    return std::find(adjacent_to.begin(), adjacent_to.end(), w) != adjacent_to.end() ||
           std::find(not_adjacent_to.begin(), not_adjacent_to.end(), w) != not_adjacent_to.end();
  };
  for (Id i = 0;; ++i) {
    const Id w = rado_vertex(i);
    if (w > bound) break;
    if (listed(w)) continue;
    const bool fits =
        std::all_of(adjacent_to.begin(), adjacent_to.end(), [&](Id a) { return rado_adjacent(a, w); }) &&
        std::none_of(not_adjacent_to.begin(), not_adjacent_to.end(),
                     [&](Id b) { return rado_adjacent(b, w); });
    if (fits) return w;
  }
  throw SearchExhausted("rado_witness: no witness found", bound);
}

}  // namespace qsym
