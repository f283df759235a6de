#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qsym/qperm/index_set.hpp"

namespace qsym {

// Finitely supported bijection of the ids. Only moved points are stored.
class Permutation {
 public:
  Permutation() = default;

  // Throws DomainError unless the map is a bijection of its key set.
  // Fixed points in the map are dropped.
  static Permutation from_map(const std::map<Id, Id>& images);
  // One-line form on {0..n-1}: images[i] is the image of i.
  static Permutation from_images(const std::vector<Id>& images);
  static Permutation cycle(const std::vector<Id>& points);
  // Cycle notation such as "(0 1 2)(3 4)"; "", "()" and "id" give the
  // identity. Products of overlapping cycles act right to left.
  static Permutation parse(std::string_view text);

  [[nodiscard]] Id operator()(Id x) const;
  [[nodiscard]] Id preimage(Id x) const;
  [[nodiscard]] std::vector<Id> moved_points() const;  // ascending
  [[nodiscard]] bool is_identity() const noexcept { return images_.empty(); }
  [[nodiscard]] Permutation inverse() const;
  // Multiplicative order (1 for the identity).
  [[nodiscard]] std::uint64_t order() const;
  // Disjoint cycles, each starting at its least point, sorted by that point.
  [[nodiscard]] std::vector<std::vector<Id>> cycles() const;
  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] const std::map<Id, Id>& images() const noexcept { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::map<Id, Id> images_;
};

// (a ∘ b)(x) = a(b(x))
[[nodiscard]] Permutation compose(const Permutation& a, const Permutation& b);

}  // namespace qsym
