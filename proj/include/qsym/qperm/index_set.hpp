#pragma once

#include <cstdint>
#include <string>

namespace qsym {

// Points are non-negative integer ids. Labelled sets (graph vertices) carry
// the name of the codec that turns ids into labels.
using Id = std::uint64_t;

class IndexSet {
 public:
  enum class Kind { finite, naturals };

  static IndexSet finite(Id n, std::string labels = {}) { return {Kind::finite, n, std::move(labels)}; }
  static IndexSet naturals(std::string labels = {}) { return {Kind::naturals, 0, std::move(labels)}; }

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] bool is_finite() const noexcept { return kind_ == Kind::finite; }
  // Size of a finite set; 0 for the naturals.
  [[nodiscard]] Id size() const noexcept { return n_; }
  [[nodiscard]] const std::string& labels() const noexcept { return labels_; }
  [[nodiscard]] bool contains(Id x) const noexcept { return kind_ == Kind::naturals || x < n_; }

  [[nodiscard]] std::string describe() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  IndexSet(Kind kind, Id n, std::string labels) : kind_(kind), n_(n), labels_(std::move(labels)) {}

  Kind kind_;
  Id n_;
  std::string labels_;
};

}  // namespace qsym
