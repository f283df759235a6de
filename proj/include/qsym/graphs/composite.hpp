#pragma once

#include <utility>
#include <vector>

#include "qsym/graphs/graph.hpp"

namespace qsym {

// Bijection between pairs (a, b) and ids. A finite second coordinate of size
// m gives a*m + b, a finite first coordinate of size n gives b*n + a, two
// infinite coordinates use the Cantor pairing. Throws OverflowError when an
// id leaves 64 bits.
class PairCodec {
 public:
  PairCodec(std::optional<Id> first_size, std::optional<Id> second_size);

  [[nodiscard]] Id encode(Id a, Id b) const;
  [[nodiscard]] std::pair<Id, Id> decode(Id id) const;
  [[nodiscard]] std::optional<Id> size() const;

 private:
  std::optional<Id> first_;
  std::optional<Id> second_;
};

[[nodiscard]] Id cantor_pair(Id a, Id b);
[[nodiscard]] std::pair<Id, Id> cantor_unpair(Id z);

class DisjointUnionGraph final : public GraphFamily {
 public:
  DisjointUnionGraph(GraphPtr component, std::optional<Id> copies);

  [[nodiscard]] std::string name() const override;
  [[nodiscard]] std::optional<Id> order() const override;
  [[nodiscard]] std::vector<Permutation> automorphism_samples() const override;
  [[nodiscard]] bool is_connected() const override;
  [[nodiscard]] bool is_bipartite() const override;

  [[nodiscard]] const GraphPtr& component() const noexcept { return component_; }
  [[nodiscard]] std::optional<Id> copies() const noexcept { return copies_; }
  // (copy, vertex) <-> id
  [[nodiscard]] Id vertex(Id copy, Id v) const;
  [[nodiscard]] std::pair<Id, Id> coordinates(Id id) const;

 protected:
  [[nodiscard]] bool adjacent_impl(Id v, Id w) const override;
  [[nodiscard]] Distance distance_impl(Id v, Id w) const override;
  [[nodiscard]] std::optional<std::vector<Id>> neighbours_impl(Id v) const override;
  [[nodiscard]] std::optional<std::vector<Id>> distinguishing_impl(Id v, Id w) const override;
  [[nodiscard]] bool contains_impl(Id v) const override;
  [[nodiscard]] json decode_impl(Id v) const override;
  [[nodiscard]] Id encode_impl(const json& label) const override;

 private:
  GraphPtr component_;
  std::optional<Id> copies_;
  PairCodec codec_;
};

class ProductGraph final : public GraphFamily {
 public:
  ProductGraph(ProductKind kind, GraphPtr x, GraphPtr y);

  [[nodiscard]] std::string name() const override;
  [[nodiscard]] std::optional<Id> order() const override;
  [[nodiscard]] std::vector<Permutation> automorphism_samples() const override;
  [[nodiscard]] bool is_connected() const override;
  [[nodiscard]] bool is_bipartite() const override;

  [[nodiscard]] ProductKind kind() const noexcept { return kind_; }
  [[nodiscard]] const GraphPtr& left() const noexcept { return x_; }
  [[nodiscard]] const GraphPtr& right() const noexcept { return y_; }
  [[nodiscard]] Id vertex(Id a, Id b) const;
  [[nodiscard]] std::pair<Id, Id> coordinates(Id id) const;

 protected:
  [[nodiscard]] bool adjacent_impl(Id v, Id w) const override;
  [[nodiscard]] Distance distance_impl(Id v, Id w) const override;
  [[nodiscard]] std::optional<std::vector<Id>> neighbours_impl(Id v) const override;
  [[nodiscard]] bool contains_impl(Id v) const override;
  [[nodiscard]] json decode_impl(Id v) const override;
  [[nodiscard]] Id encode_impl(const json& label) const override;

 private:
  ProductKind kind_;
  GraphPtr x_;
  GraphPtr y_;
  PairCodec codec_;
};

class WeakPowerGraph final : public GraphFamily {
 public:
  // `display_name` overrides the canonical "weak(...)" name (used by hamming:n).
  explicit WeakPowerGraph(GraphPtr factor, std::string display_name = {});

  [[nodiscard]] std::string name() const override;
  [[nodiscard]] std::optional<Id> order() const override { return std::nullopt; }
  [[nodiscard]] bool is_connected() const override;
  [[nodiscard]] bool is_bipartite() const override;

  [[nodiscard]] const GraphPtr& factor() const noexcept { return factor_; }
  // Factor ids per coordinate, trailing base points (id 0) trimmed.
  [[nodiscard]] std::vector<Id> tuple(Id id) const;
  [[nodiscard]] Id vertex(std::vector<Id> tuple) const;

 protected:
  [[nodiscard]] bool adjacent_impl(Id v, Id w) const override;
  [[nodiscard]] Distance distance_impl(Id v, Id w) const override;
  [[nodiscard]] std::optional<std::vector<Id>> neighbours_impl(Id v) const override;
  [[nodiscard]] std::optional<std::vector<Id>> distinguishing_impl(Id v, Id w) const override;
  [[nodiscard]] bool contains_impl(Id v) const override;
  [[nodiscard]] json decode_impl(Id v) const override;
  [[nodiscard]] Id encode_impl(const json& label) const override;

 private:
  GraphPtr factor_;
  std::string display_name_;
};

}  // namespace qsym
