#include "qsym/graphs/composite.hpp"

#include <algorithm>
#include <cmath>

#include "qsym/error.hpp"
#include "qsym/numerics/wide.hpp"

namespace qsym {
namespace {

Id checked(u128 v) {
  if (v > ~Id{0}) throw OverflowError("vertex id exceeds 64 bits");
  return static_cast<Id>(v);
}

Distance add_distance(Distance a, Distance b) {
  if (a == kInfiniteDistance || b == kInfiniteDistance) return kInfiniteDistance;
  return a + b;
}

json pair_label(const json& a, const json& b) { return json::array({a, b}); }

void require_pair_label(const json& label, const std::string& who) {
  if (!label.is_array() || label.size() != 2) {
    throw CodecError(who + ": vertex label must be a pair [a, b]");
  }
}

}  // namespace

Id cantor_pair(Id a, Id b) {
  const u128 s = static_cast<u128>(a) + b;
  if (s > (u128{1} << 33)) throw OverflowError("vertex id exceeds 64 bits");
  return checked(s * (s + 1) / 2 + b);
}

std::pair<Id, Id> cantor_unpair(Id z) {
  // w = floor((sqrt(8z + 1) - 1) / 2), corrected for rounding.
  auto tri = [](u128 w) { return w * (w + 1) / 2; };
  u128 w = static_cast<u128>((std::sqrt(8.0L * static_cast<long double>(z) + 1.0L) - 1.0L) / 2.0L);
  while (tri(w) > z) --w;
  while (tri(w + 1) <= z) ++w;
  const Id b = static_cast<Id>(z - tri(w));
  const Id a = static_cast<Id>(w - b);
  return {a, b};
}

PairCodec::PairCodec(std::optional<Id> first_size, std::optional<Id> second_size)
    : first_(first_size), second_(second_size) {}

Id PairCodec::encode(Id a, Id b) const {
  if (second_) return checked(static_cast<u128>(a) * *second_ + b);
  if (first_) return checked(static_cast<u128>(b) * *first_ + a);
  return cantor_pair(a, b);
}

std::pair<Id, Id> PairCodec::decode(Id id) const {
  if (second_) return {id / *second_, id % *second_};
  if (first_) return {id % *first_, id / *first_};
  return cantor_unpair(id);
}

std::optional<Id> PairCodec::size() const {
  if (!first_ || !second_) return std::nullopt;
  return checked(static_cast<u128>(*first_) * *second_);
}

// ---- disjoint union -------------------------------------------------------------

DisjointUnionGraph::DisjointUnionGraph(GraphPtr component, std::optional<Id> copies)
    : component_(std::move(component)), copies_(copies), codec_(copies, component_->order()) {
  if (copies_ && *copies_ == 0) throw DomainError("union needs at least one copy");
}

std::string DisjointUnionGraph::name() const {
  return "union(" + component_->name() + ", " + (copies_ ? std::to_string(*copies_) : "inf") + ")";
}

std::optional<Id> DisjointUnionGraph::order() const { return codec_.size(); }

Id DisjointUnionGraph::vertex(Id copy, Id v) const {
  if ((copies_ && copy >= *copies_) || !component_->contains(v)) {
    throw CodecError(name() + ": no vertex " + std::to_string(v) + " in copy " + std::to_string(copy));
  }
  return codec_.encode(copy, v);
}

std::pair<Id, Id> DisjointUnionGraph::coordinates(Id id) const {
  require(id);
  return codec_.decode(id);
}

bool DisjointUnionGraph::contains_impl(Id v) const {
  const auto [copy, inner] = codec_.decode(v);
  return (!copies_ || copy < *copies_) && component_->contains(inner);
}

bool DisjointUnionGraph::adjacent_impl(Id v, Id w) const {
  const auto [cv, iv] = codec_.decode(v);
  const auto [cw, iw] = codec_.decode(w);
  return cv == cw && component_->adjacent(iv, iw);
}

Distance DisjointUnionGraph::distance_impl(Id v, Id w) const {
  const auto [cv, iv] = codec_.decode(v);
  const auto [cw, iw] = codec_.decode(w);
  return cv == cw ? component_->distance(iv, iw) : kInfiniteDistance;
}

std::optional<std::vector<Id>> DisjointUnionGraph::neighbours_impl(Id v) const {
  const auto [copy, inner] = codec_.decode(v);
  auto nb = component_->neighbours(inner);
  if (!nb) return std::nullopt;
  std::vector<Id> out;
  for (Id z : *nb) out.push_back(codec_.encode(copy, z));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<Id>> DisjointUnionGraph::distinguishing_impl(Id v, Id w) const {
  const auto [cv, iv] = codec_.decode(v);
  const auto [cw, iw] = codec_.decode(w);
  std::vector<Id> out;
  if (cv == cw) {
    auto inner = component_->distinguishing(iv, iw);
    if (!inner) return std::nullopt;
    for (Id z : *inner) out.push_back(codec_.encode(cv, z));
  } else {
    // Every neighbour of either vertex tells them apart.
    auto nv = component_->neighbours(iv);
    auto nw = component_->neighbours(iw);
    if (!nv || !nw) return std::nullopt;
    for (Id z : *nv) out.push_back(codec_.encode(cv, z));
    for (Id z : *nw) out.push_back(codec_.encode(cw, z));
  }
  std::sort(out.begin(), out.end());
  return out;
}

json DisjointUnionGraph::decode_impl(Id v) const {
  const auto [copy, inner] = codec_.decode(v);
  return pair_label(copy, component_->decode(inner));
}

Id DisjointUnionGraph::encode_impl(const json& label) const {
  require_pair_label(label, name());
  if (!label[0].is_number_integer() || label[0].get<long long>() < 0) {
    throw CodecError(name() + ": copy index must be a natural");
  }
  return vertex(label[0].get<Id>(), component_->encode(label[1]));
}

std::vector<Permutation> DisjointUnionGraph::automorphism_samples() const {
  std::vector<Permutation> out;
  for (const auto& s : component_->automorphism_samples()) {
    std::map<Id, Id> img;
    for (const auto& [x, y] : s.images()) img[codec_.encode(0, x)] = codec_.encode(0, y);
    out.push_back(Permutation::from_map(img));
  }
  const auto n = component_->order();
  if (n && (!copies_ || *copies_ >= 2)) {
    std::map<Id, Id> swap;
    for (Id v = 0; v < *n; ++v) {
      swap[codec_.encode(0, v)] = codec_.encode(1, v);
      swap[codec_.encode(1, v)] = codec_.encode(0, v);
    }
    out.push_back(Permutation::from_map(swap));
  }
  return out;
}

bool DisjointUnionGraph::is_connected() const {
  return copies_ && *copies_ == 1 && component_->is_connected();
}

bool DisjointUnionGraph::is_bipartite() const { return component_->is_bipartite(); }

// ---- products -------------------------------------------------------------------

ProductGraph::ProductGraph(ProductKind kind, GraphPtr x, GraphPtr y)
    : kind_(kind), x_(std::move(x)), y_(std::move(y)), codec_(x_->order(), y_->order()) {}

std::string ProductGraph::name() const {
  return "product:" + to_string(kind_) + "(" + x_->name() + ", " + y_->name() + ")";
}

std::optional<Id> ProductGraph::order() const { return codec_.size(); }

Id ProductGraph::vertex(Id a, Id b) const {
  if (!x_->contains(a) || !y_->contains(b)) throw CodecError(name() + ": no such vertex pair");
  return codec_.encode(a, b);
}

std::pair<Id, Id> ProductGraph::coordinates(Id id) const {
  require(id);
  return codec_.decode(id);
}

bool ProductGraph::contains_impl(Id v) const {
  const auto [a, b] = codec_.decode(v);
  return x_->contains(a) && y_->contains(b);
}

bool ProductGraph::adjacent_impl(Id v, Id w) const {
  const auto [a1, b1] = codec_.decode(v);
  const auto [a2, b2] = codec_.decode(w);
  switch (kind_) {
    case ProductKind::direct:
      return x_->adjacent(a1, a2) && y_->adjacent(b1, b2);
    case ProductKind::cartesian:
      return (a1 == a2 && y_->adjacent(b1, b2)) || (b1 == b2 && x_->adjacent(a1, a2));
    case ProductKind::strong:
      return (a1 == a2 || x_->adjacent(a1, a2)) && (b1 == b2 || y_->adjacent(b1, b2));
  }
  return false;
}

Distance ProductGraph::distance_impl(Id v, Id w) const {
  const auto [a1, b1] = codec_.decode(v);
  const auto [a2, b2] = codec_.decode(w);
  switch (kind_) {
    case ProductKind::cartesian:
      return add_distance(x_->distance(a1, a2), y_->distance(b1, b2));
    case ProductKind::strong:
      return std::max(x_->distance(a1, a2), y_->distance(b1, b2));
    case ProductKind::direct:
      break;
  }
  return GraphFamily::distance_impl(v, w);
}

std::optional<std::vector<Id>> ProductGraph::neighbours_impl(Id v) const {
  if (is_finite()) return GraphFamily::neighbours_impl(v);
  const auto [a, b] = codec_.decode(v);
  auto na = x_->neighbours(a);
  auto nb = y_->neighbours(b);
  if (!na || !nb) return std::nullopt;
  std::vector<Id> xs = *na;
  std::vector<Id> ys = *nb;
  std::vector<Id> out;
  if (kind_ != ProductKind::cartesian) {
    for (Id p : xs) {
      for (Id q : ys) out.push_back(codec_.encode(p, q));
    }
  }
  if (kind_ != ProductKind::direct) {
    for (Id p : xs) out.push_back(codec_.encode(p, b));
    for (Id q : ys) out.push_back(codec_.encode(a, q));
  }
  std::sort(out.begin(), out.end());
  return out;
}

json ProductGraph::decode_impl(Id v) const {
  const auto [a, b] = codec_.decode(v);
  return pair_label(x_->decode(a), y_->decode(b));
}

Id ProductGraph::encode_impl(const json& label) const {
  require_pair_label(label, name());
  return vertex(x_->encode(label[0]), y_->encode(label[1]));
}

std::vector<Permutation> ProductGraph::automorphism_samples() const {
  // s x id is finitely supported only when the other factor is finite.
  std::vector<Permutation> out;
  if (const auto m = y_->order()) {
    for (const auto& s : x_->automorphism_samples()) {
      std::map<Id, Id> img;
      for (const auto& [p, q] : s.images()) {
        for (Id b = 0; b < *m; ++b) img[codec_.encode(p, b)] = codec_.encode(q, b);
      }
      out.push_back(Permutation::from_map(img));
    }
  }
  if (const auto n = x_->order()) {
    for (const auto& s : y_->automorphism_samples()) {
      std::map<Id, Id> img;
      for (const auto& [p, q] : s.images()) {
        for (Id a = 0; a < *n; ++a) img[codec_.encode(a, p)] = codec_.encode(a, q);
      }
      out.push_back(Permutation::from_map(img));
    }
  }
  return out;
}

bool ProductGraph::is_connected() const {
  if (is_finite()) return GraphFamily::is_connected();
  const bool both = x_->is_connected() && y_->is_connected();
  if (kind_ == ProductKind::direct) return both && !(x_->is_bipartite() && y_->is_bipartite());
  return both;
}

bool ProductGraph::is_bipartite() const {
  if (is_finite()) return GraphFamily::is_bipartite();
  switch (kind_) {
    case ProductKind::cartesian: return x_->is_bipartite() && y_->is_bipartite();
    case ProductKind::direct: return x_->is_bipartite() || y_->is_bipartite();
    case ProductKind::strong: return false;
  }
  return false;
}

// ---- weak cartesian power ---------------------------------------------------------

WeakPowerGraph::WeakPowerGraph(GraphPtr factor, std::string display_name)
    : factor_(std::move(factor)), display_name_(std::move(display_name)) {}

std::string WeakPowerGraph::name() const {
  return display_name_.empty() ? "weak(" + factor_->name() + ")" : display_name_;
}

std::vector<Id> WeakPowerGraph::tuple(Id id) const {
  std::vector<Id> out;
  if (const auto n = factor_->order()) {
    if (*n == 1) return out;
    while (id > 0) {
      out.push_back(id % *n);
      id /= *n;
    }
  } else {
    while (id > 0) {
      const auto [head, rest] = cantor_unpair(id);
      out.push_back(head);
      id = rest;
    }
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

Id WeakPowerGraph::vertex(std::vector<Id> t) const {
  while (!t.empty() && t.back() == 0) t.pop_back();
  for (Id c : t) {
    if (!factor_->contains(c)) throw CodecError(name() + ": coordinate is not a factor vertex");
  }
  Id id = 0;
  if (const auto n = factor_->order()) {
    for (auto it = t.rbegin(); it != t.rend(); ++it) id = checked(static_cast<u128>(id) * *n + *it);
  } else {
    for (auto it = t.rbegin(); it != t.rend(); ++it) id = cantor_pair(*it, id);
  }
  return id;
}

bool WeakPowerGraph::contains_impl(Id v) const {
  const auto n = factor_->order();
  if (n && *n == 1) return v == 0;
  return true;
}

bool WeakPowerGraph::adjacent_impl(Id v, Id w) const {
  auto a = tuple(v);
  auto b = tuple(w);
  const std::size_t len = std::max(a.size(), b.size());
  a.resize(len, 0);
  b.resize(len, 0);
  std::size_t differ = 0;
  std::size_t where = 0;
  for (std::size_t k = 0; k < len; ++k) {
    if (a[k] != b[k]) {
      ++differ;
      where = k;
    }
  }
  return differ == 1 && factor_->adjacent(a[where], b[where]);
}

Distance WeakPowerGraph::distance_impl(Id v, Id w) const {
  auto a = tuple(v);
  auto b = tuple(w);
  const std::size_t len = std::max(a.size(), b.size());
  a.resize(len, 0);
  b.resize(len, 0);
  Distance total = 0;
  for (std::size_t k = 0; k < len; ++k) total = add_distance(total, factor_->distance(a[k], b[k]));
  return total;
}

std::optional<std::vector<Id>> WeakPowerGraph::neighbours_impl(Id) const {
  // Any coordinate past the support can leave the base point.
  return std::nullopt;
}

std::optional<std::vector<Id>> WeakPowerGraph::distinguishing_impl(Id, Id) const {
  return std::nullopt;
}

json WeakPowerGraph::decode_impl(Id v) const {
  json out = json::array();
  for (Id c : tuple(v)) out.push_back(factor_->decode(c));
  return out;
}

Id WeakPowerGraph::encode_impl(const json& label) const {
  if (!label.is_array()) throw CodecError(name() + ": vertex label must be a tuple");
  std::vector<Id> t;
  for (const auto& e : label) t.push_back(factor_->encode(e));
  return vertex(std::move(t));
}

bool WeakPowerGraph::is_connected() const { return factor_->is_connected(); }
bool WeakPowerGraph::is_bipartite() const { return factor_->is_bipartite(); }

}  // namespace qsym
