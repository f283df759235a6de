#include "qsym/graphs/graph.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "qsym/error.hpp"

namespace qsym {

std::string to_string(Rel r) {
  switch (r) {
    case Rel::equal: return "equal";
    case Rel::adjacent: return "adjacent";
    case Rel::distinct_nonadjacent: return "distinct_nonadjacent";
  }
  return "?";
}

std::string to_string(ProductKind k) {
  switch (k) {
    case ProductKind::direct: return "direct";
    case ProductKind::cartesian: return "cartesian";
    case ProductKind::strong: return "strong";
  }
  return "?";
}

ProductKind parse_product_kind(const std::string& s) {
  if (s == "direct" || s == "tensor" || s == "kronecker") return ProductKind::direct;
  if (s == "cartesian") return ProductKind::cartesian;
  if (s == "strong") return ProductKind::strong;
  throw ParseError("unknown product kind \"" + s + "\"");
}

IndexSet GraphFamily::index_set() const {
  const auto n = order();
  return n ? IndexSet::finite(*n, name()) : IndexSet::naturals(name());
}

bool GraphFamily::contains(Id v) const { return contains_impl(v); }

void GraphFamily::require(Id v) const {
  if (!contains_impl(v)) {
    throw CodecError("id " + std::to_string(v) + " is not a vertex of " + name());
  }
}

bool GraphFamily::adjacent(Id v, Id w) const {
  require(v);
  require(w);
  return v != w && adjacent_impl(v, w);
}

Distance GraphFamily::distance(Id v, Id w) const {
  require(v);
  require(w);
  return v == w ? 0 : distance_impl(v, w);
}

Rel GraphFamily::rel(Id v, Id w) const {
  if (v == w) {
    require(v);
    return Rel::equal;
  }
  return adjacent(v, w) ? Rel::adjacent : Rel::distinct_nonadjacent;
}

std::optional<std::vector<Id>> GraphFamily::neighbours(Id v) const {
  require(v);
  return neighbours_impl(v);
}

std::optional<std::vector<Id>> GraphFamily::distinguishing(Id v, Id w) const {
  require(v);
  require(w);
  if (v == w) return std::vector<Id>{};
  return distinguishing_impl(v, w);
}

json GraphFamily::decode(Id v) const {
  require(v);
  return decode_impl(v);
}

Id GraphFamily::encode(const json& label) const {
  const Id v = encode_impl(label);
  require(v);
  return v;
}

bool GraphFamily::contains_impl(Id v) const {
  const auto n = order();
  return !n || v < *n;
}

json GraphFamily::decode_impl(Id v) const { return v; }

Id GraphFamily::encode_impl(const json& label) const {
  if (!label.is_number_unsigned() && !(label.is_number_integer() && label.get<long long>() >= 0)) {
    throw CodecError(name() + ": vertex label must be a non-negative integer");
  }
  return label.get<Id>();
}

std::optional<std::vector<Id>> GraphFamily::neighbours_impl(Id v) const {
  const auto n = order();
  if (!n) return std::nullopt;
  std::vector<Id> out;
  for (Id w = 0; w < *n; ++w) {
    if (w != v && adjacent_impl(v, w)) out.push_back(w);
  }
  return out;
}

std::optional<std::vector<Id>> GraphFamily::distinguishing_impl(Id v, Id w) const {
  if (const auto n = order()) {
    std::vector<Id> out;
    for (Id z = 0; z < *n; ++z) {
      if (z == v || z == w) continue;
      if (adjacent_impl(v, z) != adjacent_impl(w, z)) out.push_back(z);
    }
    return out;
  }
  auto nv = neighbours_impl(v);
  auto nw = neighbours_impl(w);
  if (!nv || !nw) return std::nullopt;
  std::vector<Id> out;
  std::set_symmetric_difference(nv->begin(), nv->end(), nw->begin(), nw->end(),
                                std::back_inserter(out));
  std::erase_if(out, [&](Id z) { return z == v || z == w; });
  return out;
}

Distance GraphFamily::distance_impl(Id v, Id w) const {
  const auto n = order();
  return bfs_distance(v, w, n ? *n : Distance{4096});
}

Distance GraphFamily::bfs_distance(Id v, Id w, Distance max_depth) const {
  std::unordered_map<Id, Distance> seen{{v, 0}};
  std::deque<Id> queue{v};
  while (!queue.empty()) {
    const Id cur = queue.front();
    queue.pop_front();
    const Distance d = seen[cur];
    if (d >= max_depth) {
      if (is_finite()) continue;
      throw SearchExhausted(name() + ": distance search", max_depth);
    }
    const auto nb = neighbours_impl(cur);
    if (!nb) throw DomainError(name() + ": distance needs finite neighbourhoods");
    for (Id z : *nb) {
      if (seen.emplace(z, d + 1).second) {
        if (z == w) return d + 1;
        queue.push_back(z);
      }
    }
  }
  return kInfiniteDistance;
}

bool GraphFamily::is_connected() const {
  const auto n = order();
  if (!n) throw DomainError(name() + ": connectivity is not known for this family");
  if (*n == 0) return false;
  for (Id w = 1; w < *n; ++w) {
    if (distance_impl(0, w) == kInfiniteDistance) return false;
  }
  return true;
}

bool GraphFamily::is_bipartite() const {
  const auto n = order();
  if (!n) throw DomainError(name() + ": bipartiteness is not known for this family");
  std::vector<int> colour(*n, -1);
  for (Id s = 0; s < *n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::deque<Id> queue{s};
    while (!queue.empty()) {
      const Id cur = queue.front();
      queue.pop_front();
      for (Id z : *neighbours_impl(cur)) {
        if (colour[z] < 0) {
          colour[z] = 1 - colour[cur];
          queue.push_back(z);
        } else if (colour[z] == colour[cur]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace qsym
