#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qsym/numerics/json.hpp"
#include "qsym/qperm/index_set.hpp"
#include "qsym/qperm/permutation.hpp"

namespace qsym {

enum class Rel { equal, adjacent, distinct_nonadjacent };

[[nodiscard]] std::string to_string(Rel r);

// Graph distance; kInfiniteDistance across components.
using Distance = std::uint64_t;
inline constexpr Distance kInfiniteDistance = std::numeric_limits<Distance>::max();

// Simple undirected graph on vertex ids 0, 1, 2, ... (all of N when
// infinite). Labels are JSON values: integers, sorted arrays for sets,
// arrays for tuples and pairs. Public queries validate ids and throw
// CodecError for ids that are not vertices.
class GraphFamily {
 public:
  virtual ~GraphFamily() = default;

  // Canonical spec string; make_graph(name()) rebuilds the graph.
  [[nodiscard]] virtual std::string name() const = 0;
  // Number of vertices, nullopt when infinite.
  [[nodiscard]] virtual std::optional<Id> order() const = 0;
  [[nodiscard]] bool is_finite() const { return order().has_value(); }
  [[nodiscard]] IndexSet index_set() const;
  [[nodiscard]] bool contains(Id v) const;

  [[nodiscard]] bool adjacent(Id v, Id w) const;
  [[nodiscard]] Distance distance(Id v, Id w) const;
  [[nodiscard]] Rel rel(Id v, Id w) const;

  // Sorted neighbour list, nullopt when the degree is infinite.
  [[nodiscard]] std::optional<std::vector<Id>> neighbours(Id v) const;

  // Vertices z outside {v, w} with rel(v, z) != rel(w, z), sorted; nullopt
  // when there are infinitely many.
  [[nodiscard]] std::optional<std::vector<Id>> distinguishing(Id v, Id w) const;

  [[nodiscard]] json decode(Id v) const;
  // Throws CodecError for labels that name no vertex.
  [[nodiscard]] Id encode(const json& label) const;

  // Finitely supported automorphisms, possibly empty.
  [[nodiscard]] virtual std::vector<Permutation> automorphism_samples() const { return {}; }

  [[nodiscard]] virtual bool is_connected() const;
  [[nodiscard]] virtual bool is_bipartite() const;

 protected:
  [[nodiscard]] virtual bool adjacent_impl(Id v, Id w) const = 0;
  // Default: BFS on finite graphs. Infinite families override.
  [[nodiscard]] virtual Distance distance_impl(Id v, Id w) const;
  // Default: scan on finite graphs, nullopt otherwise.
  [[nodiscard]] virtual std::optional<std::vector<Id>> neighbours_impl(Id v) const;
  // Default: scan on finite graphs, symmetric difference of neighbourhoods
  // when both are finite, nullopt otherwise.
  [[nodiscard]] virtual std::optional<std::vector<Id>> distinguishing_impl(Id v, Id w) const;
  [[nodiscard]] virtual bool contains_impl(Id v) const;
  [[nodiscard]] virtual json decode_impl(Id v) const;
  [[nodiscard]] virtual Id encode_impl(const json& label) const;

  void require(Id v) const;
  // Breadth-first distance through neighbours_impl, giving up past max_depth.
  [[nodiscard]] Distance bfs_distance(Id v, Id w, Distance max_depth) const;
};

using GraphPtr = std::shared_ptr<const GraphFamily>;

enum class ProductKind { direct, cartesian, strong };

[[nodiscard]] std::string to_string(ProductKind k);
[[nodiscard]] ProductKind parse_product_kind(const std::string& s);

// ---- families ----------------------------------------------------------------

[[nodiscard]] GraphPtr complete_graph(Id n);
[[nodiscard]] GraphPtr cycle_graph(Id n);  // n >= 3
[[nodiscard]] GraphPtr path_graph(Id n);   // n >= 1
// Integers with i ~ i±1. Ids interleave signs: 0, 1, -1, 2, -2, ...
[[nodiscard]] GraphPtr line_graph();
// k-subsets of N, adjacent when they share k - 1 elements (Johnson) or
// are disjoint (Kneser). Ids follow the combinatorial number system.
[[nodiscard]] GraphPtr johnson_graph(unsigned k);
[[nodiscard]] GraphPtr kneser_graph(unsigned k);
// Finitely supported tuples over {0..n-1}, adjacent at Hamming distance 1.
[[nodiscard]] GraphPtr hamming_graph(Id n);
// Primes congruent to 1 mod 4, adjacent by quadratic residuosity.
[[nodiscard]] GraphPtr rado_graph();

// copies = nullopt means countably many copies.
[[nodiscard]] GraphPtr disjoint_union(GraphPtr component, std::optional<Id> copies);
[[nodiscard]] GraphPtr complement(GraphPtr g);
[[nodiscard]] GraphPtr product(ProductKind kind, GraphPtr x, GraphPtr y);
// Weak cartesian power: tuples indexed by N that differ from the all-zero
// base point in finitely many coordinates.
[[nodiscard]] GraphPtr weak_power(GraphPtr factor);

// Grammar:
//   complete:n | cycle:n | path:n | line | johnson:k | kneser:k | hamming:n
//   | rado | union(spec, copies|inf) | complement(spec)
//   | product:direct|cartesian|strong(spec, spec) | weak(spec)
// Throws ParseError.
[[nodiscard]] GraphPtr make_graph(const std::string& spec);

// Label given as JSON text ("3", "[1,2]", ...) or a bare integer.
[[nodiscard]] Id parse_vertex(const GraphFamily& g, const std::string& text);

}  // namespace qsym
