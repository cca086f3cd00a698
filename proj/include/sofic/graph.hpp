#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sofic/group.hpp"
#include "sofic/perm.hpp"

namespace sofic {

using Vertex = std::string;
using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph over string-labelled vertices. Vertex
/// order is the order of construction; equality ignores it.
class FiniteGraph {
 public:
  FiniteGraph() = default;
  explicit FiniteGraph(std::vector<Vertex> vertices);
  FiniteGraph(std::vector<Vertex> vertices, const std::vector<Edge>& edges);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Vertex& vertex(std::size_t i) const { return vertices_[i]; }
  std::optional<std::size_t> index_of(std::string_view v) const;
  std::size_t at(std::string_view v) const;
  bool has_vertex(std::string_view v) const { return index_of(v).has_value(); }

  bool adjacent(std::size_t i, std::size_t j) const;
  bool adjacent(std::string_view v, std::string_view w) const { return adjacent(at(v), at(w)); }
  const std::vector<std::uint32_t>& neighbors(std::size_t i) const { return adj_[i]; }
  std::size_t degree(std::size_t i) const { return adj_[i].size(); }
  std::size_t edge_count() const;

  /// Adds the edge {i,j}; self-loops throw Error(malformed_input).
  void add_edge(std::size_t i, std::size_t j);

  /// Edges with endpoints in lexicographic order, sorted.
  std::vector<Edge> canonical_edges() const;
  /// Same graph with vertices sorted by label.
  FiniteGraph canonical() const;

  friend bool operator==(const FiniteGraph& a, const FiniteGraph& b);

 private:
  std::vector<Vertex> vertices_;
  std::unordered_map<Vertex, std::size_t> index_;
  std::vector<std::vector<std::uint32_t>> adj_;
};

FiniteGraph path_graph(std::size_t n);
FiniteGraph cycle_graph(std::size_t n);
FiniteGraph complete_graph(std::size_t n);
FiniteGraph edgeless_graph(std::size_t n);

/// Possibly infinite graph given by predicates. `canonical` maps any
/// accepted spelling of a vertex to its unique label; vertices are equal
/// iff their canonical labels are.
struct GraphOracle {
  std::string description;
  std::function<bool(const Vertex&)> contains;
  std::function<Vertex(const Vertex&)> canonical;
  std::function<bool(const Vertex&, const Vertex&)> adjacent;
  /// Full vertex list for finite graphs; empty function otherwise.
  std::function<std::vector<Vertex>()> enumerate;
  /// Optional for locally finite graphs: a superset of the neighbours of v
  /// (spelling need not be canonical). Lets window() avoid the quadratic scan.
  std::function<std::vector<Vertex>(const Vertex&)> neighbors;

  bool is_finite() const { return static_cast<bool>(enumerate); }
};

/// Induced subgraph of the oracle on verts. Throws equality_violation on
/// duplicates and window_failure on unknown vertices or on an asymmetric or
/// reflexive adjacency.
FiniteGraph window(const GraphOracle& oracle, const std::vector<Vertex>& verts);

GraphOracle oracle_of(const FiniteGraph& g);
GraphOracle complement_oracle(const GraphOracle& o);
GraphOracle edgeless_oracle(const GraphOracle& o);
GraphOracle complete_oracle(const GraphOracle& o);
GraphOracle induced_oracle(const GraphOracle& o, std::function<bool(const Vertex&)> keep);

/// Cayley graph: g ~ h iff g^{-1} h lies in conn.
GraphOracle cayley_oracle(const GroupFamily& family, const std::vector<Element>& conn);

bool is_graph_embedding(const std::vector<std::size_t>& map, const FiniteGraph& source, const FiniteGraph& target);
bool is_graph_embedding(const std::map<Vertex, Vertex>& map, const FiniteGraph& source, const FiniteGraph& target);

FiniteGraph complement(const FiniteGraph& g);
/// Vertices tagged "0:v" and "1:v".
FiniteGraph coproduct(const FiniteGraph& g1, const FiniteGraph& g2);

enum class PairState { equal = 0, adjacent = 1, apart = 2 };

/// Adjacency of a product graph as a function of the two coordinate states.
class ProductRule {
 public:
  using Table = std::array<std::array<bool, 3>, 3>;

  explicit ProductRule(Table table);

  static ProductRule named(std::string_view name);
  static ProductRule cartesian() { return named("cartesian"); }
  static ProductRule tensor() { return named("tensor"); }
  static const std::vector<std::string>& preset_names();

  bool operator()(PairState s1, PairState s2) const {
    return table_[static_cast<int>(s1)][static_cast<int>(s2)];
  }
  const Table& table() const { return table_; }
  /// Preset name if the table matches one, else "custom".
  std::string name() const;

  friend bool operator==(const ProductRule&, const ProductRule&) = default;

 private:
  Table table_;
};

/// Vertices "<v1|v2>" in row-major order over (V1, V2).
FiniteGraph product(const FiniteGraph& g1, const FiniteGraph& g2, const ProductRule& rule);
GraphOracle product_oracle(const GraphOracle& o1, const GraphOracle& o2, const ProductRule& rule);
GraphOracle coproduct_oracle(const GraphOracle& o1, const GraphOracle& o2);

/// All automorphisms as permutations of vertex indices, sorted (identity
/// first). Throws size_cap_exceeded above cap vertices.
std::vector<Permutation> automorphism_group(const FiniteGraph& g, std::size_t cap = 10);

/// Brute-force isomorphism test for graphs on at most 8 vertices.
bool is_isomorphic(const FiniteGraph& a, const FiniteGraph& b);
std::size_t component_count(const FiniteGraph& g);

}  // namespace sofic
