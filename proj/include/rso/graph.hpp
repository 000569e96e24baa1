#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rso/rational.hpp"

namespace rso {

using Vertex = std::uint32_t;

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Exhaustive subset routines (exact Cheeger, connected k-subsets, sieve)
/// refuse graphs above this many vertices.
inline constexpr std::size_t kSubsetEnumerationMaxN = 24;

/// Immutable simple undirected graph on vertices [0, n).
///
/// Edges are kept in canonical sorted order, so an edge's index is a stable
/// function of the edge set. Adjacency is stored CSR-style with sorted
/// neighbor lists. For n <= 64 a neighbor bitmask per vertex is also kept.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Pairs may be given in either order.
  /// Throws DomainError on self-loops, duplicates or out-of-range ids.
  static Graph from_edges(std::size_t n, std::vector<Edge> edges);

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const noexcept {
    return offsets_[v + 1] - offsets_[v];
  }
  std::size_t min_degree() const noexcept;
  std::size_t max_degree() const noexcept;
  bool has_edge(Vertex a, Vertex b) const noexcept;

  /// Neighbor set of v as a bitmask. Only meaningful when n <= 64.
  std::uint64_t neighbor_mask(Vertex v) const noexcept {
    return masks_.empty() ? 0 : masks_[v];
  }
  bool has_masks() const noexcept { return !masks_.empty(); }

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adj_;
  std::vector<std::uint64_t> masks_;
};

/// A set of vertices of a graph on n vertices, stored as a bitset.
class VertexSubset {
 public:
  VertexSubset() = default;
  explicit VertexSubset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  static VertexSubset from_mask(std::size_t n, std::uint64_t mask);
  static VertexSubset from_list(std::size_t n, std::span<const Vertex> vs);

  std::size_t universe() const noexcept { return n_; }
  bool contains(Vertex v) const noexcept {
    return (words_[v >> 6] >> (v & 63)) & 1u;
  }
  void insert(Vertex v);
  void erase(Vertex v) noexcept { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  bool is_proper() const noexcept { return size() < n_; }
  VertexSubset complement() const;
  std::vector<Vertex> members() const;
  /// Low 64 bits. Callers use this only when n <= 64.
  std::uint64_t mask() const noexcept { return words_.empty() ? 0 : words_[0]; }

  friend bool operator==(const VertexSubset&, const VertexSubset&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Exact Cheeger constant with a witness cut.
struct CheegerReport {
  Rational phi;
  VertexSubset argmin;
  std::uint64_t cut_edges = 0;
  std::uint64_t vol_x = 0;
  std::uint64_t vol_xbar = 0;
  bool connected = true;
};

/// Parses the edge-list text format: first line "n m", then m lines "u v".
/// Blank lines and lines starting with '#' are skipped.
Graph parse_graph(std::string_view text);
std::string to_edge_list(const Graph& g);

std::uint64_t volume(const Graph& g, const VertexSubset& x);
std::uint64_t edge_boundary(const Graph& g, const VertexSubset& x);
Rational cheeger_ratio(const Graph& g, const VertexSubset& x);

/// Minimum Cheeger ratio over all nonempty proper subsets. Enumerates the
/// subsets that contain vertex 0 in Gray-code order with incremental cut and
/// volume updates. Ties go to the smallest bitmask. Requires n <= 24.
/// A disconnected graph yields phi = 0 with the component of vertex 0 as
/// witness and connected = false.
CheegerReport cheeger_constant_exact(const Graph& g);

/// Connected-component label per vertex, labels numbered in order of the
/// smallest vertex they contain.
std::vector<std::uint32_t> component_labels(const Graph& g);
bool is_connected(const Graph& g);
std::vector<Edge> bridges(const Graph& g);
bool is_two_edge_connected(const Graph& g);
bool is_bipartite(const Graph& g);

/// All k-subsets inducing a connected subgraph, in increasing bitmask order.
std::vector<VertexSubset> connected_k_subsets(const Graph& g, std::size_t k);

/// True iff the vertices in `mask` induce a connected subgraph (n <= 64).
bool induces_connected(const Graph& g, std::uint64_t mask) noexcept;

}  // namespace rso
