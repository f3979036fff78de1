#pragma once

// Text formats and generators.
//
// Ideal file:
//   vars: x, y, z
//   x^2*y          one generator per line
//   z              `#` starts a comment, blank lines are ignored
// `gens: 1` denotes the unit ideal and `gens: 0` the zero ideal; a file
// with no generator lines is the zero ideal.
//
// Graph file: optional `n: <count>` header, then one edge per line as two
// whitespace-separated 1-based vertex indices.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "filtra/ring.hpp"

namespace filtra {

MonomialIdeal parse_ideal(std::string_view text);
std::string print_ideal(const MonomialIdeal& I);

/// One generator in `*`/`^` syntax, e.g. "x^2*y" or "1".
Monomial parse_monomial(const VarContext& ctx, std::string_view text);

class Graph {
public:
  /// Vertices are 1..n; throws DomainError on loops, duplicates, or
  /// out-of-range endpoints.
  Graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  /// Sorted, each pair (i, j) with i < j.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
  bool is_connected() const;
  bool is_bipartite() const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  std::size_t n_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

inline constexpr std::size_t kMaxGraphVertices = 10;

Graph parse_graph(std::string_view text);
std::string print_graph(const Graph& G);

/// (x_i x_j : {i, j} ∈ E) over x1..xn. No edges gives the zero ideal.
MonomialIdeal edge_ideal(const Graph& G);
/// ⋂_{{i,j} ∈ E} (x_i, x_j); generators are the minimal vertex covers.
MonomialIdeal cover_ideal(const Graph& G);
/// ⋂ over generators of the prime on each generator's support; throws
/// DomainError unless I is square-free, proper and nonzero.
MonomialIdeal alexander_dual(const MonomialIdeal& I);

/// Every connected graph on exactly n vertices, one per isomorphism class.
std::vector<Graph> connected_graphs_up_to_isomorphism(std::size_t n);

} // namespace filtra
