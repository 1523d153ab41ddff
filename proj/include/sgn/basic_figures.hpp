#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "sgn/exact_matrix.hpp"
#include "sgn/signed_graph.hpp"

namespace sgraph {

/// Vertex-disjoint union of single edges (K2) and cycles inside a graph.
struct BasicFigure {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<CycleWitness> cycles;
  int vertex_count = 0;

  int component_count() const noexcept { return static_cast<int>(edges.size() + cycles.size()); }
  int cycle_count() const noexcept { return static_cast<int>(cycles.size()); }
  /// Number of negative edges lying on the cycles of the figure.
  int negative_cycle_edges() const noexcept;
  /// (-1)^(components + negative cycle edges) * 2^cycles.
  long long contribution() const noexcept;
};

class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default vertex bound for the exponential figure enumeration.
inline constexpr int kDefaultFigureGuard = 14;

/// All basic figures covering exactly `vertex_count` vertices. The order is
/// fixed by the backtracking: the smallest undecided vertex is skipped, then
/// matched to each larger neighbor, then used as the anchor of each cycle.
/// vertex_count = 0 yields the single empty figure.
/// Throws std::out_of_range unless 0 <= vertex_count <= n.
std::vector<BasicFigure> enumerate_basic_figures(const SignedGraph& g, int vertex_count);

/// a_i as the signed, weighted count of basic figures on i vertices.
/// Throws std::out_of_range unless 1 <= i <= n.
Integer figure_coefficient(const SignedGraph& g, int i);

/// The whole characteristic polynomial from one pass over all basic figures.
/// Throws SizeGuardError when g has more than `guard` vertices.
CharPoly char_poly_figures(const SignedGraph& g, int guard = kDefaultFigureGuard);

}  // namespace sgraph
