#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sgraph {

using Vertex = int;

/// An undirected edge {u, v} with u < v and a sign of +1 or -1.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  int sign = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Neighbor {
  Vertex vertex = 0;
  int sign = 1;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1 with a sign of +1 or -1 on
/// every edge. Values are immutable once constructed; edges are kept sorted
/// by (u, v).
class SignedGraph {
 public:
  SignedGraph() = default;

  /// Throws GraphError on a loop, a duplicate pair, an out-of-range vertex,
  /// or a sign other than +1/-1. Pairs given as (v, u) with v > u are
  /// normalized.
  SignedGraph(int order, std::vector<Edge> edges);

  int order() const noexcept { return order_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Neighbors of v in increasing label order.
  std::span<const Neighbor> neighbors(Vertex v) const;
  int degree(Vertex v) const;

  /// Sign of edge {u, v}, or 0 when u and v are not adjacent.
  int sign(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return sign(u, v) != 0; }
  bool has_vertex(Vertex v) const noexcept { return v >= 0 && v < order_; }

  int component_count() const;
  /// The empty graph and K1 count as connected.
  bool is_connected() const { return component_count() <= 1; }
  /// m - n + (number of components).
  int cyclomatic_number() const;
  bool is_all_positive() const;
  bool same_underlying(const SignedGraph& other) const;

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

// ---------------------------------------------------------------------------
// Text and JSON formats

enum class ParseErrorKind {
  MalformedHeader,
  MalformedLine,
  VertexOutOfRange,
  BadSign,
  DuplicateEdge,
  Loop,
  EdgeCountMismatch,
};

class ParseError : public GraphError {
 public:
  ParseError(ParseErrorKind kind, int line, const std::string& message);

  ParseErrorKind kind() const noexcept { return kind_; }
  /// 1-based line number in the input text.
  int line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  int line_;
};

/// Parses the edge-list format: a header `n m`, then m lines `u v s` with
/// s in {1, -1}. Lines starting with `#` are comments; blank lines are
/// skipped.
SignedGraph parse_edge_list(std::string_view text);

/// Inverse of parse_edge_list; edges are emitted sorted by (u, v).
std::string to_edge_list(const SignedGraph& g);

/// {"n": ..., "edges": [[u, v, s], ...]}
std::string to_json(const SignedGraph& g);
SignedGraph graph_from_json(std::string_view json);

// ---------------------------------------------------------------------------
// Structure

/// A graph carved out of a parent graph. origin[i] is the parent label of
/// vertex i; labels keep their relative order.
struct Subgraph {
  SignedGraph graph;
  std::vector<Vertex> origin;
};

/// Connected components ordered by smallest vertex.
std::vector<Subgraph> components(const SignedGraph& g);

/// Induced subgraph on `keep`; duplicates in `keep` are ignored.
Subgraph induced_subgraph(const SignedGraph& g, std::span<const Vertex> keep);

/// G - S. Throws GraphError if a vertex of S is out of range.
Subgraph delete_vertices(const SignedGraph& g, std::span<const Vertex> removed);

/// Articulation points of a connected graph, sorted. Lowpoint DFS, O(n + m).
/// Throws GraphError if g is not connected.
std::vector<Vertex> cut_points(const SignedGraph& g);

/// (pendant, neighbor) for every degree-1 vertex, ordered by pendant.
std::vector<std::pair<Vertex, Vertex>> pendant_pairs(const SignedGraph& g);

// ---------------------------------------------------------------------------
// Switching and balance

class SwitchingFunction {
 public:
  /// Throws GraphError if any value is not +1/-1.
  explicit SwitchingFunction(std::vector<int> values);
  static SwitchingFunction identity(int order);

  int operator[](Vertex v) const { return values_.at(static_cast<std::size_t>(v)); }
  int size() const noexcept { return static_cast<int>(values_.size()); }
  const std::vector<int>& values() const noexcept { return values_; }

  friend bool operator==(const SwitchingFunction&, const SwitchingFunction&) = default;

 private:
  std::vector<int> values_;
};

/// Resigns every edge uv by theta(u) * theta(v). Throws GraphError if theta
/// does not cover exactly the vertices of g.
SignedGraph apply_switching(const SignedGraph& g, const SwitchingFunction& theta);

/// A cycle as a cyclic vertex sequence in canonical orientation: smallest
/// vertex first, then the smaller of its two cycle neighbors.
struct CycleWitness {
  std::vector<Vertex> vertices;
  int sign = 1;
  int negative_edges = 0;

  int length() const noexcept { return static_cast<int>(vertices.size()); }
  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

/// Builds the witness for a vertex sequence that forms a cycle in g.
/// Throws GraphError if consecutive vertices are not adjacent.
CycleWitness make_cycle(const SignedGraph& g, std::vector<Vertex> vertices);

struct BalanceResult {
  bool balanced = true;
  /// Set when balanced: switching by it makes every edge positive.
  std::optional<SwitchingFunction> switching;
  /// Set when unbalanced: a cycle of sign -1.
  std::optional<CycleWitness> negative_cycle;

  explicit operator bool() const noexcept { return balanced; }
};

BalanceResult is_balanced(const SignedGraph& g);

/// The switching-equivalent graph whose smallest-label DFS forest has only
/// positive edges. Two graphs on the same labeled underlying graph are
/// switching equivalent iff their canonical signatures are equal.
SignedGraph canonical_signature(const SignedGraph& g);

bool switching_equivalent(const SignedGraph& a, const SignedGraph& b);

/// All cycles, sorted by vertex sequence. The count grows exponentially with
/// the cyclomatic number, so anything above `max_cyclomatic` throws
/// GraphError.
std::vector<CycleWitness> find_cycles(const SignedGraph& g, int max_cyclomatic = 2);

}  // namespace sgraph
