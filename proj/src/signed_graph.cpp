#include "sgn/signed_graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace sgraph {

namespace {

std::string edge_name(Vertex u, Vertex v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

}  // namespace

SignedGraph::SignedGraph(int order, std::vector<Edge> edges) : order_(order), edges_(std::move(edges)) {
  if (order_ < 0) throw GraphError("vertex count must be nonnegative");
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= order_) {
      throw GraphError("edge " + edge_name(e.u, e.v) + " has a vertex outside 0.." + std::to_string(order_ - 1));
    }
    if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u));
    if (e.sign != 1 && e.sign != -1) throw GraphError("edge " + edge_name(e.u, e.v) + " has sign other than +1/-1");
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
      throw GraphError("duplicate edge " + edge_name(edges_[i].u, edges_[i].v));
    }
  }
  adjacency_.resize(static_cast<std::size_t>(order_));
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back({e.v, e.sign});
    adjacency_[e.v].push_back({e.u, e.sign});
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(), [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
  }
}

std::span<const Neighbor> SignedGraph::neighbors(Vertex v) const {
  if (!has_vertex(v)) throw GraphError("vertex " + std::to_string(v) + " out of range");
  return adjacency_[v];
}

int SignedGraph::degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

int SignedGraph::sign(Vertex u, Vertex v) const {
  if (!has_vertex(u) || !has_vertex(v)) return 0;
  const auto& list = adjacency_[u];
  auto it = std::lower_bound(list.begin(), list.end(), v,
                             [](const Neighbor& a, Vertex x) { return a.vertex < x; });
  return (it != list.end() && it->vertex == v) ? it->sign : 0;
}

int SignedGraph::component_count() const {
  std::vector<int> parent(static_cast<std::size_t>(order_));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int count = order_;
  for (const auto& e : edges_) {
    int a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --count;
    }
  }
  return count;
}

int SignedGraph::cyclomatic_number() const { return size() - order_ + component_count(); }

bool SignedGraph::is_all_positive() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.sign == 1; });
}

bool SignedGraph::same_underlying(const SignedGraph& other) const {
  if (order_ != other.order_ || edges_.size() != other.edges_.size()) return false;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].u != other.edges_[i].u || edges_[i].v != other.edges_[i].v) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

ParseError::ParseError(ParseErrorKind kind, int line, const std::string& message)
    : GraphError("line " + std::to_string(line) + ": " + message), kind_(kind), line_(line) {}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::optional<long long> to_integer(std::string_view token) {
  long long value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) return std::nullopt;
  return value;
}

}  // namespace

SignedGraph parse_edge_list(std::string_view text) {
  std::optional<long long> order;
  long long expected_edges = 0;
  std::vector<Edge> edges;
  std::vector<int> edge_line;
  int line_no = 0;
  int last_line = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    last_line = line_no;

    if (!order) {
      if (tokens.size() != 2) throw ParseError(ParseErrorKind::MalformedHeader, line_no, "header must be `n m`");
      auto n = to_integer(tokens[0]);
      auto m = to_integer(tokens[1]);
      if (!n || !m || *n < 0 || *m < 0) {
        throw ParseError(ParseErrorKind::MalformedHeader, line_no, "header must hold two nonnegative integers");
      }
      if (*n > 1'000'000) throw ParseError(ParseErrorKind::MalformedHeader, line_no, "vertex count too large");
      order = *n;
      expected_edges = *m;
    } else {
      if (tokens.size() != 3) throw ParseError(ParseErrorKind::MalformedLine, line_no, "edge line must be `u v s`");
      auto u = to_integer(tokens[0]);
      auto v = to_integer(tokens[1]);
      auto s = to_integer(tokens[2]);
      if (!u || !v || !s) throw ParseError(ParseErrorKind::MalformedLine, line_no, "edge line must hold three integers");
      if (static_cast<long long>(edges.size()) >= expected_edges) {
        throw ParseError(ParseErrorKind::EdgeCountMismatch, line_no,
                         "more edge lines than the " + std::to_string(expected_edges) + " declared");
      }
      if (*u < 0 || *u >= *order || *v < 0 || *v >= *order) {
        throw ParseError(ParseErrorKind::VertexOutOfRange, line_no,
                         "vertex outside 0.." + std::to_string(*order - 1));
      }
      if (*s != 1 && *s != -1) throw ParseError(ParseErrorKind::BadSign, line_no, "sign must be 1 or -1");
      if (*u == *v) throw ParseError(ParseErrorKind::Loop, line_no, "loop at vertex " + std::to_string(*u));
      Vertex a = static_cast<Vertex>(std::min(*u, *v));
      Vertex b = static_cast<Vertex>(std::max(*u, *v));
      for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].u == a && edges[i].v == b) {
          throw ParseError(ParseErrorKind::DuplicateEdge, line_no,
                           "edge " + edge_name(a, b) + " already given on line " + std::to_string(edge_line[i]));
        }
      }
      edges.push_back({a, b, static_cast<int>(*s)});
      edge_line.push_back(line_no);
    }
    if (end == text.size()) break;
  }

  if (!order) throw ParseError(ParseErrorKind::MalformedHeader, std::max(line_no, 1), "missing header `n m`");
  if (static_cast<long long>(edges.size()) != expected_edges) {
    throw ParseError(ParseErrorKind::EdgeCountMismatch, last_line,
                     "expected " + std::to_string(expected_edges) + " edges, found " + std::to_string(edges.size()));
  }
  return SignedGraph(static_cast<int>(*order), std::move(edges));
}

std::string to_edge_list(const SignedGraph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.sign << '\n';
  return out.str();
}

std::string to_json(const SignedGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v, e.sign});
  return nlohmann::json{{"n", g.order()}, {"edges", edges}}.dump();
}

SignedGraph graph_from_json(std::string_view json) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw GraphError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer() || !doc.contains("edges") ||
      !doc["edges"].is_array()) {
    throw GraphError("graph JSON must be {\"n\": int, \"edges\": [[u, v, s], ...]}");
  }
  std::vector<Edge> edges;
  for (const auto& item : doc["edges"]) {
    if (!item.is_array() || item.size() != 3 || !item[0].is_number_integer() || !item[1].is_number_integer() ||
        !item[2].is_number_integer()) {
      throw GraphError("each edge must be [u, v, s]");
    }
    edges.push_back({item[0].get<int>(), item[1].get<int>(), item[2].get<int>()});
  }
  return SignedGraph(doc["n"].get<int>(), std::move(edges));
}

// ---------------------------------------------------------------------------

Subgraph induced_subgraph(const SignedGraph& g, std::span<const Vertex> keep) {
  std::vector<int> relabel(static_cast<std::size_t>(g.order()), -1);
  for (Vertex v : keep) {
    if (!g.has_vertex(v)) throw GraphError("vertex " + std::to_string(v) + " out of range");
    relabel[v] = 0;
  }
  Subgraph result;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (relabel[v] == 0) {
      relabel[v] = static_cast<int>(result.origin.size());
      result.origin.push_back(v);
    } else {
      relabel[v] = -1;
    }
  }
  // relabel now maps kept vertices to new labels; dropped ones are -1.
  for (std::size_t i = 0; i < result.origin.size(); ++i) relabel[result.origin[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (relabel[e.u] >= 0 && relabel[e.v] >= 0) edges.push_back({relabel[e.u], relabel[e.v], e.sign});
  }
  result.graph = SignedGraph(static_cast<int>(result.origin.size()), std::move(edges));
  return result;
}

Subgraph delete_vertices(const SignedGraph& g, std::span<const Vertex> removed) {
  std::vector<char> gone(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : removed) {
    if (!g.has_vertex(v)) throw GraphError("vertex " + std::to_string(v) + " out of range");
    gone[v] = 1;
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!gone[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

std::vector<Subgraph> components(const SignedGraph& g) {
  std::vector<int> label(static_cast<std::size_t>(g.order()), -1);
  std::vector<std::vector<Vertex>> groups;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (label[s] >= 0) continue;
    int id = static_cast<int>(groups.size());
    groups.emplace_back();
    label[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      groups[id].push_back(x);
      for (const auto& nb : g.neighbors(x)) {
        if (label[nb.vertex] < 0) {
          label[nb.vertex] = id;
          stack.push_back(nb.vertex);
        }
      }
    }
  }
  std::vector<Subgraph> result;
  result.reserve(groups.size());
  for (auto& group : groups) {
    std::sort(group.begin(), group.end());
    result.push_back(induced_subgraph(g, group));
  }
  return result;
}

std::vector<Vertex> cut_points(const SignedGraph& g) {
  if (!g.is_connected()) throw GraphError("cut_points requires a connected graph");
  const int n = g.order();
  std::vector<int> discovery(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<char> articulation(static_cast<std::size_t>(n), 0);
  if (n == 0) return {};

  struct Frame {
    Vertex v;
    std::size_t next;
  };
  int clock = 0;
  int root_children = 0;
  std::vector<Frame> stack{{0, 0}};
  discovery[0] = low[0] = clock++;
  while (!stack.empty()) {
    auto& frame = stack.back();
    auto nbrs = g.neighbors(frame.v);
    if (frame.next < nbrs.size()) {
      Vertex w = nbrs[frame.next++].vertex;
      if (discovery[w] < 0) {
        parent[w] = frame.v;
        discovery[w] = low[w] = clock++;
        if (frame.v == 0) ++root_children;
        stack.push_back({w, 0});
      } else if (w != parent[frame.v]) {
        low[frame.v] = std::min(low[frame.v], discovery[w]);
      }
    } else {
      Vertex v = frame.v;
      stack.pop_back();
      if (!stack.empty()) {
        Vertex p = stack.back().v;
        low[p] = std::min(low[p], low[v]);
        if (p != 0 && low[v] >= discovery[p]) articulation[p] = 1;
      }
    }
  }
  if (root_children > 1) articulation[0] = 1;

  std::vector<Vertex> result;
  for (Vertex v = 0; v < n; ++v) {
    if (articulation[v]) result.push_back(v);
  }
  return result;
}

std::vector<std::pair<Vertex, Vertex>> pendant_pairs(const SignedGraph& g) {
  std::vector<std::pair<Vertex, Vertex>> result;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto nbrs = g.neighbors(v);
    if (nbrs.size() == 1) result.emplace_back(v, nbrs.front().vertex);
  }
  return result;
}

// ---------------------------------------------------------------------------

SwitchingFunction::SwitchingFunction(std::vector<int> values) : values_(std::move(values)) {
  for (int x : values_) {
    if (x != 1 && x != -1) throw GraphError("switching values must be +1 or -1");
  }
}

SwitchingFunction SwitchingFunction::identity(int order) {
  return SwitchingFunction(std::vector<int>(static_cast<std::size_t>(order), 1));
}

SignedGraph apply_switching(const SignedGraph& g, const SwitchingFunction& theta) {
  if (theta.size() != g.order()) {
    throw GraphError("switching function covers " + std::to_string(theta.size()) + " vertices, graph has " +
                     std::to_string(g.order()));
  }
  std::vector<Edge> edges = g.edges();
  for (auto& e : edges) e.sign *= theta[e.u] * theta[e.v];
  return SignedGraph(g.order(), std::move(edges));
}

CycleWitness make_cycle(const SignedGraph& g, std::vector<Vertex> vertices) {
  const std::size_t len = vertices.size();
  if (len < 3) throw GraphError("a cycle needs at least 3 vertices");
  auto min_it = std::min_element(vertices.begin(), vertices.end());
  std::rotate(vertices.begin(), min_it, vertices.end());
  if (vertices[1] > vertices.back()) std::reverse(vertices.begin() + 1, vertices.end());

  CycleWitness cycle;
  cycle.vertices = std::move(vertices);
  for (std::size_t i = 0; i < len; ++i) {
    int s = g.sign(cycle.vertices[i], cycle.vertices[(i + 1) % len]);
    if (s == 0) {
      throw GraphError("vertices " + std::to_string(cycle.vertices[i]) + " and " +
                       std::to_string(cycle.vertices[(i + 1) % len]) + " are not adjacent");
    }
    cycle.sign *= s;
    if (s < 0) ++cycle.negative_edges;
  }
  return cycle;
}

namespace {

/// Spanning forest grown by depth-first search from the smallest unvisited
/// vertex, always descending into the smallest unvisited neighbor.
struct DfsForest {
  std::vector<Vertex> parent;
  std::vector<int> depth;
  std::vector<Vertex> order;  // preorder
};

DfsForest smallest_label_dfs(const SignedGraph& g) {
  const int n = g.order();
  DfsForest forest{std::vector<Vertex>(static_cast<std::size_t>(n), -1),
                   std::vector<int>(static_cast<std::size_t>(n), -1), {}};
  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (forest.depth[root] >= 0) continue;
    forest.depth[root] = 0;
    forest.order.push_back(root);
    stack.push_back({root, 0});
    while (!stack.empty()) {
      auto& frame = stack.back();
      auto nbrs = g.neighbors(frame.v);
      if (frame.next == nbrs.size()) {
        stack.pop_back();
        continue;
      }
      Vertex w = nbrs[frame.next++].vertex;
      if (forest.depth[w] >= 0) continue;
      forest.parent[w] = frame.v;
      forest.depth[w] = forest.depth[frame.v] + 1;
      forest.order.push_back(w);
      stack.push_back({w, 0});
    }
  }
  return forest;
}

/// theta(root) = +1, theta(child) = sign(parent, child) * theta(parent).
std::vector<int> forest_switching(const SignedGraph& g, const DfsForest& forest) {
  std::vector<int> theta(static_cast<std::size_t>(g.order()), 1);
  for (Vertex v : forest.order) {
    Vertex p = forest.parent[v];
    if (p >= 0) theta[v] = g.sign(p, v) * theta[p];
  }
  return theta;
}

}  // namespace

BalanceResult is_balanced(const SignedGraph& g) {
  const auto forest = smallest_label_dfs(g);
  auto theta = forest_switching(g, forest);
  for (const auto& e : g.edges()) {
    if (theta[e.u] * e.sign * theta[e.v] == 1) continue;
    // Tree edges are positive after switching, so this is a non-tree edge
    // closing a negative fundamental cycle.
    std::vector<Vertex> up{e.u}, down{e.v};
    Vertex a = e.u, b = e.v;
    while (forest.depth[a] > forest.depth[b]) up.push_back(a = forest.parent[a]);
    while (forest.depth[b] > forest.depth[a]) down.push_back(b = forest.parent[b]);
    while (a != b) {
      up.push_back(a = forest.parent[a]);
      down.push_back(b = forest.parent[b]);
    }
    down.pop_back();  // the common ancestor is already at the end of `up`
    up.insert(up.end(), down.rbegin(), down.rend());
    BalanceResult result;
    result.balanced = false;
    result.negative_cycle = make_cycle(g, std::move(up));
    return result;
  }
  BalanceResult result;
  result.switching = SwitchingFunction(std::move(theta));
  return result;
}

SignedGraph canonical_signature(const SignedGraph& g) {
  const auto forest = smallest_label_dfs(g);
  return apply_switching(g, SwitchingFunction(forest_switching(g, forest)));
}

bool switching_equivalent(const SignedGraph& a, const SignedGraph& b) {
  return a.same_underlying(b) && canonical_signature(a) == canonical_signature(b);
}

std::vector<CycleWitness> find_cycles(const SignedGraph& g, int max_cyclomatic) {
  if (g.cyclomatic_number() > max_cyclomatic) {
    throw GraphError("find_cycles limited to cyclomatic number " + std::to_string(max_cyclomatic) + ", got " +
                     std::to_string(g.cyclomatic_number()));
  }
  std::vector<CycleWitness> cycles;
  std::vector<char> on_path(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> path;

  // Cycles anchored at their minimum vertex `start`, extended only through
  // larger labels; each orientation is kept once via path[1] < path.back().
  auto extend = [&](auto&& self, Vertex start) -> void {
    Vertex tail = path.back();
    for (const auto& nb : g.neighbors(tail)) {
      Vertex w = nb.vertex;
      if (w == start && path.size() >= 3 && path[1] < path.back()) {
        cycles.push_back(make_cycle(g, path));
      } else if (w > start && !on_path[w]) {
        on_path[w] = 1;
        path.push_back(w);
        self(self, start);
        path.pop_back();
        on_path[w] = 0;
      }
    }
  };
  for (Vertex s = 0; s < g.order(); ++s) {
    on_path[s] = 1;
    path.assign(1, s);
    extend(extend, s);
    on_path[s] = 0;
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const CycleWitness& a, const CycleWitness& b) { return a.vertices < b.vertices; });
  return cycles;
}

}  // namespace sgraph
