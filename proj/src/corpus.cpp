#include "sgn/corpus.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace sgraph {

namespace {

constexpr int kCodeLimit = 11;
constexpr int kClassLimit = 20;

std::size_t pair_bit(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  return static_cast<std::size_t>(i * n - i * (i + 1) / 2 + (j - i - 1));
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const SignedGraph& g) : g_(g), position_(static_cast<std::size_t>(g.order()), 0) {
    order_.resize(static_cast<std::size_t>(g.order()));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    std::size_t start = 0;
    while (start < order_.size()) {
      std::size_t end = start;
      while (end < order_.size() && g.degree(order_[end]) == g.degree(order_[start])) ++end;
      classes_.emplace_back(start, end);
      start = end;
    }
  }

  std::uint64_t run() {
    search(0);
    return best_;
  }

 private:
  void search(std::size_t cls) {
    if (cls == classes_.size()) {
      std::uint64_t code = 0;
      for (const auto& e : g_.edges()) {
        code |= std::uint64_t{1} << pair_bit(g_.order(), position_[e.u], position_[e.v]);
      }
      best_ = std::min(best_, code);
      return;
    }
    const auto [start, end] = classes_[cls];
    std::vector<Vertex> members(order_.begin() + static_cast<long>(start), order_.begin() + static_cast<long>(end));
    do {
      for (std::size_t k = 0; k < members.size(); ++k) position_[members[k]] = static_cast<int>(start + k);
      search(cls + 1);
    } while (std::next_permutation(members.begin(), members.end()));
  }

  const SignedGraph& g_;
  std::vector<Vertex> order_;
  std::vector<std::pair<std::size_t, std::size_t>> classes_;
  std::vector<int> position_;
  std::uint64_t best_ = std::numeric_limits<std::uint64_t>::max();
};

SignedGraph with_edges(int n, std::vector<Edge> edges) { return SignedGraph(n, std::move(edges)); }

std::vector<SignedGraph> from_codes(int n, const std::set<std::uint64_t>& codes) {
  std::vector<SignedGraph> out;
  out.reserve(codes.size());
  for (auto code : codes) out.push_back(graph_from_code(n, code));
  return out;
}

SignedGraph relabel_randomly(std::mt19937_64& rng, const SignedGraph& g) {
  std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) edges.push_back({perm[e.u], perm[e.v], e.sign});
  return SignedGraph(g.order(), std::move(edges));
}

int random_sign(std::mt19937_64& rng) { return std::bernoulli_distribution(0.5)(rng) ? -1 : 1; }

}  // namespace

std::uint64_t canonical_code(const SignedGraph& g) {
  if (g.order() > kCodeLimit) throw std::invalid_argument("canonical_code supports at most 11 vertices");
  if (g.size() == 0) return 0;
  return CanonicalSearch(g).run();
}

SignedGraph graph_from_code(int n, std::uint64_t code) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if ((code >> pair_bit(n, i, j)) & 1U) edges.push_back({i, j, 1});
    }
  }
  return with_edges(n, std::move(edges));
}

bool isomorphic(const SignedGraph& a, const SignedGraph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_code(a) == canonical_code(b);
}

std::vector<SignedGraph> labeled_connected_graphs(int n) {
  if (n < 1 || n > kLabeledLimit) throw std::invalid_argument("labeled enumeration supports 1 <= n <= 6");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<SignedGraph> out;
  const std::uint32_t total = 1U << pairs.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    // Connectivity by closure over adjacency bitmasks.
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if ((mask >> b) & 1U) {
        adj[pairs[b].first] |= 1U << pairs[b].second;
        adj[pairs[b].second] |= 1U << pairs[b].first;
      }
    }
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
      std::uint32_t next = 0;
      for (int v = 0; v < n; ++v) {
        if ((frontier >> v) & 1U) next |= adj[v];
      }
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen != (1U << n) - 1) continue;
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if ((mask >> b) & 1U) edges.push_back({pairs[b].first, pairs[b].second, 1});
    }
    out.push_back(with_edges(n, std::move(edges)));
  }
  return out;
}

std::vector<SignedGraph> unlabeled_connected_graphs(int n) {
  if (n < 1 || n > kUnlabeledLimit) throw std::invalid_argument("unlabeled enumeration supports 1 <= n <= 7");
  if (n == 1) return {SignedGraph(1, {})};
  // Deleting a non-cut vertex (a leaf of a spanning tree) keeps a connected
  // graph connected, so every graph arises from a smaller one.
  std::set<std::uint64_t> codes;
  for (const auto& smaller : unlabeled_connected_graphs(n - 1)) {
    for (std::uint32_t mask = 1; mask < (1U << (n - 1)); ++mask) {
      std::vector<Edge> edges(smaller.edges().begin(), smaller.edges().end());
      for (int v = 0; v < n - 1; ++v) {
        if ((mask >> v) & 1U) edges.push_back({v, n - 1, 1});
      }
      codes.insert(canonical_code(with_edges(n, std::move(edges))));
    }
  }
  return from_codes(n, codes);
}

std::vector<SignedGraph> unlabeled_bicyclic_graphs(int n) {
  if (n < 4 || n > kBicyclicLimit) throw std::invalid_argument("bicyclic enumeration supports 4 <= n <= 9");
  std::set<std::uint64_t> codes;
  // Leafless bicyclic graphs are the bare infinity and theta graphs.
  for (int p = 3; p <= n; ++p) {
    for (int q = p; p + q - 1 <= n; ++q) {
      const int l = n + 2 - p - q;
      if (l >= 1) codes.insert(canonical_code(gen_infinity(p, q, l, 0, 0)));
    }
  }
  for (int p = 1; p <= n; ++p) {
    for (int q = std::max(p, 2); p + q <= n; ++q) {
      const int l = n + 1 - p - q;
      if (l >= q) codes.insert(canonical_code(gen_theta(p, q, l, 0, 0, 0)));
    }
  }
  if (n > 4) {
    for (const auto& smaller : unlabeled_bicyclic_graphs(n - 1)) {
      for (int v = 0; v < n - 1; ++v) {
        std::vector<Edge> edges(smaller.edges().begin(), smaller.edges().end());
        edges.push_back({v, n - 1, 1});
        codes.insert(canonical_code(with_edges(n, std::move(edges))));
      }
    }
  }
  return from_codes(n, codes);
}

std::vector<SignedGraph> switching_classes(const SignedGraph& underlying) {
  const int n = underlying.order();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::set<std::pair<Vertex, Vertex>> tree;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::vector<Vertex> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (const auto& nb : underlying.neighbors(u)) {
        if (seen[nb.vertex]) continue;
        seen[nb.vertex] = 1;
        tree.emplace(std::min(u, nb.vertex), std::max(u, nb.vertex));
        queue.push_back(nb.vertex);
      }
    }
  }
  std::vector<Edge> base;
  std::vector<std::size_t> free;
  for (const auto& e : underlying.edges()) {
    if (!tree.contains({e.u, e.v})) free.push_back(base.size());
    base.push_back({e.u, e.v, 1});
  }
  if (static_cast<int>(free.size()) > kClassLimit) throw std::invalid_argument("too many switching classes");
  std::vector<SignedGraph> out;
  const std::uint64_t total = std::uint64_t{1} << free.size();
  out.reserve(total);
  for (std::uint64_t pattern = 0; pattern < total; ++pattern) {
    std::vector<Edge> edges = base;
    for (std::size_t j = 0; j < free.size(); ++j) {
      if ((pattern >> j) & 1U) edges[free[j]].sign = -1;
    }
    out.push_back(with_edges(n, std::move(edges)));
  }
  return out;
}

std::string CorpusTag::key() const {
  return (labeled ? "L" : "U") + std::to_string(n) + ".g" + std::to_string(graph_index) + ".c" +
         std::to_string(class_index);
}

void for_each_corpus_graph(int n_max, const std::function<void(const SignedGraph&, const CorpusTag&)>& visit) {
  if (n_max > kUnlabeledLimit) throw std::invalid_argument("exhaustive corpus supports n <= 7");
  for (int n = 1; n <= n_max; ++n) {
    const bool labeled = n <= kLabeledLimit;
    const auto graphs = labeled ? labeled_connected_graphs(n) : unlabeled_connected_graphs(n);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const auto classes = switching_classes(graphs[i]);
      for (std::size_t c = 0; c < classes.size(); ++c) visit(classes[c], CorpusTag{n, labeled, i, c});
    }
  }
}

SignedGraph random_signed_graph(std::mt19937_64& rng, int n, double density) {
  if (n < 1) throw std::invalid_argument("random graph needs n >= 1");
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> used;
  for (int v = 1; v < n; ++v) {
    const int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
    edges.push_back({u, v, random_sign(rng)});
    used.emplace(u, v);
  }
  std::bernoulli_distribution extra(density);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!used.contains({u, v}) && extra(rng)) edges.push_back({u, v, random_sign(rng)});
    }
  }
  return relabel_randomly(rng, SignedGraph(n, std::move(edges)));
}

SwitchingFunction random_switching(std::mt19937_64& rng, int n) {
  std::vector<int> values(static_cast<std::size_t>(n));
  for (auto& x : values) x = random_sign(rng);
  return SwitchingFunction(std::move(values));
}

SignedGraph random_bicyclic(std::mt19937_64& rng, BicyclicClass c, int n) {
  std::vector<std::tuple<int, int, int>> shapes;
  for (int p = 1; p <= n; ++p) {
    for (int q = p; q <= n; ++q) {
      for (int l = 1; l <= n; ++l) {
        switch (c) {
          case BicyclicClass::BPlus:
            if (p >= 3 && l >= 2 && p + q + l - 2 <= n) shapes.emplace_back(p, q, l);
            break;
          case BicyclicClass::BPlusPlus:
            if (p >= 3 && l == 1 && p + q - 1 <= n) shapes.emplace_back(p, q, l);
            break;
          case BicyclicClass::Theta:
            if (q <= l && q >= 2 && p + q + l - 1 <= n) shapes.emplace_back(p, q, l);
            break;
        }
      }
    }
  }
  if (shapes.empty()) throw std::invalid_argument("no " + std::string(to_string(c)) + " skeleton fits n");
  const auto [p, q, l] = shapes[std::uniform_int_distribution<std::size_t>(0, shapes.size() - 1)(rng)];
  const SignedGraph skeleton = c == BicyclicClass::Theta ? gen_theta(p, q, l, 0, 0, 0) : gen_infinity(p, q, l, 0, 0);
  std::vector<Edge> edges(skeleton.edges().begin(), skeleton.edges().end());
  for (int v = skeleton.order(); v < n; ++v) {
    edges.push_back({std::uniform_int_distribution<int>(0, v - 1)(rng), v, 1});
  }
  for (auto& e : edges) e.sign = random_sign(rng);
  return relabel_randomly(rng, SignedGraph(n, std::move(edges)));
}

}  // namespace sgraph
