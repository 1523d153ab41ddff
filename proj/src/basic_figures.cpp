#include "sgn/basic_figures.hpp"

#include <string>

namespace sgraph {

int BasicFigure::negative_cycle_edges() const noexcept {
  int total = 0;
  for (const auto& c : cycles) total += c.negative_edges;
  return total;
}

long long BasicFigure::contribution() const noexcept {
  long long magnitude = 1LL << cycle_count();
  return ((component_count() + negative_cycle_edges()) % 2 == 0) ? magnitude : -magnitude;
}

namespace {

/// Backtracking walk over every basic figure of a graph. The walker keeps the
/// figure under construction as stacks of matched edges and cycle paths and
/// calls `visit(*this)` once per complete figure.
class FigureWalker {
 public:
  explicit FigureWalker(const SignedGraph& g)
      : g_(g), covered_(static_cast<std::size_t>(g.order()), 0) {}

  /// Restrict emission to figures with exactly `target` vertices; -1 emits all.
  void set_target(int target) { target_ = target; }

  template <class Visit>
  void run(Visit&& visit) {
    step(0, visit);
  }

  int covered_count() const noexcept { return covered_count_; }
  int components() const noexcept { return static_cast<int>(edges_.size() + cycle_ends_.size()); }
  int cycles() const noexcept { return static_cast<int>(cycle_ends_.size()); }
  int negative_cycle_edges() const noexcept { return negative_cycle_edges_; }

  BasicFigure snapshot() const {
    BasicFigure figure;
    figure.edges = edges_;
    std::size_t begin = 0;
    for (std::size_t end : cycle_ends_) {
      figure.cycles.push_back(make_cycle(g_, std::vector<Vertex>(cycle_vertices_.begin() + static_cast<long>(begin),
                                                                  cycle_vertices_.begin() + static_cast<long>(end))));
      begin = end;
    }
    figure.vertex_count = covered_count_;
    return figure;
  }

 private:
  template <class Visit>
  void step(Vertex v, Visit& visit) {
    const int n = g_.order();
    while (v < n && covered_[v]) ++v;
    if (target_ >= 0) {
      if (covered_count_ == target_) {
        visit(*this);
        return;
      }
      int undecided = 0;
      for (Vertex x = v; x < n; ++x) undecided += covered_[x] ? 0 : 1;
      if (covered_count_ + undecided < target_) return;
    }
    if (v == n) {
      if (target_ < 0) visit(*this);
      return;
    }

    // v stays uncovered
    step(v + 1, visit);

    // v matched to a larger neighbor
    for (const auto& nb : g_.neighbors(v)) {
      Vertex u = nb.vertex;
      if (u < v || covered_[u]) continue;
      cover(v);
      cover(u);
      edges_.emplace_back(v, u);
      step(v + 1, visit);
      edges_.pop_back();
      uncover(u);
      uncover(v);
    }

    // v anchors a cycle through larger uncovered vertices
    cover(v);
    path_.assign(1, v);
    path_negatives_ = 0;
    grow_cycle(v, visit);
    uncover(v);
  }

  template <class Visit>
  void grow_cycle(Vertex anchor, Visit& visit) {
    const Vertex tail = path_.back();
    for (const auto& nb : g_.neighbors(tail)) {
      Vertex w = nb.vertex;
      if (w == anchor) {
        if (path_.size() >= 3 && path_[1] < tail) close_cycle(anchor, nb.sign, visit);
        continue;
      }
      if (w < anchor || covered_[w]) continue;
      if (target_ >= 0 && covered_count_ >= target_) continue;
      cover(w);
      path_.push_back(w);
      path_negatives_ += nb.sign < 0 ? 1 : 0;
      grow_cycle(anchor, visit);
      path_negatives_ -= nb.sign < 0 ? 1 : 0;
      path_.pop_back();
      uncover(w);
    }
  }

  template <class Visit>
  void close_cycle(Vertex anchor, int closing_sign, Visit& visit) {
    const int negatives = path_negatives_ + (closing_sign < 0 ? 1 : 0);
    // path_ is reused by nested cycles, so stash this one before recursing.
    const std::vector<Vertex> cycle = path_;
    const int saved_path_negatives = path_negatives_;
    cycle_vertices_.insert(cycle_vertices_.end(), cycle.begin(), cycle.end());
    cycle_ends_.push_back(cycle_vertices_.size());
    negative_cycle_edges_ += negatives;

    step(anchor + 1, visit);

    negative_cycle_edges_ -= negatives;
    cycle_ends_.pop_back();
    cycle_vertices_.resize(cycle_vertices_.size() - cycle.size());
    path_ = cycle;
    path_negatives_ = saved_path_negatives;
  }

  void cover(Vertex v) {
    covered_[v] = 1;
    ++covered_count_;
  }
  void uncover(Vertex v) {
    covered_[v] = 0;
    --covered_count_;
  }

  const SignedGraph& g_;
  std::vector<char> covered_;
  int covered_count_ = 0;
  int target_ = -1;

  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<Vertex> cycle_vertices_;
  std::vector<std::size_t> cycle_ends_;
  int negative_cycle_edges_ = 0;

  std::vector<Vertex> path_;
  int path_negatives_ = 0;
};

}  // namespace

std::vector<BasicFigure> enumerate_basic_figures(const SignedGraph& g, int vertex_count) {
  if (vertex_count < 0 || vertex_count > g.order()) {
    throw std::out_of_range("figure size " + std::to_string(vertex_count) + " outside 0.." +
                            std::to_string(g.order()));
  }
  std::vector<BasicFigure> figures;
  if (vertex_count == 0) {
    figures.emplace_back();
    return figures;
  }
  FigureWalker walker(g);
  walker.set_target(vertex_count);
  walker.run([&](const FigureWalker& w) { figures.push_back(w.snapshot()); });
  return figures;
}

Integer figure_coefficient(const SignedGraph& g, int i) {
  if (i < 1 || i > g.order()) {
    throw std::out_of_range("coefficient index " + std::to_string(i) + " outside 1.." + std::to_string(g.order()));
  }
  Integer sum = 0;
  FigureWalker walker(g);
  walker.set_target(i);
  walker.run([&](const FigureWalker& w) {
    long magnitude = 1L << w.cycles();
    if ((w.components() + w.negative_cycle_edges()) % 2 == 0) {
      sum += magnitude;
    } else {
      sum -= magnitude;
    }
  });
  return sum;
}

CharPoly char_poly_figures(const SignedGraph& g, int guard) {
  if (g.order() > guard) {
    throw SizeGuardError("figure enumeration limited to " + std::to_string(guard) + " vertices, graph has " +
                         std::to_string(g.order()));
  }
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<Integer> coeffs(n + 1);
  FigureWalker walker(g);
  walker.run([&](const FigureWalker& w) {
    long magnitude = 1L << w.cycles();
    auto& slot = coeffs[static_cast<std::size_t>(w.covered_count())];
    if ((w.components() + w.negative_cycle_edges()) % 2 == 0) {
      slot += magnitude;
    } else {
      slot -= magnitude;
    }
  });
  // The empty figure accounts for a_0 = 1.
  return CharPoly(std::move(coeffs));
}

}  // namespace sgraph
