#pragma once

// Slow, obviously-correct reference computations used only by tests.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "sgn/signed_graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<long long>>;

inline Matrix dense(const sgraph::SignedGraph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  Matrix a(n, std::vector<long long>(n, 0));
  for (const auto& e : g.edges()) {
    a[e.u][e.v] = e.sign;
    a[e.v][e.u] = e.sign;
  }
  return a;
}

/// Sum over permutations of sign(pi) * prod a[i][pi(i)].
inline long long leibniz(const Matrix& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long long total = 0;
  do {
    long long term = 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= a[i][perm[i]];
    if (term == 0) continue;
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    total += inversions % 2 == 0 ? term : -term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// a_i = (-1)^i times the sum of the principal i x i minors.
inline std::vector<long long> charpoly_by_minors(const Matrix& a) {
  const std::size_t n = a.size();
  std::vector<long long> coeffs(n + 1, 0);
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) rows.push_back(i);
    }
    Matrix sub(rows.size(), std::vector<long long>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < rows.size(); ++j) sub[i][j] = a[rows[i]][rows[j]];
    }
    const long long minor = rows.empty() ? 1 : leibniz(sub);
    coeffs[rows.size()] += rows.size() % 2 == 0 ? minor : -minor;
  }
  return coeffs;
}

/// Gaussian elimination over the rationals.
inline std::size_t rational_rank(const Matrix& a) {
  if (a.empty()) return 0;
  std::vector<std::vector<mpq_class>> m(a.size(), std::vector<mpq_class>(a[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) m[i][j] = static_cast<long>(a[i][j]);
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m[0].size() && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const mpq_class f = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

inline int nullity(const sgraph::SignedGraph& g) {
  return g.order() - static_cast<int>(rational_rank(dense(g)));
}

/// Balanced iff some vertex signing makes every edge positive.
inline bool balanced_by_search(const sgraph::SignedGraph& g) {
  const int n = g.order();
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    bool ok = true;
    for (const auto& e : g.edges()) {
      const int tu = ((mask >> e.u) & 1U) ? -1 : 1;
      const int tv = ((mask >> e.v) & 1U) ? -1 : 1;
      if (tu * e.sign * tv < 0) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

/// Equivalent iff some switching maps one signature onto the other.
inline bool equivalent_by_search(const sgraph::SignedGraph& a, const sgraph::SignedGraph& b) {
  if (!a.same_underlying(b)) return false;
  const int n = a.order();
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    bool ok = true;
    for (const auto& e : a.edges()) {
      const int tu = ((mask >> e.u) & 1U) ? -1 : 1;
      const int tv = ((mask >> e.v) & 1U) ? -1 : 1;
      if (tu * e.sign * tv != b.sign(e.u, e.v)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

/// Components by repeated relaxation over the edge list.
inline int component_count(int n, const std::vector<sgraph::Edge>& edges) {
  std::vector<int> label(static_cast<std::size_t>(n));
  std::iota(label.begin(), label.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& e : edges) {
      const int low = std::min(label[e.u], label[e.v]);
      if (label[e.u] != low || label[e.v] != low) {
        label[e.u] = label[e.v] = low;
        changed = true;
      }
    }
  }
  std::sort(label.begin(), label.end());
  return static_cast<int>(std::unique(label.begin(), label.end()) - label.begin());
}

/// Random simple signed graph, not necessarily connected.
inline sgraph::SignedGraph random_graph(std::mt19937_64& rng, int n, double density) {
  std::vector<sgraph::Edge> edges;
  std::bernoulli_distribution coin(density);
  std::bernoulli_distribution sign(0.5);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v, sign(rng) ? -1 : 1});
    }
  }
  return sgraph::SignedGraph(n, std::move(edges));
}

}  // namespace oracle
