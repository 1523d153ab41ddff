// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sgn/basic_figures.hpp"
#include "sgn/closed_forms.hpp"
#include "sgn/corpus.hpp"
#include "sgn/exact_matrix.hpp"
#include "sgn/families.hpp"
#include "sgn/reduction.hpp"
#include "sgn/verify.hpp"

using namespace sgraph;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool condition, const std::string& what) {
    if (!condition && ok) detail << what;
    ok = ok && condition;
  }
  void suite(const std::string& id, const VerifyOptions& options) {
    const auto report = run_verification(id, options);
    detail << id << " " << report.cases_checked << " cases; ";
    if (!report.passed()) {
      const auto& f = report.failures.front();
      expect(false, id + " failed at " + f.key + ": expected " + f.expected + ", got " + f.got + "; ");
    }
  }
};

VerifyOptions range(int lo, int hi, std::optional<int> samples = std::nullopt) {
  VerifyOptions o;
  o.n_min = lo;
  o.n_max = hi;
  o.samples = samples;
  return o;
}

void coefficient_theorem(Outcome& out) { out.suite("cor2.1", range(1, 6, 500)); }

void cycle_and_path(Outcome& out) {
  for (int n = 3; n <= 20; ++n) {
    for (int s = 0; s <= 1; ++s) {
      const int got = nullity_rank(gen_cycle(n, s));
      out.expect(nullity_cycle(n, s) == got, "C" + std::to_string(n) + " s=" + std::to_string(s) + "; ");
      const bool two = (n % 4 == 0 && s == 0) || (n % 4 == 2 && s == 1);
      out.expect(got == (two ? 2 : 0), "table row for C" + std::to_string(n) + "; ");
    }
  }
  for (int n = 1; n <= 20; ++n) {
    out.expect(nullity_path(n) == nullity_rank(gen_path(n)) && nullity_path(n) == n % 2, "P" + std::to_string(n) + "; ");
  }
  out.detail << "36 cycles, 20 paths";
}

void infinity_formula(Outcome& out) {
  int exact = 0, bounded = 0;
  for (int p = 3; p <= 8; ++p) {
    for (int q = 3; q <= 8; ++q) {
      for (int l = 1; l <= 5; ++l) {
        for (int sp = 0; sp <= 1; ++sp) {
          for (int sq = 0; sq <= 1; ++sq) {
            const InfinitySpec spec{p, q, l, sp, sq};
            const auto r = nullity_infinity(spec, false);
            const int eta = nullity_rank(gen_infinity(p, q, l, sp, sq));
            const std::string key = "inf(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(l) +
                                    "," + std::to_string(sp) + "," + std::to_string(sq) + "); ";
            if (r.is_exact()) {
              ++exact;
              out.expect(*r.exact == eta, key);
            } else {
              ++bounded;
              out.expect(eta >= *r.lower_bound && *r.lower_bound == 1, key);
            }
          }
        }
      }
    }
  }
  out.expect(nullity_rank(gen_infinity(3, 4, 2, 1, 0)) == 1, "inf(3,4,2) != 1; ");
  out.expect(nullity_infinity({3, 4, 2, 1, 0}).exact == 1, "formula inf(3,4,2) != 1; ");
  const std::vector<std::pair<InfinitySpec, int>> even{
      {{4, 4, 1, 0, 0}, 3}, {{4, 4, 1, 1, 0}, 1}, {{4, 4, 2, 0, 1}, 2}, {{4, 4, 2, 1, 1}, 0}};
  for (const auto& [spec, value] : even) {
    out.expect(nullity_infinity(spec).exact == value, "even case value " + std::to_string(value) + "; ");
    out.expect(nullity_rank(gen_infinity(spec.p, spec.q, spec.l, spec.sp, spec.sq)) == value,
               "even case rank " + std::to_string(value) + "; ");
  }
  out.detail << exact << " exact, " << bounded << " bounded";
}

void cut_points_and_pendants(Outcome& out) {
  for (const char* id : {"thm3.1", "thm3.2", "pendant"}) out.suite(id, range(1, 7));
  std::size_t graphs = 0;
  for_each_corpus_graph(7, [&](const SignedGraph& g, const CorpusTag& tag) {
    ++graphs;
    out.expect(nullity_structural(g).result_nullity == nullity_rank(g), "structural at " + tag.key() + "; ");
  });
  out.detail << graphs << " structural";
}

void three_way_agreement(Outcome& out) { out.suite("nullity.agree", range(1, 7, 1000)); }

void figure_goldens(Outcome& out) {
  auto eta = [](FigureId id, int n = 0, std::optional<FigureParities> parities = std::nullopt) {
    return nullity_rank(gen_figure(id, n, 0, parities));
  };
  for (auto id : {FigureId::H1, FigureId::H2, FigureId::H4, FigureId::H5, FigureId::H8}) {
    out.expect(eta(id) == 0, std::string(to_string(id)) + "; ");
  }
  for (auto id : {FigureId::H6, FigureId::H7, FigureId::H9}) out.expect(eta(id) == 1, std::string(to_string(id)) + "; ");
  for (auto id : {FigureId::H11, FigureId::H12}) out.expect(eta(id) == 2, std::string(to_string(id)) + "; ");
  for (int other = 0; other <= 1; ++other) {
    out.expect(eta(FigureId::H10, 0, FigureParities{0, other}) == 2, "H10 balanced; ");
    out.expect(eta(FigureId::H10, 0, FigureParities{1, other}) == 0, "H10 unbalanced; ");
  }
  out.expect(eta(FigureId::H13, 0, FigureParities{1, 1}) == 0, "H13 unbalanced pair; ");
  out.expect(eta(FigureId::H13, 0, FigureParities{0, 0}) == 0, "H13 balanced pair; ");
  for (int n = 7; n <= 14; ++n) {
    out.expect(eta(FigureId::G1, n) == n - 6, "G1 n=" + std::to_string(n) + "; ");
    out.expect(eta(FigureId::G3, n) == n - 6, "G3 n=" + std::to_string(n) + "; ");
  }
  for (int n = 5; n <= 14; ++n) out.expect(eta(FigureId::G6, n) == n - 4, "G6 n=" + std::to_string(n) + "; ");
  out.detail << "H1-H13, G1/G3 n=7..14, G6 n=5..14";
}

void nullity_sets(Outcome& out) {
  out.suite("set.bplus", range(8, 12));
  out.suite("set.bplusplus", range(8, 12));
  out.suite("set.theta", range(8, 12));
}

void bounds_and_extremal(Outcome& out) {
  out.suite("lem5.2", range(4, 6));
  out.suite("bounds.bplus", range(7, 9, 10000));
  out.suite("bounds.bplusplus", range(8, 9, 10000));
}

bool same_cycle_signs(const SignedGraph& g, const SignedGraph& h) {
  const auto a = find_cycles(g, 10);
  const auto b = find_cycles(h, 10);
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].vertices != b[i].vertices || a[i].sign != b[i].sign) return false;
  }
  return true;
}

void switching_invariance(Outcome& out) {
  std::mt19937_64 rng(0x5eed2013);
  for (int t = 0; t < 1000; ++t) {
    const int n = 2 + t % 11;
    const auto g = random_signed_graph(rng, n, n <= 6 ? 0.4 : 0.15);
    const auto h = apply_switching(g, random_switching(rng, n));
    const std::string key = "pair " + std::to_string(t) + "; ";
    out.expect(nullity_rank(g) == nullity_rank(h), "nullity " + key);
    out.expect(rank(adjacency_matrix(g)) == rank(adjacency_matrix(h)), "rank " + key);
    if (g.cyclomatic_number() <= 10) out.expect(same_cycle_signs(g, h), "cycle signs " + key);
    const auto c = canonical_signature(g);
    out.expect(canonical_signature(c) == c, "idempotence " + key);
    out.expect(canonical_signature(h) == c, "invariance " + key);
  }
  out.detail << "1000 pairs";
}

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "coefficient theorem", 120, coefficient_theorem},
      {2, "cycle and path closed forms", 1, cycle_and_path},
      {3, "infinity graph formula", 10, infinity_formula},
      {4, "cut-point theorems and pendant lemma", 300, cut_points_and_pendants},
      {5, "three-way nullity agreement", 180, three_way_agreement},
      {6, "figure-graph goldens", 1, figure_goldens},
      {7, "nullity sets", 30, nullity_sets},
      {8, "upper bounds and extremal case", 600, bounds_and_extremal},
      {9, "switching invariance", 30, switching_invariance},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_seconds) out.expect(false, "over the time limit; ");
    failed += out.ok ? 0 : 1;
    std::printf("[%s] %d %s (%.2f s, limit %.0f s): %s\n", out.ok ? "PASS" : "FAIL", c.number, c.name, seconds,
                c.limit_seconds, out.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
