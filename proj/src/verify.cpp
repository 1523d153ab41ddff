#include "sgn/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "sgn/basic_figures.hpp"
#include "sgn/closed_forms.hpp"
#include "sgn/corpus.hpp"
#include "sgn/exact_matrix.hpp"
#include "sgn/families.hpp"
#include "sgn/reduction.hpp"

namespace sgraph {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

json graph_json(const SignedGraph& g) { return json::parse(to_json(g)); }

class Recorder {
 public:
  Recorder(std::string id, bool record) : record_(record), start_(Clock::now()) { report_.theorem_id = std::move(id); }

  void grid(std::string text) { report_.parameter_grid = std::move(text); }
  void note(std::string text) { report_.notes.push_back(std::move(text)); }

  /// One checked case. `input` must be enough to replay it.
  bool check(bool ok, const std::string& key, const json& input, const json& expected, const json& got) {
    ++report_.cases_checked;
    if (!ok) report_.failures.push_back({key, input.dump(), expected.dump(), got.dump()});
    if (record_) {
      json detail{{"expected", expected}, {"got", got}};
      if (!ok) detail["input"] = input;
      report_.cases.push_back({key, ok, detail.dump()});
    }
    return ok;
  }

  VerificationReport finish() {
    report_.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    auto by_key = [](const auto& a, const auto& b) { return a.key < b.key; };
    std::stable_sort(report_.cases.begin(), report_.cases.end(), by_key);
    std::stable_sort(report_.failures.begin(), report_.failures.end(), by_key);
    return std::move(report_);
  }

 private:
  bool record_;
  Clock::time_point start_;
  VerificationReport report_;
};

struct Range {
  int lo;
  int hi;
};

Range resolve_range(const VerifyOptions& o, std::string_view id, int lo_default, int hi_default, int lo_limit,
                    int hi_limit) {
  Range r{o.n_min.value_or(lo_default), o.n_max.value_or(hi_default)};
  if (r.lo < lo_limit || r.hi > hi_limit || r.lo > r.hi) {
    throw std::invalid_argument(std::string(id) + " supports " + std::to_string(lo_limit) + " <= n <= " +
                                std::to_string(hi_limit) + ", got " + std::to_string(r.lo) + ".." +
                                std::to_string(r.hi));
  }
  return r;
}

std::string range_text(const Range& r) { return std::to_string(r.lo) + ".." + std::to_string(r.hi); }

std::string pad(std::size_t value, int width) {
  std::string text = std::to_string(value);
  return std::string(static_cast<std::size_t>(std::max(0, width - static_cast<int>(text.size()))), '0') + text;
}

std::string sample_key(std::size_t i) { return "R" + pad(i, 6); }

json poly_json(const CharPoly& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.get_str());
  return out;
}

/// Corpus graphs restricted to an order range.
void for_each_in_range(const Range& r, const std::function<void(const SignedGraph&, const CorpusTag&)>& visit) {
  for_each_corpus_graph(r.hi, [&](const SignedGraph& g, const CorpusTag& tag) {
    if (tag.n >= r.lo) visit(g, tag);
  });
}

/// Bicyclic graphs on n vertices with one signature per switching class:
/// labeled underlying graphs up to the labeled limit, unlabeled beyond.
void for_each_bicyclic(int n, const std::function<void(const SignedGraph&, const std::string&)>& visit) {
  std::vector<SignedGraph> underlying;
  std::string prefix;
  if (n <= kLabeledLimit) {
    for (auto& g : labeled_connected_graphs(n)) {
      if (g.size() == g.order() + 1) underlying.push_back(std::move(g));
    }
    prefix = "L";
  } else {
    underlying = unlabeled_bicyclic_graphs(n);
    prefix = "U";
  }
  for (std::size_t i = 0; i < underlying.size(); ++i) {
    const auto classes = switching_classes(underlying[i]);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      visit(classes[c], prefix + std::to_string(n) + ".g" + pad(i, 4) + ".c" + std::to_string(c));
    }
  }
}

int vertex_count_for(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

double density_for(std::mt19937_64& rng) { return std::uniform_real_distribution<double>(0.1, 0.5)(rng); }

// ---------------------------------------------------------------------------

VerificationReport verify_cor21(const VerifyOptions& o) {
  const Range r = resolve_range(o, "cor2.1", 1, kLabeledLimit, 1, kUnlabeledLimit);
  const int samples = o.samples.value_or(500);
  Recorder rec("cor2.1", o.record_cases);
  rec.grid("corpus n " + range_text(r) + " (all switching classes); " + std::to_string(samples) +
           " random signed graphs 7 <= n <= 10");
  auto check = [&](const SignedGraph& g, const std::string& key) {
    const CharPoly figures = char_poly_figures(g);
    const CharPoly exact = char_poly(adjacency_matrix(g));
    rec.check(figures == exact, key, graph_json(g), poly_json(exact), poly_json(figures));
  };
  for_each_in_range(r, [&](const SignedGraph& g, const CorpusTag& tag) { check(g, tag.key()); });
  std::mt19937_64 rng(o.seed);
  for (int i = 0; i < samples; ++i) {
    const int n = vertex_count_for(rng, 7, 10);
    check(random_signed_graph(rng, n, density_for(rng)), sample_key(static_cast<std::size_t>(i)));
  }
  return rec.finish();
}

VerificationReport verify_thm22(const VerifyOptions& o) {
  const Range r = resolve_range(o, "thm2.2", 3, 20, 3, 200);
  Recorder rec("thm2.2", o.record_cases);
  rec.grid("cycles n " + range_text(r) + ", negative-edge parity s in {0,1}");
  for (int n = r.lo; n <= r.hi; ++n) {
    for (int s = 0; s <= 1; ++s) {
      const int formula = nullity_cycle(n, s);
      const int oracle = nullity_rank(gen_cycle(n, s));
      rec.check(formula == oracle, "C" + pad(static_cast<std::size_t>(n), 3) + ".s" + std::to_string(s),
                json{{"family", "cycle"}, {"n", n}, {"s", s}}, formula, oracle);
    }
  }
  return rec.finish();
}

VerificationReport verify_prop21(const VerifyOptions& o) {
  const Range r = resolve_range(o, "prop2.1", 1, 20, 1, 200);
  Recorder rec("prop2.1", o.record_cases);
  rec.grid("paths n " + range_text(r));
  for (int n = r.lo; n <= r.hi; ++n) {
    const int formula = nullity_path(n);
    const int oracle = nullity_rank(gen_path(n));
    rec.check(formula == oracle, "P" + pad(static_cast<std::size_t>(n), 3), json{{"family", "path"}, {"n", n}}, formula,
              oracle);
  }
  return rec.finish();
}

VerificationReport verify_lem31(const VerifyOptions& o) {
  const Range r = resolve_range(o, "lem3.1", 2, 6, 2, kUnlabeledLimit);
  Recorder rec("lem3.1", o.record_cases);
  rec.grid("disjoint unions of two corpus graphs with total order " + range_text(r));
  std::vector<std::pair<SignedGraph, std::string>> pool;
  for_each_corpus_graph(r.hi - 1, [&](const SignedGraph& g, const CorpusTag& tag) { pool.emplace_back(g, tag.key()); });
  for (const auto& [a, ka] : pool) {
    for (const auto& [b, kb] : pool) {
      const int n = a.order() + b.order();
      if (n < r.lo || n > r.hi) continue;
      std::vector<Edge> edges(a.edges().begin(), a.edges().end());
      for (const auto& e : b.edges()) edges.push_back({e.u + a.order(), e.v + a.order(), e.sign});
      const SignedGraph u(n, std::move(edges));
      const auto parts = components(u);
      std::size_t rank_sum = 0;
      int eta_sum = 0;
      for (const auto& part : parts) {
        rank_sum += rank(adjacency_matrix(part.graph));
        eta_sum += nullity_rank(part.graph);
      }
      const std::size_t rank_u = rank(adjacency_matrix(u));
      const int eta_u = nullity_rank(u);
      const bool parts_ok = parts.size() == 2 && parts[0].graph == a && parts[1].graph == b;
      rec.check(parts_ok && rank_u == rank_sum && eta_u == eta_sum, ka + "+" + kb, json{{"graph", graph_json(u)}},
                json{{"rank", rank_sum}, {"nullity", eta_sum}, {"components", 2}},
                json{{"rank", rank_u}, {"nullity", eta_u}, {"components", parts.size()}});
    }
  }
  return rec.finish();
}

/// Every (cut-point, component) pair of g with the nullities the cut-point
/// theorems talk about.
struct CutPointTriple {
  Vertex v;
  std::size_t index;
  std::vector<Vertex> part;  // labels in g
  int eta_part;
  int eta_part_plus_v;
};

std::vector<CutPointTriple> cut_point_triples(const SignedGraph& g, std::vector<int>& eta_parts_out, Vertex v) {
  const std::array<Vertex, 1> removed{v};
  const Subgraph rest = delete_vertices(g, removed);
  std::vector<CutPointTriple> out;
  eta_parts_out.clear();
  std::size_t index = 0;
  for (const auto& piece : components(rest.graph)) {
    std::vector<Vertex> labels;
    for (Vertex x : piece.origin) labels.push_back(rest.origin[x]);
    std::vector<Vertex> with_v = labels;
    with_v.push_back(v);
    const int eta_part = nullity_rank(piece.graph);
    eta_parts_out.push_back(eta_part);
    out.push_back({v, index++, labels, eta_part, nullity_rank(induced_subgraph(g, with_v).graph)});
  }
  return out;
}

VerificationReport verify_cutpoint(const VerifyOptions& o, bool case1) {
  const std::string id = case1 ? "thm3.1" : "thm3.2";
  const Range r = resolve_range(o, id, 3, kUnlabeledLimit, 1, kUnlabeledLimit);
  Recorder rec(id, o.record_cases);
  rec.grid(std::string("corpus n ") + range_text(r) + ", every cut-point v and component G1 of G - v with eta(G1) = " +
           (case1 ? "eta(G1 + v) + 1" : "eta(G1 + v) - 1"));
  std::vector<int> eta_parts;
  for_each_in_range(r, [&](const SignedGraph& g, const CorpusTag& tag) {
    if (g.order() < 3) return;
    const int eta_g = nullity_rank(g);
    for (Vertex v : cut_points(g)) {
      for (const auto& t : cut_point_triples(g, eta_parts, v)) {
        const std::string key = tag.key() + ".v" + std::to_string(v) + ".p" + std::to_string(t.index);
        const json input{{"graph", graph_json(g)}, {"cut_point", v}, {"component", t.part}};
        if (case1 && t.eta_part == t.eta_part_plus_v + 1) {
          int expected = -1;
          for (int e : eta_parts) expected += e;
          rec.check(eta_g == expected, key, input, expected, eta_g);
        } else if (!case1 && t.eta_part == t.eta_part_plus_v - 1) {
          const int expected = t.eta_part + nullity_rank(delete_vertices(g, t.part).graph);
          rec.check(eta_g == expected, key, input, expected, eta_g);
        }
      }
    }
  });
  return rec.finish();
}

VerificationReport verify_pendant(const VerifyOptions& o) {
  const Range r = resolve_range(o, "pendant", 2, kUnlabeledLimit, 1, kUnlabeledLimit);
  Recorder rec("pendant", o.record_cases);
  rec.grid("corpus n " + range_text(r) + ", every pendant vertex");
  for_each_in_range(r, [&](const SignedGraph& g, const CorpusTag& tag) {
    const auto pendants = pendant_pairs(g);
    if (pendants.empty()) return;
    const int eta_g = nullity_rank(g);
    for (const auto& [leaf, nb] : pendants) {
      const std::array<Vertex, 2> removed{leaf, nb};
      const int eta_h = nullity_rank(delete_vertices(g, removed).graph);
      rec.check(eta_g == eta_h, tag.key() + ".v" + std::to_string(leaf),
                json{{"graph", graph_json(g)}, {"pendant", leaf}}, eta_h, eta_g);
    }
  });
  return rec.finish();
}

VerificationReport verify_agreement(const VerifyOptions& o) {
  const Range r = resolve_range(o, "nullity.agree", 1, kUnlabeledLimit, 1, kUnlabeledLimit);
  const int samples = o.samples.value_or(1000);
  Recorder rec("nullity.agree", o.record_cases);
  rec.grid("corpus n " + range_text(r) + "; " + std::to_string(samples) + " random signed graphs 1 <= n <= 12");
  auto check = [&](const SignedGraph& g, const std::string& key) {
    const int by_rank = nullity_rank(g);
    const int by_poly = nullity_charpoly(g);
    const auto trace = nullity_structural(g);
    const auto problem = check_trace(trace);
    rec.check(by_rank == by_poly && by_rank == trace.result_nullity && !problem, key, graph_json(g), by_rank,
              json{{"charpoly", by_poly}, {"structural", trace.result_nullity}, {"trace", problem.value_or("ok")}});
  };
  for_each_in_range(r, [&](const SignedGraph& g, const CorpusTag& tag) { check(g, tag.key()); });
  std::mt19937_64 rng(o.seed);
  for (int i = 0; i < samples; ++i) {
    const int n = vertex_count_for(rng, 1, 12);
    check(random_signed_graph(rng, n, density_for(rng)), sample_key(static_cast<std::size_t>(i)));
  }
  return rec.finish();
}

VerificationReport verify_thm41(const VerifyOptions& o) {
  const Range r = resolve_range(o, "thm4.1", 3, 8, 3, 30);
  Recorder rec("thm4.1", o.record_cases);
  rec.grid("p, q in " + range_text(r) + ", l in 1..5, sp, sq in {0,1}; each case also under a random switching");
  std::mt19937_64 rng(o.seed);
  for (int p = r.lo; p <= r.hi; ++p) {
    for (int q = r.lo; q <= r.hi; ++q) {
      for (int l = 1; l <= 5; ++l) {
        for (int sp = 0; sp <= 1; ++sp) {
          for (int sq = 0; sq <= 1; ++sq) {
            const InfinitySpec spec{p, q, l, sp, sq};
            const SignedGraph g = gen_infinity(p, q, l, sp, sq);
            const int oracle = nullity_rank(g);
            const int switched = nullity_rank(apply_switching(g, random_switching(rng, g.order())));
            const NullityResult formula = nullity_infinity(spec);
            const std::string key = "p" + std::to_string(p) + ".q" + std::to_string(q) + ".l" + std::to_string(l) +
                                    ".sp" + std::to_string(sp) + ".sq" + std::to_string(sq);
            const json input{{"family", "infinity"}, {"p", p}, {"q", q}, {"l", l}, {"sp", sp}, {"sq", sq}};
            if (formula.exact) {
              rec.check(*formula.exact == oracle && switched == oracle, key, input,
                        json{{"exact", *formula.exact}}, json{{"oracle", oracle}, {"switched", switched}});
            } else {
              rec.check(oracle >= *formula.lower_bound && formula.resolved == oracle && switched == oracle, key,
                        input, json{{"at_least", *formula.lower_bound}},
                        json{{"oracle", oracle}, {"switched", switched}});
            }
          }
        }
      }
    }
  }
  return rec.finish();
}

VerificationReport verify_lem51(const VerifyOptions& o) {
  Recorder rec("lem5.1", o.record_cases);
  rec.grid("H13 with every pair of triangle parities");
  for (int s1 = 0; s1 <= 1; ++s1) {
    for (int s2 = 0; s2 <= 1; ++s2) {
      const SignedGraph g = gen_figure(FigureId::H13, 0, 0, FigureParities{s1, s2});
      const int oracle = nullity_rank(g);
      // Equal balanceness is the lemma; unequal is covered by the infinity formula.
      const int expected = s1 == s2 ? 0 : *nullity_infinity({3, 3, 1, s1, s2}).exact;
      rec.check(oracle == expected, "H13.s" + std::to_string(s1) + std::to_string(s2),
                json{{"figure", "H13"}, {"s1", s1}, {"s2", s2}, {"graph", graph_json(g)}}, expected, oracle);
    }
  }
  return rec.finish();
}

VerificationReport verify_lem52(const VerifyOptions& o) {
  const Range r = resolve_range(o, "lem5.2", 4, kLabeledLimit, 4, kBicyclicLimit);
  Recorder rec("lem5.2", o.record_cases);
  rec.grid("unbalanced connected bicyclic graphs n " + range_text(r) +
           " (labeled up to 6, unlabeled beyond), one signature per switching class");
  for (int n = r.lo; n <= r.hi; ++n) {
    for_each_bicyclic(n, [&](const SignedGraph& g, const std::string& key) {
      if (is_balanced(g).balanced) return;
      const int eta = nullity_rank(g);
      const bool extremal = is_max_nullity_extremal(g);
      rec.check(eta <= n - 3 && (eta == n - 3) == extremal, key, graph_json(g),
                json{{"at_most", n - 3}, {"equality", extremal}}, json{{"nullity", eta}});
    });
  }
  return rec.finish();
}

VerificationReport verify_bounds(const VerifyOptions& o, BicyclicClass cls) {
  const std::string id = cls == BicyclicClass::BPlus       ? "bounds.bplus"
                         : cls == BicyclicClass::BPlusPlus ? "bounds.bplusplus"
                                                           : "bounds.theta";
  const BoundClass bound = cls == BicyclicClass::BPlus       ? BoundClass::BPlus
                           : cls == BicyclicClass::BPlusPlus ? BoundClass::BPlusPlus
                                                             : BoundClass::ThetaUnbalanced;
  const bool unbalanced_only = cls == BicyclicClass::Theta;
  const int threshold = upper_bound_threshold(bound);
  const Range r = resolve_range(o, id, threshold, kBicyclicLimit, threshold, kBicyclicLimit);
  const int samples = o.samples.value_or(cls == BicyclicClass::Theta ? 2000 : 10000);
  Recorder rec(id, o.record_cases);
  rec.grid(std::string(unbalanced_only ? "unbalanced " : "") + std::string(to_string(cls)) + " graphs n " +
           range_text(r) + ": every underlying graph x switching class, plus " + std::to_string(samples) +
           " random skeletons with trees attached");
  auto check = [&](const SignedGraph& g, const std::string& key) {
    if (classify_bicyclic(g) != cls) return;
    if (unbalanced_only && is_balanced(g).balanced) return;
    const int limit = upper_bound(bound, g.order());
    const int eta = nullity_rank(g);
    rec.check(eta <= limit, key, graph_json(g), json{{"at_most", limit}}, eta);
  };
  for (int n = r.lo; n <= r.hi; ++n) {
    for_each_bicyclic(n, [&](const SignedGraph& g, const std::string& key) { check(g, key); });
  }
  std::mt19937_64 rng(o.seed);
  for (int i = 0; i < samples; ++i) {
    const int n = r.lo + i % (r.hi - r.lo + 1);
    check(random_bicyclic(rng, cls, n), sample_key(static_cast<std::size_t>(i)));
  }
  return rec.finish();
}

VerificationReport verify_set(const VerifyOptions& o, BicyclicClass cls) {
  const std::string id = cls == BicyclicClass::BPlus       ? "set.bplus"
                         : cls == BicyclicClass::BPlusPlus ? "set.bplusplus"
                                                           : "set.theta";
  const int lowest = cls == BicyclicClass::BPlus ? 7 : cls == BicyclicClass::BPlusPlus ? 8 : 6;
  const int gap = cls == BicyclicClass::Theta ? 4 : 6;
  const Range r = resolve_range(o, id, lowest, 12, lowest, 40);
  Recorder rec(id, o.record_cases);
  rec.grid("n " + range_text(r) + ", every k in 0..n-" + std::to_string(gap));
  for (int n = r.lo; n <= r.hi; ++n) {
    std::set<int> seen;
    for (int k = 0; k <= n - gap; ++k) {
      const std::string key = "n" + pad(static_cast<std::size_t>(n), 2) + ".k" + pad(static_cast<std::size_t>(k), 2);
      const json input{{"class", to_string(cls)}, {"n", n}, {"k", k}};
      const SignedGraph g = realize_nullity(cls, n, k);
      const int eta = nullity_rank(g);
      const bool unbalanced = !is_balanced(g).balanced;
      const bool in_class = classify_bicyclic(g) == cls;
      if (rec.check(eta == k && unbalanced && in_class && g.order() == n, key, input,
                    json{{"nullity", k}, {"unbalanced", true}, {"in_class", true}},
                    json{{"nullity", eta}, {"unbalanced", unbalanced}, {"in_class", in_class}, {"graph", graph_json(g)}})) {
        seen.insert(eta);
      }
    }
    if (static_cast<int>(seen.size()) != n - gap + 1) {
      rec.note("n=" + std::to_string(n) + ": only " + std::to_string(seen.size()) + " values realized");
    }
  }
  return rec.finish();
}

std::string set_text(const std::set<int>& values) {
  std::string out = "{";
  for (int v : values) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

VerificationReport verify_set_bicyclic(const VerifyOptions& o) {
  const Range r = resolve_range(o, "set.bicyclic", 4, kBicyclicLimit, 4, kBicyclicLimit);
  Recorder rec("set.bicyclic", o.record_cases);
  rec.grid("all connected bicyclic graphs n " + range_text(r) +
           " x switching classes; for n >= 8 both nullity sets must be 0..n-4");
  for (int n = r.lo; n <= r.hi; ++n) {
    std::set<int> all;
    std::set<int> unbalanced;
    std::size_t graphs = 0;
    for_each_bicyclic(n, [&](const SignedGraph& g, const std::string&) {
      const int eta = nullity_rank(g);
      all.insert(eta);
      if (!is_balanced(g).balanced) unbalanced.insert(eta);
      ++graphs;
    });
    std::set<int> expected;
    for (int k = 0; k <= n - 4; ++k) expected.insert(k);
    const json got{{"all", set_text(all)}, {"unbalanced", set_text(unbalanced)}, {"graphs", graphs}};
    if (n >= 8) {
      rec.check(all == expected && unbalanced == expected, "n" + std::to_string(n), json{{"n", n}},
                json{{"all", set_text(expected)}, {"unbalanced", set_text(expected)}}, got);
    } else {
      rec.note("n=" + std::to_string(n) + ": all " + set_text(all) + ", unbalanced " + set_text(unbalanced) + " over " +
               std::to_string(graphs) + " signed graphs");
    }
  }
  return rec.finish();
}

using Suite = std::function<VerificationReport(const VerifyOptions&)>;

const std::map<std::string, Suite, std::less<>>& suites() {
  static const std::map<std::string, Suite, std::less<>> table{
      {"cor2.1", verify_cor21},
      {"thm2.2", verify_thm22},
      {"prop2.1", verify_prop21},
      {"lem3.1", verify_lem31},
      {"thm3.1", [](const VerifyOptions& o) { return verify_cutpoint(o, true); }},
      {"thm3.2", [](const VerifyOptions& o) { return verify_cutpoint(o, false); }},
      {"pendant", verify_pendant},
      {"thm4.1", verify_thm41},
      {"lem5.1", verify_lem51},
      {"lem5.2", verify_lem52},
      {"bounds.bplus", [](const VerifyOptions& o) { return verify_bounds(o, BicyclicClass::BPlus); }},
      {"bounds.bplusplus", [](const VerifyOptions& o) { return verify_bounds(o, BicyclicClass::BPlusPlus); }},
      {"bounds.theta", [](const VerifyOptions& o) { return verify_bounds(o, BicyclicClass::Theta); }},
      {"set.bplus", [](const VerifyOptions& o) { return verify_set(o, BicyclicClass::BPlus); }},
      {"set.bplusplus", [](const VerifyOptions& o) { return verify_set(o, BicyclicClass::BPlusPlus); }},
      {"set.theta", [](const VerifyOptions& o) { return verify_set(o, BicyclicClass::Theta); }},
      {"set.bicyclic", verify_set_bicyclic},
      {"nullity.agree", verify_agreement},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{
      "cor2.1",       "thm2.2",           "prop2.1",      "lem3.1",    "thm3.1",        "thm3.2",
      "pendant",      "thm4.1",           "lem5.1",       "lem5.2",    "bounds.bplus",  "bounds.bplusplus",
      "bounds.theta", "set.bplus",        "set.bplusplus", "set.theta", "set.bicyclic", "nullity.agree",
  };
  return ids;
}

VerificationReport run_verification(std::string_view theorem_id, const VerifyOptions& options) {
  const auto& table = suites();
  auto it = table.find(theorem_id);
  if (it == table.end()) throw std::invalid_argument("unknown theorem id '" + std::string(theorem_id) + "'");
  return it->second(options);
}

std::string report_to_json_lines(const VerificationReport& report) {
  std::string out;
  for (const auto& c : report.cases) {
    json line{{"case", c.key}, {"ok", c.passed}, {"detail", json::parse(c.detail)}};
    out += line.dump() + "\n";
  }
  json failures = json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"case", f.key},
                        {"input", json::parse(f.input)},
                        {"expected", json::parse(f.expected)},
                        {"got", json::parse(f.got)}});
  }
  json summary{{"theorem", report.theorem_id},
               {"grid", report.parameter_grid},
               {"cases_checked", report.cases_checked},
               {"failures", failures},
               {"notes", report.notes},
               {"status", report.passed() ? "pass" : "fail"}};
  out += summary.dump() + "\n";
  return out;
}

std::string report_summary(const VerificationReport& report) {
  std::ostringstream out;
  out << report.theorem_id << ": " << (report.passed() ? "PASS" : "FAIL") << ", " << report.cases_checked
      << " cases, " << report.failures.size() << " failures, " << report.elapsed_seconds << " s\n";
  out << "  grid: " << report.parameter_grid << "\n";
  for (const auto& note : report.notes) out << "  note: " << note << "\n";
  for (std::size_t i = 0; i < std::min<std::size_t>(report.failures.size(), 5); ++i) {
    const auto& f = report.failures[i];
    out << "  failure " << f.key << ": expected " << f.expected << ", got " << f.got << "\n";
  }
  return out.str();
}

}  // namespace sgraph
