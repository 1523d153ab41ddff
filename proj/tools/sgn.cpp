// sgn: nullity, characteristic polynomials and theorem sweeps for signed graphs.

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sgn/basic_figures.hpp"
#include "sgn/exact_matrix.hpp"
#include "sgn/families.hpp"
#include "sgn/reduction.hpp"
#include "sgn/signed_graph.hpp"
#include "sgn/verify.hpp"

namespace {

using namespace sgraph;

enum Exit { kOk = 0, kUsage = 1, kFailed = 2, kInconsistent = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

SignedGraph parse_text(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return graph_from_json(text);
  return parse_edge_list(text);
}

/// FILE, `-` for stdin, or a family spec such as cycle:n=6,s=1.
SignedGraph load_graph(const std::string& source, bool allow_spec) {
  if (source == "-") return parse_text(read_all(std::cin));
  if (std::filesystem::exists(source)) {
    std::ifstream in(source);
    if (!in) throw UsageError("cannot read " + source);
    return parse_text(read_all(in));
  }
  if (allow_spec && source.find(':') != std::string::npos) return generate(parse_family_spec(source));
  throw UsageError("no such file: " + source);
}

int figure_guard() {
  if (const char* env = std::getenv("SGN_SIZE_GUARD")) {
    int value = 0;
    const std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc{} && ptr == text.data() + text.size() && value >= 0) return value;
    throw UsageError("SGN_SIZE_GUARD must be a non-negative integer");
  }
  return kDefaultFigureGuard;
}

int cmd_nullity(const std::string& source, const std::string& method, bool trace) {
  const SignedGraph g = load_graph(source, true);
  const int guard = figure_guard();
  if (method == "rank") {
    std::cout << nullity_rank(g) << "\n";
  } else if (method == "charpoly") {
    std::cout << nullity_charpoly(g) << "\n";
  } else if (method == "figures") {
    std::cout << zero_multiplicity(char_poly_figures(g, guard)) << "\n";
  } else if (method == "structural") {
    const auto result = nullity_structural(g);
    std::cout << result.result_nullity << "\n";
    if (trace) std::cout << trace_to_json(result) << "\n";
  } else {
    const int by_rank = nullity_rank(g);
    const int by_poly = nullity_charpoly(g);
    const auto structural = nullity_structural(g);
    bool agree = by_poly == by_rank && structural.result_nullity == by_rank;
    std::cout << "rank " << by_rank << "\n";
    std::cout << "charpoly " << by_poly << "\n";
    if (g.order() <= guard) {
      const int by_figures = zero_multiplicity(char_poly_figures(g, guard));
      agree = agree && by_figures == by_rank;
      std::cout << "figures " << by_figures << "\n";
    } else {
      std::cout << "figures skipped (n = " << g.order() << " > guard " << guard << ")\n";
    }
    std::cout << "structural " << structural.result_nullity << "\n";
    if (trace) std::cout << trace_to_json(structural) << "\n";
    if (!agree) {
      std::cerr << "error: methods disagree\n";
      return kInconsistent;
    }
    std::cout << "nullity " << by_rank << "\n";
  }
  return kOk;
}

int cmd_charpoly(const std::string& source, const std::string& method) {
  const SignedGraph g = load_graph(source, true);
  CharPoly p = method == "interpolation" ? char_poly_interpolated(adjacency_matrix(g))
               : method == "figures"     ? char_poly_figures(g, figure_guard())
                                         : char_poly(adjacency_matrix(g));
  std::cout << p.to_string() << "\n";
  return kOk;
}

int cmd_balance(const std::string& source) {
  const SignedGraph g = load_graph(source, true);
  const auto result = is_balanced(g);
  if (result.balanced) {
    std::cout << "balanced\nswitching";
    for (int s : result.switching->values()) std::cout << ' ' << s;
    std::cout << "\n";
  } else {
    std::cout << "unbalanced\nnegative cycle";
    for (Vertex v : result.negative_cycle->vertices) std::cout << ' ' << v;
    std::cout << "\n";
  }
  return kOk;
}

int cmd_canon(const std::string& source) {
  std::cout << to_edge_list(canonical_signature(load_graph(source, true)));
  return kOk;
}

int cmd_generate(const std::string& spec) {
  std::cout << to_edge_list(generate(parse_family_spec(spec)));
  return kOk;
}

int cmd_equiv(const std::string& a, const std::string& b) {
  const bool same = switching_equivalent(load_graph(a, true), load_graph(b, true));
  std::cout << (same ? "equivalent" : "not equivalent") << "\n";
  return same ? kOk : kFailed;
}

int cmd_verify(const std::string& id, VerifyOptions options, const std::string& range, const std::string& json_path) {
  if (!range.empty()) {
    const auto dots = range.find("..");
    if (dots == std::string::npos) throw UsageError("--n expects A..B");
    try {
      options.n_min = std::stoi(range.substr(0, dots));
      options.n_max = std::stoi(range.substr(dots + 2));
    } catch (const std::exception&) {
      throw UsageError("--n expects A..B");
    }
  }
  options.record_cases = !json_path.empty();
  const VerificationReport report = run_verification(id, options);
  std::cout << report_summary(report);
  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + json_path);
    out << report_to_json_lines(report);
  }
  return report.passed() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nullity of signed graphs"};
  app.require_subcommand(1);

  std::string source, source2, method = "all", spec, theorem, range, json_path;
  bool trace = false;
  VerifyOptions options;
  int n_max = -1, n_min = -1, samples = -1;
  std::uint64_t seed = options.seed;

  auto* nullity = app.add_subcommand("nullity", "nullity by one or all methods");
  nullity->add_option("--method", method, "rank, charpoly, figures, structural or all")
      ->check(CLI::IsMember({"rank", "charpoly", "figures", "structural", "all"}));
  nullity->add_flag("--trace", trace, "print the structural reduction trace as JSON");
  nullity->add_option("input", source, "edge-list or JSON file, '-' for stdin, or a family spec")->required();

  std::string poly_method = "faddeev";
  auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial");
  charpoly->add_option("--method", poly_method, "faddeev, interpolation or figures")
      ->check(CLI::IsMember({"faddeev", "interpolation", "figures"}));
  charpoly->add_option("input", source, "graph source")->required();

  auto* balance = app.add_subcommand("balance", "balance test with witness");
  balance->add_option("input", source, "graph source")->required();

  auto* canon = app.add_subcommand("canon", "canonical signature in the switching class");
  canon->add_option("input", source, "graph source")->required();

  auto* gen = app.add_subcommand("generate", "edge list of a family instance");
  gen->add_option("spec", spec, "family spec, e.g. infinity:p=3,q=4,l=2,sp=1,sq=0")->required();

  auto* equiv = app.add_subcommand("equiv", "switching equivalence of two graphs");
  equiv->add_option("first", source, "graph source")->required();
  equiv->add_option("second", source2, "graph source")->required();

  auto* verify = app.add_subcommand("verify", "run a theorem verification sweep");
  verify->add_option("theorem", theorem, "theorem id")->required()->check(CLI::IsMember(theorem_ids()));
  verify->add_option("--n-max", n_max, "largest order in the sweep");
  verify->add_option("--n-min", n_min, "smallest order in the sweep");
  verify->add_option("--n", range, "order range A..B");
  verify->add_option("--samples", samples, "number of random instances");
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--json", json_path, "write the JSON-lines report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*nullity) return cmd_nullity(source, method, trace);
    if (*charpoly) return cmd_charpoly(source, poly_method);
    if (*balance) return cmd_balance(source);
    if (*canon) return cmd_canon(source);
    if (*gen) return cmd_generate(spec);
    if (*equiv) return cmd_equiv(source, source2);
    if (*verify) {
      if (n_max >= 0) options.n_max = n_max;
      if (n_min >= 0) options.n_min = n_min;
      if (samples >= 0) options.samples = samples;
      options.seed = seed;
      return cmd_verify(theorem, options, range, json_path);
    }
  } catch (const ConsistencyError& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kInconsistent;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
