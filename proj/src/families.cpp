#include "sgn/families.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <utility>
#include <vector>

#include "sgn/exact_matrix.hpp"

namespace sgraph {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw FamilyError(message);
}

void require_parity(int s, const char* name) {
  require(s == 0 || s == 1, std::string(name) + " must be 0 or 1");
}

int sign_of(int parity) { return parity % 2 == 1 ? -1 : 1; }

class Builder {
 public:
  int add() { return order_++; }

  void edge(int u, int v, int sign = 1) { edges_.push_back({u, v, sign}); }

  /// Closed walk through `cycle`; the first edge carries the parity.
  void cycle(const std::vector<int>& cycle, int parity) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      edge(cycle[i], cycle[(i + 1) % cycle.size()], i == 0 ? sign_of(parity) : 1);
    }
  }

  /// Appends `count` new vertices as a chain starting next to `from`;
  /// returns the last one (or `from` when count is 0).
  int chain(int from, int count) {
    for (int i = 0; i < count; ++i) {
      int v = add();
      edge(from, v);
      from = v;
    }
    return from;
  }

  void leaves(int at, int count) {
    for (int i = 0; i < count; ++i) edge(at, add());
  }

  SignedGraph build() const { return SignedGraph(order_, edges_); }

 private:
  int order_ = 0;
  std::vector<Edge> edges_;
};

/// Triangles a b c and c d e sharing c; returns {a, b, c, d, e}.
std::array<int, 5> bowtie(Builder& b, const FigureParities& s) {
  std::array<int, 5> v{};
  for (auto& x : v) x = b.add();
  b.cycle({v[0], v[1], v[2]}, s[0]);
  b.cycle({v[2], v[3], v[4]}, s[1]);
  return v;
}

/// Triangle a b c and quadrangle c d e f sharing c, with d and f adjacent to
/// c; returns {a, b, c, d, e, f}.
std::array<int, 6> triangle_quadrangle(Builder& b, const FigureParities& s) {
  std::array<int, 6> v{};
  for (auto& x : v) x = b.add();
  b.cycle({v[0], v[1], v[2]}, s[0]);
  b.cycle({v[2], v[3], v[4], v[5]}, s[1]);
  return v;
}

/// Quadrangles e a b c and e d f g sharing e; a, c, d and g are adjacent to
/// e. Returns {e, a, b, c, d, f, g}.
std::array<int, 7> two_quadrangles(Builder& b, const FigureParities& s) {
  std::array<int, 7> v{};
  for (auto& x : v) x = b.add();
  b.cycle({v[0], v[1], v[2], v[3]}, s[0]);
  b.cycle({v[0], v[4], v[5], v[6]}, s[1]);
  return v;
}

/// Theta(2,2,1): a b c d with shared edge b c; triangles a b c and b c d.
/// Returns {a, b, c, d}.
std::array<int, 4> diamond(Builder& b, const FigureParities& s) {
  std::array<int, 4> v{};
  for (auto& x : v) x = b.add();
  b.edge(v[0], v[1], sign_of(s[0]));
  b.edge(v[0], v[2]);
  b.edge(v[1], v[2]);
  b.edge(v[1], v[3], sign_of(s[1]));
  b.edge(v[2], v[3]);
  return v;
}

constexpr std::array<std::pair<FigureId, std::string_view>, 21> kFigureNames{{
    {FigureId::H1, "H1"},   {FigureId::H2, "H2"},   {FigureId::H3, "H3"},   {FigureId::H4, "H4"},
    {FigureId::H5, "H5"},   {FigureId::H6, "H6"},   {FigureId::H7, "H7"},   {FigureId::H8, "H8"},
    {FigureId::H9, "H9"},   {FigureId::H10, "H10"}, {FigureId::H11, "H11"}, {FigureId::H12, "H12"},
    {FigureId::H13, "H13"}, {FigureId::G1, "G1"},   {FigureId::G2, "G2"},   {FigureId::G3, "G3"},
    {FigureId::G4, "G4"},   {FigureId::G5, "G5"},   {FigureId::G6, "G6"},   {FigureId::G7, "G7"},
    {FigureId::G8, "G8"},
}};

std::string range_text(int n, int k) { return " (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")"; }

}  // namespace

SignedGraph gen_path(int n) {
  require(n >= 1, "path needs n >= 1");
  Builder b;
  b.chain(b.add(), n - 1);
  return b.build();
}

SignedGraph gen_cycle(int n, int s) {
  require(n >= 3, "cycle needs n >= 3");
  require(s >= 0 && s <= n, "cycle needs 0 <= s <= n");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, i < s ? -1 : 1});
  return SignedGraph(n, std::move(edges));
}

SignedGraph gen_star(int k) {
  require(k >= 1, "star needs k >= 1");
  Builder b;
  b.leaves(b.add(), k - 1);
  return b.build();
}

SignedGraph gen_infinity(int p, int q, int l, int sp, int sq) {
  require(p >= 3 && q >= 3, "infinity graph needs p, q >= 3");
  require(l >= 1, "infinity graph needs l >= 1");
  require(sp >= 0 && sp <= p && sq >= 0 && sq <= q, "negative edge counts out of range");
  Builder b;
  std::vector<int> cp;
  for (int i = 0; i < p; ++i) cp.push_back(b.add());
  const int end = b.chain(cp[0], l - 1);
  std::vector<int> cq{end};
  for (int i = 1; i < q; ++i) cq.push_back(b.add());

  auto close = [&](const std::vector<int>& c, int negatives) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      b.edge(c[i], c[(i + 1) % c.size()], static_cast<int>(i) < negatives ? -1 : 1);
    }
  };
  close(cp, sp);
  close(cq, sq);
  return b.build();
}

SignedGraph gen_theta(int p, int q, int l, int sp, int sq, int sl) {
  require(p >= 1 && q >= 1 && l >= 1, "theta graph needs p, q, l >= 1");
  require((p == 1) + (q == 1) + (l == 1) <= 1, "theta graph allows at most one path of length 1");
  require_parity(sp, "sp");
  require_parity(sq, "sq");
  require_parity(sl, "sl");
  Builder b;
  const int h0 = b.add();
  const int h1 = b.add();
  for (auto [length, parity] : {std::pair{p, sp}, std::pair{q, sq}, std::pair{l, sl}}) {
    int prev = h0;
    for (int i = 1; i < length; ++i) {
      int v = b.add();
      b.edge(prev, v, i == 1 ? sign_of(parity) : 1);
      prev = v;
    }
    b.edge(prev, h1, length == 1 ? sign_of(parity) : 1);
  }
  return b.build();
}

std::string_view to_string(FigureId id) {
  for (const auto& [value, name] : kFigureNames) {
    if (value == id) return name;
  }
  return "?";
}

std::optional<FigureId> parse_figure_id(std::string_view name) {
  for (const auto& [value, text] : kFigureNames) {
    if (text == name) return value;
  }
  return std::nullopt;
}

FigureParities default_parities(FigureId id) {
  switch (id) {
    case FigureId::G1:
    case FigureId::G5:
    case FigureId::G6:
    case FigureId::G8: return {1, 0};
    default: return {1, 1};
  }
}

SignedGraph gen_figure(FigureId id, int n, int k, std::optional<FigureParities> parities) {
  const FigureParities s = parities.value_or(default_parities(id));
  require_parity(s[0], "first cycle parity");
  require_parity(s[1], "second cycle parity");
  Builder b;
  switch (id) {
    case FigureId::H1: {
      const int c = b.add();
      b.cycle({c, b.add(), b.add()}, s[0]);
      b.chain(c, 3);
      break;
    }
    case FigureId::H2: {
      const int c = b.add();
      b.cycle({c, b.add(), b.add()}, s[0]);
      b.leaves(c, 1);
      b.chain(c, 2);
      break;
    }
    case FigureId::H3: {
      require(n >= 4, "H3 needs n >= 4" + range_text(n, k));
      std::vector<int> cycle;
      for (int i = 0; i < n - 1; ++i) cycle.push_back(b.add());
      b.cycle(cycle, s[0]);
      b.leaves(cycle[0], 1);
      break;
    }
    case FigureId::H4: b.leaves(bowtie(b, s)[3], 1); break;
    case FigureId::H5: b.leaves(bowtie(b, s)[2], 1); break;
    case FigureId::H13: bowtie(b, s); break;
    case FigureId::H6: b.leaves(triangle_quadrangle(b, s)[0], 1); break;
    case FigureId::H7: b.leaves(triangle_quadrangle(b, s)[2], 1); break;
    case FigureId::H8: b.leaves(triangle_quadrangle(b, s)[3], 1); break;
    case FigureId::H9: b.leaves(triangle_quadrangle(b, s)[4], 1); break;
    case FigureId::H10: b.leaves(two_quadrangles(b, s)[4], 1); break;
    case FigureId::H11: b.leaves(two_quadrangles(b, s)[2], 1); break;
    case FigureId::H12: b.leaves(two_quadrangles(b, s)[0], 1); break;
    case FigureId::G1: {
      require(n >= 7, "G1 needs n >= 7" + range_text(n, k));
      const int c = b.add();
      b.cycle({c, b.add(), b.add()}, s[0]);
      b.leaves(c, n - 7);
      const int d = b.chain(c, 1);
      b.cycle({d, b.add(), b.add(), b.add()}, s[1]);
      break;
    }
    case FigureId::G2: {
      require(n >= 8 && k >= 1 && k <= n - 7, "G2 needs 1 <= k <= n - 7" + range_text(n, k));
      const int c = b.add();
      b.cycle({c, b.add(), b.add()}, s[0]);
      b.leaves(c, k + 1);
      const int w = b.chain(c, n - k - 6);
      b.cycle({w, b.add(), b.add()}, s[1]);
      break;
    }
    case FigureId::G3: {
      require(n >= 6, "G3 needs n >= 6" + range_text(n, k));
      b.leaves(bowtie(b, s)[4], n - 5);
      break;
    }
    case FigureId::G4: {
      require(n >= 8 && k >= 1 && k <= n - 7, "G4 needs 1 <= k <= n - 7" + range_text(n, k));
      const int z = b.chain(bowtie(b, s)[4], n - k - 6);
      b.leaves(z, k + 1);
      break;
    }
    case FigureId::G5: {
      require(n >= 5, "G5 needs n >= 5" + range_text(n, k));
      const auto v = diamond(b, s);
      b.leaves(v[0], 1);
      b.chain(v[3], n - 5);
      break;
    }
    case FigureId::G6: {
      require(n >= 5, "G6 needs n >= 5" + range_text(n, k));
      b.leaves(diamond(b, s)[2], n - 4);
      break;
    }
    case FigureId::G7: {
      require(k >= 1 && k <= n - 5, "G7 needs 1 <= k <= n - 5" + range_text(n, k));
      const int z = b.chain(diamond(b, s)[3], n - k - 4);
      b.leaves(z, k);
      break;
    }
    case FigureId::G8: {
      require(k >= 2 && k <= n - 5, "G8 needs 2 <= k <= n - 5" + range_text(n, k));
      // Quadrangle a b d c and triangle c d e sharing the edge c d.
      const int a = b.add(), bb = b.add(), c = b.add(), d = b.add(), e = b.add();
      b.edge(a, bb);
      b.edge(bb, d);
      b.edge(d, c);
      b.edge(c, a, sign_of(s[1]));
      b.edge(c, e, sign_of(s[0]));
      b.edge(d, e);
      const int z = b.chain(e, n - k - 4);
      b.leaves(z, k - 1);
      break;
    }
  }
  return b.build();
}

std::string_view to_string(BicyclicClass c) {
  switch (c) {
    case BicyclicClass::BPlus: return "BPlus";
    case BicyclicClass::BPlusPlus: return "BPlusPlus";
    case BicyclicClass::Theta: return "Theta";
  }
  return "?";
}

std::optional<BicyclicClass> parse_bicyclic_class(std::string_view name) {
  for (auto c : {BicyclicClass::BPlus, BicyclicClass::BPlusPlus, BicyclicClass::Theta}) {
    if (name == to_string(c)) return c;
  }
  return std::nullopt;
}

std::optional<BicyclicClass> classify_bicyclic(const SignedGraph& g) {
  if (!g.is_connected() || g.size() != g.order() + 1) return std::nullopt;
  const auto cycles = find_cycles(g);
  if (cycles.size() == 3) return BicyclicClass::Theta;
  if (cycles.size() != 2) return std::nullopt;
  const auto& a = cycles[0].vertices;
  const auto& b = cycles[1].vertices;
  for (Vertex v : a) {
    if (std::find(b.begin(), b.end(), v) != b.end()) return BicyclicClass::BPlusPlus;
  }
  return BicyclicClass::BPlus;
}

bool realizer_in_range(BicyclicClass c, int n, int k) {
  switch (c) {
    case BicyclicClass::BPlus: return n >= 7 && k >= 0 && k <= n - 6;
    case BicyclicClass::BPlusPlus: return n >= 8 && k >= 0 && k <= n - 6;
    case BicyclicClass::Theta: return n >= 6 && k >= 0 && k <= n - 4;
  }
  return false;
}

namespace {

SignedGraph realize_unchecked(BicyclicClass c, int n, int k) {
  switch (c) {
    case BicyclicClass::BPlus:
      if (k == 0) return gen_infinity(3, 3, n - 4, 1, 1);
      if (k == n - 6) return gen_figure(FigureId::G1, n);
      return gen_figure(FigureId::G2, n, k);
    case BicyclicClass::BPlusPlus:
      if (k == 0) {
        const int q = n - 2;
        int sq = 0;
        if (q % 2 == 1) {
          // twist 1 - sq + (q - 3)/2 must be even
          sq = (1 + (q - 3) / 2) % 2;
        } else {
          sq = q % 4 == 0 ? 1 : 0;
        }
        return gen_infinity(3, q, 1, 1, sq);
      }
      if (k == n - 6) return gen_figure(FigureId::G3, n);
      return gen_figure(FigureId::G4, n, k);
    case BicyclicClass::Theta:
      if (k == 0) return gen_figure(FigureId::G5, n);
      if (k == n - 4) return gen_figure(FigureId::G6, n);
      if ((n - k) % 2 == 1) return gen_figure(FigureId::G7, n, k);
      if (k >= 2) return gen_figure(FigureId::G8, n, k);
      {
        // k = 1, n odd: Theta(2,2,1) with both triangles negative and a
        // pendant path of n - 4 vertices at a hub.
        Builder b;
        b.chain(diamond(b, {1, 1})[2], n - 4);
        return b.build();
      }
  }
  throw FamilyError("unknown class");
}

}  // namespace

SignedGraph realize_nullity(BicyclicClass c, int n, int k) {
  if (!realizer_in_range(c, n, k)) {
    throw FamilyError("no " + std::string(to_string(c)) + " realizer" + range_text(n, k));
  }
  SignedGraph g = realize_unchecked(c, n, k);
  const std::string where = std::string(to_string(c)) + range_text(n, k);
  if (g.order() != n) throw ConsistencyError(where + ": built " + std::to_string(g.order()) + " vertices");
  if (classify_bicyclic(g) != c) throw ConsistencyError(where + ": output is not in the class");
  if (is_balanced(g).balanced) throw ConsistencyError(where + ": output is balanced");
  const int eta = nullity_rank(g);
  if (eta != k) throw ConsistencyError(where + ": output has nullity " + std::to_string(eta));
  return g;
}

namespace {

using Fields = std::map<std::string, std::string, std::less<>>;

int to_int(std::string_view key, std::string_view text) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw FamilyError("bad integer for " + std::string(key) + ": '" + std::string(text) + "'");
  }
  return value;
}

class FieldReader {
 public:
  FieldReader(std::string kind, Fields fields) : kind_(std::move(kind)), fields_(std::move(fields)) {}

  int integer(std::string_view key) {
    auto it = fields_.find(key);
    if (it == fields_.end()) throw FamilyError(kind_ + " spec needs " + std::string(key));
    int value = to_int(key, it->second);
    fields_.erase(it);
    return value;
  }

  int integer(std::string_view key, int fallback) { return fields_.contains(key) ? integer(key) : fallback; }

  std::optional<std::string> text(std::string_view key) {
    auto it = fields_.find(key);
    if (it == fields_.end()) return std::nullopt;
    std::string value = it->second;
    fields_.erase(it);
    return value;
  }

  bool has(std::string_view key) const { return fields_.contains(key); }

  void finish() const {
    if (!fields_.empty()) throw FamilyError("unknown key '" + fields_.begin()->first + "' for " + kind_);
  }

 private:
  std::string kind_;
  Fields fields_;
};

}  // namespace

FamilySpec parse_family_spec(std::string_view text) {
  if (text.starts_with("family:")) text.remove_prefix(7);
  const auto colon = text.find(':');
  const std::string kind(text.substr(0, colon));
  Fields fields;
  if (colon != std::string_view::npos) {
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      std::string_view item = rest.substr(0, comma);
      const auto eq = item.find('=');
      if (eq == std::string_view::npos || eq == 0) throw FamilyError("expected key=value, got '" + std::string(item) + "'");
      if (!fields.emplace(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1))).second) {
        throw FamilyError("duplicate key '" + std::string(item.substr(0, eq)) + "'");
      }
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  }

  FieldReader r(kind, std::move(fields));
  FamilySpec spec;
  if (kind == "path") {
    spec = PathSpec{r.integer("n")};
  } else if (kind == "cycle") {
    spec = CycleSpec{r.integer("n"), r.integer("s", 0)};
  } else if (kind == "star") {
    spec = StarSpec{r.integer("k")};
  } else if (kind == "infinity") {
    spec = InfinitySpec{r.integer("p"), r.integer("q"), r.integer("l"), r.integer("sp", 0), r.integer("sq", 0)};
  } else if (kind == "theta") {
    spec = ThetaSpec{r.integer("p"),      r.integer("q"),      r.integer("l"),
                     r.integer("sp", 0), r.integer("sq", 0), r.integer("sl", 0)};
  } else if (kind == "figure") {
    FigureSpec f;
    const auto id = r.text("id");
    if (!id) throw FamilyError("figure spec needs id");
    const auto parsed = parse_figure_id(*id);
    if (!parsed) throw FamilyError("unknown figure '" + *id + "'");
    f.id = *parsed;
    f.n = r.integer("n", 0);
    f.k = r.integer("k", 0);
    if (r.has("s1") || r.has("s2")) {
      const auto d = default_parities(f.id);
      f.parities = FigureParities{r.integer("s1", d[0]), r.integer("s2", d[1])};
    }
    spec = f;
  } else if (kind == "realize") {
    RealizerSpec rs;
    const auto cls = r.text("class");
    if (!cls) throw FamilyError("realize spec needs class");
    const auto parsed = parse_bicyclic_class(*cls);
    if (!parsed) throw FamilyError("unknown class '" + *cls + "'");
    rs.cls = *parsed;
    rs.n = r.integer("n");
    rs.k = r.integer("k");
    spec = rs;
  } else {
    throw FamilyError("unknown family kind '" + kind + "'");
  }
  r.finish();
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  auto kv = [](std::string_view key, int value) { return std::string(key) + "=" + std::to_string(value); };
  return std::visit(
      [&](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PathSpec>) {
          return "path:" + kv("n", s.n);
        } else if constexpr (std::is_same_v<T, CycleSpec>) {
          return "cycle:" + kv("n", s.n) + "," + kv("s", s.s);
        } else if constexpr (std::is_same_v<T, StarSpec>) {
          return "star:" + kv("k", s.k);
        } else if constexpr (std::is_same_v<T, InfinitySpec>) {
          return "infinity:" + kv("p", s.p) + "," + kv("q", s.q) + "," + kv("l", s.l) + "," + kv("sp", s.sp) + "," +
                 kv("sq", s.sq);
        } else if constexpr (std::is_same_v<T, ThetaSpec>) {
          return "theta:" + kv("p", s.p) + "," + kv("q", s.q) + "," + kv("l", s.l) + "," + kv("sp", s.sp) + "," +
                 kv("sq", s.sq) + "," + kv("sl", s.sl);
        } else if constexpr (std::is_same_v<T, FigureSpec>) {
          std::string out = "figure:id=" + std::string(to_string(s.id)) + "," + kv("n", s.n) + "," + kv("k", s.k);
          if (s.parities) out += "," + kv("s1", (*s.parities)[0]) + "," + kv("s2", (*s.parities)[1]);
          return out;
        } else {
          return "realize:class=" + std::string(to_string(s.cls)) + "," + kv("n", s.n) + "," + kv("k", s.k);
        }
      },
      spec);
}

SignedGraph generate(const FamilySpec& spec) {
  return std::visit(
      [](const auto& s) -> SignedGraph {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PathSpec>) {
          return gen_path(s.n);
        } else if constexpr (std::is_same_v<T, CycleSpec>) {
          return gen_cycle(s.n, s.s);
        } else if constexpr (std::is_same_v<T, StarSpec>) {
          return gen_star(s.k);
        } else if constexpr (std::is_same_v<T, InfinitySpec>) {
          try {
            s.validate();
          } catch (const std::invalid_argument& e) {
            throw FamilyError(e.what());
          }
          return gen_infinity(s.p, s.q, s.l, s.sp, s.sq);
        } else if constexpr (std::is_same_v<T, ThetaSpec>) {
          return gen_theta(s.p, s.q, s.l, s.sp, s.sq, s.sl);
        } else if constexpr (std::is_same_v<T, FigureSpec>) {
          return gen_figure(s.id, s.n, s.k, s.parities);
        } else {
          return realize_nullity(s.cls, s.n, s.k);
        }
      },
      spec);
}

}  // namespace sgraph
