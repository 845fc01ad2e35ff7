#include "solcon/groupio.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "solcon/connection.hpp"
#include "solcon/numtheory.hpp"

namespace solcon {

// ---------------------------------------------------------------- parsing

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line = 1;

  std::size_t column() const { return pos + 1; }
  void skip_space() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r')) ++pos;
  }
  bool done() {
    skip_space();
    return pos >= text.size();
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, column()); }
  void expect(char c) {
    skip_space();
    if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  std::uint64_t number() {
    skip_space();
    std::uint64_t v = 0;
    const auto* first = text.data() + pos;
    const auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), v);
    if (ec != std::errc() || ptr == first) fail("expected a number");
    pos += static_cast<std::size_t>(ptr - first);
    return v;
  }
};

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
  return line;
}

std::string_view trim_front(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  return s;
}

Permutation parse_cycle_line(std::string_view text, std::size_t degree, std::size_t line) {
  Cursor c{text, 0, line};
  std::vector<Point> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
  std::vector<char> used(degree, 0);
  while (!c.done()) {
    c.expect('(');
    c.skip_space();
    if (c.pos < text.size() && text[c.pos] == ')') {
      ++c.pos;
      continue;
    }
    std::vector<Point> cycle;
    while (true) {
      const auto col = c.pos;
      const auto v = c.number();
      if (v < 1 || v > degree) {
        c.pos = col;
        c.skip_space();
        c.fail("point " + std::to_string(v) + " out of range 1.." + std::to_string(degree));
      }
      if (used[v - 1]) {
        c.pos = col;
        c.skip_space();
        c.fail("point " + std::to_string(v) + " repeated");
      }
      used[v - 1] = 1;
      cycle.push_back(static_cast<Point>(v - 1));
      c.skip_space();
      if (c.pos < text.size() && text[c.pos] == ',') {
        ++c.pos;
        continue;
      }
      c.expect(')');
      break;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) img[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return Permutation(std::move(img));
}

}  // namespace

GeneratorFile parse_generator_file(std::string_view text, std::string label) {
  GeneratorFile out;
  out.label = std::move(label);
  std::size_t line_no = 0;
  bool have_degree = false;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    auto raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const auto body = strip_comment(raw);
    if (trim_front(body).empty()) continue;
    if (!have_degree) {
      Cursor c{body, 0, line_no};
      c.skip_space();
      if (body.substr(c.pos, 6) != "degree") c.fail("expected 'degree N'");
      c.pos += 6;
      const auto n = c.number();
      if (!c.done()) c.fail("trailing characters after degree");
      if (n == 0) throw ParseError("degree must be positive", line_no, 1);
      out.degree = n;
      have_degree = true;
      continue;
    }
    parse_cycle_line(body, out.degree, line_no);
    out.generators.emplace_back(trim_front(body));
  }
  if (!have_degree) throw ParseError("missing 'degree N' line", line_no == 0 ? 1 : line_no, 1);
  return out;
}

std::vector<Permutation> parse_generators(std::string_view text) {
  const auto file = parse_generator_file(text);
  std::vector<Permutation> out;
  for (const auto& g : file.generators) out.push_back(parse_cycle_line(g, file.degree, 0));
  return out;
}

PermGroup group_from_text(std::string_view text, const Budget& budget) {
  const auto file = parse_generator_file(text);
  std::vector<Permutation> gens;
  for (const auto& g : file.generators) {
    auto p = parse_cycle_line(g, file.degree, 0);
    if (!p.is_identity()) gens.push_back(std::move(p));
  }
  if (gens.empty()) return PermGroup(file.degree, budget);
  return PermGroup(std::move(gens), budget);
}

std::string render_generators(const PermGroup& g) {
  std::string out = "degree " + std::to_string(g.degree()) + "\n";
  for (const auto& s : g.generators()) out += s.to_string() + "\n";
  return out;
}

// ---------------------------------------------------------------- library

namespace {

Permutation cycle_on(std::size_t degree, std::vector<Point> pts) {
  return Permutation::from_cycles(degree, {std::move(pts)});
}

std::vector<Point> range(std::size_t from, std::size_t to) {
  std::vector<Point> r;
  for (auto i = from; i < to; ++i) r.push_back(static_cast<Point>(i));
  return r;
}

PermGroup from_gens(std::size_t degree, std::vector<Permutation> gens) {
  std::erase_if(gens, [](const Permutation& p) { return p.is_identity(); });
  if (gens.empty()) return PermGroup(degree);
  return PermGroup(std::move(gens));
}

/// GF(p^e) with elements encoded as base-p digit vectors of polynomial
/// coefficients (constant term lowest).
class FiniteField {
 public:
  explicit FiniteField(std::uint64_t q) : q_(q) {
    const auto pe = prime_power(q);
    if (!pe) throw ArgumentError("unsupported-q", "q is not a prime power", std::to_string(q));
    p_ = pe->first;
    e_ = pe->second;
    // Conway polynomials, lowest coefficient first, monic term implied.
    static const std::map<std::uint64_t, std::vector<std::uint64_t>> polys = {
        {4, {1, 1}}, {8, {1, 1, 0}}, {16, {1, 1, 0, 0}}, {32, {1, 0, 1, 0, 0}},
        {9, {2, 2}}, {25, {2, 4}},   {27, {1, 2, 0}},
    };
    if (e_ > 1) {
      const auto it = polys.find(q);
      if (it == polys.end()) throw ArgumentError("unsupported-q", "no field table for q", std::to_string(q));
      poly_ = it->second;
    }
    mul_.assign(q * q, 0);
    for (std::uint64_t a = 0; a < q; ++a) {
      for (std::uint64_t b = 0; b < q; ++b) mul_[a * q + b] = slow_mul(a, b);
    }
    for (std::uint64_t w = 2; w < q; ++w) {
      std::uint64_t k = 1;
      for (auto x = w; x != 1; x = mul(x, w)) ++k;
      if (k == q - 1) {
        primitive_ = w;
        break;
      }
    }
  }

  std::uint64_t size() const { return q_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t r = 0, scale = 1;
    for (unsigned i = 0; i < e_; ++i) {
      r += ((a % p_ + b % p_) % p_) * scale;
      a /= p_;
      b /= p_;
      scale *= p_;
    }
    return r;
  }
  std::uint64_t neg(std::uint64_t a) const {
    std::uint64_t r = 0, scale = 1;
    for (unsigned i = 0; i < e_; ++i) {
      r += ((p_ - a % p_) % p_) * scale;
      a /= p_;
      scale *= p_;
    }
    return r;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return mul_[a * q_ + b]; }
  std::uint64_t inv(std::uint64_t a) const {
    for (std::uint64_t b = 1; b < q_; ++b) {
      if (mul(a, b) == 1) return b;
    }
    throw ArgumentError("zero has no inverse");
  }
  std::uint64_t primitive() const { return primitive_; }

 private:
  std::uint64_t slow_mul(std::uint64_t a, std::uint64_t b) const {
    if (e_ == 1) return (a * b) % p_;
    std::vector<std::uint64_t> x(e_), y(e_), z(2 * e_, 0);
    for (unsigned i = 0; i < e_; ++i) {
      x[i] = a % p_;
      a /= p_;
      y[i] = b % p_;
      b /= p_;
    }
    for (unsigned i = 0; i < e_; ++i) {
      for (unsigned j = 0; j < e_; ++j) z[i + j] = (z[i + j] + x[i] * y[j]) % p_;
    }
    // t^e = -(c_0 + c_1 t + ... + c_{e-1} t^{e-1})
    for (auto d = 2 * e_ - 1; d >= e_; --d) {
      const auto c = z[d];
      if (c == 0) continue;
      z[d] = 0;
      for (unsigned i = 0; i < e_; ++i) {
        z[d - e_ + i] = (z[d - e_ + i] + (p_ - c) * poly_[i]) % p_;
      }
    }
    std::uint64_t r = 0, scale = 1;
    for (unsigned i = 0; i < e_; ++i) {
      r += z[i] * scale;
      scale *= p_;
    }
    return r;
  }

  std::uint64_t q_, p_ = 0;
  unsigned e_ = 0;
  std::vector<std::uint64_t> poly_;
  std::vector<std::uint64_t> mul_;
  std::uint64_t primitive_ = 1;
};

/// x -> (a x + b) / (c x + d) on GF(q) u {inf}, inf encoded as q.
Permutation mobius(const FiniteField& f, std::uint64_t a, std::uint64_t b, std::uint64_t c,
                   std::uint64_t d) {
  const auto q = f.size();
  const auto inf = q;
  std::vector<Point> img(q + 1);
  for (std::uint64_t x = 0; x <= q; ++x) {
    std::uint64_t num, den;
    if (x == inf) {
      num = a;
      den = c;
    } else {
      num = f.add(f.mul(a, x), b);
      den = f.add(f.mul(c, x), d);
    }
    img[x] = static_cast<Point>(den == 0 ? inf : f.mul(num, f.inv(den)));
  }
  return Permutation(std::move(img));
}

void check_projective_q(std::uint64_t q) {
  if (q < 2 || q + 1 > 256) throw ArgumentError("unsupported-q", "q out of range", std::to_string(q));
}

}  // namespace

PermGroup symmetric_group(std::size_t n) {
  if (n == 0) throw ArgumentError("degree must be positive");
  if (n < 2) return PermGroup(n);
  return from_gens(n, {cycle_on(n, {0, 1}), cycle_on(n, range(0, n))});
}

PermGroup alternating_group(std::size_t n) {
  if (n == 0) throw ArgumentError("degree must be positive");
  if (n < 3) return PermGroup(n);
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < n; ++i) gens.push_back(cycle_on(n, {0, 1, static_cast<Point>(i)}));
  return from_gens(n, std::move(gens));
}

PermGroup cyclic_group(std::size_t n) {
  if (n == 0) throw ArgumentError("degree must be positive");
  if (n < 2) return PermGroup(n);
  return from_gens(n, {cycle_on(n, range(0, n))});
}

PermGroup dihedral_group(std::size_t n) {
  if (n < 3) throw ArgumentError("dihedral group needs n >= 3", std::to_string(n));
  std::vector<Point> refl(n);
  for (std::size_t i = 0; i < n; ++i) refl[i] = static_cast<Point>((n - i) % n);
  return from_gens(n, {cycle_on(n, range(0, n)), Permutation(refl)});
}

PermGroup psl2(std::uint64_t q) {
  check_projective_q(q);
  const FiniteField f(q);
  const auto w = f.primitive();
  const auto w2 = f.mul(w, w);
  return from_gens(q + 1, {mobius(f, 1, 1, 0, 1), mobius(f, w2, 0, 0, 1),
                           mobius(f, 0, f.neg(1), 1, 0)});
}

PermGroup pgl2(std::uint64_t q) {
  check_projective_q(q);
  const FiniteField f(q);
  return from_gens(q + 1, {mobius(f, 1, 1, 0, 1), mobius(f, f.primitive(), 0, 0, 1),
                           mobius(f, 0, 1, 1, 0)});
}

PermGroup direct_product(const PermGroup& g, const PermGroup& h) {
  const auto n = g.degree();
  const auto m = h.degree();
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) {
    std::vector<Point> img(n + m);
    for (std::size_t i = 0; i < n + m; ++i) img[i] = i < n ? s[i] : static_cast<Point>(i);
    gens.emplace_back(std::move(img));
  }
  for (const auto& s : h.generators()) {
    std::vector<Point> img(n + m);
    for (std::size_t i = 0; i < n + m; ++i) img[i] = i < n ? static_cast<Point>(i) : static_cast<Point>(n + s[i - n]);
    gens.emplace_back(std::move(img));
  }
  return from_gens(n + m, std::move(gens));
}

namespace {

std::optional<std::uint64_t> suffix_number(const std::string& name, std::size_t skip) {
  if (name.size() <= skip) return std::nullopt;
  std::uint64_t v = 0;
  const auto* first = name.data() + skip;
  const auto* last = name.data() + name.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return v;
}

std::optional<PermGroup> simple_builtin(const std::string& name) {
  if (name == "V4") {
    return from_gens(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                         Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
  }
  if (name.rfind("psl2_", 0) == 0) {
    if (auto q = suffix_number(name, 5)) return psl2(*q);
    return std::nullopt;
  }
  if (name.rfind("pgl2_", 0) == 0) {
    if (auto q = suffix_number(name, 5)) return pgl2(*q);
    return std::nullopt;
  }
  const auto n = suffix_number(name, 1);
  if (!n || *n == 0) return std::nullopt;
  switch (name[0]) {
    case 'A':
      if (*n > 12) throw ArgumentError("unsupported-degree", "alternating groups need n <= 12", name);
      return alternating_group(*n);
    case 'S':
      if (*n > 12) throw ArgumentError("unsupported-degree", "symmetric groups need n <= 12", name);
      return symmetric_group(*n);
    case 'C':
      if (*n > 255) throw ArgumentError("unsupported-degree", "cyclic groups need n <= 255", name);
      return cyclic_group(*n);
    case 'D':
      if (*n % 2 != 0 || *n < 6 || *n > 510) return std::nullopt;
      return dihedral_group(*n / 2);
    default:
      return std::nullopt;
  }
}

PermGroup shifted(const PermGroup& g, std::size_t offset, std::size_t degree) {
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) {
    std::vector<Point> img(degree);
    for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
    for (std::size_t i = 0; i < g.degree(); ++i) img[offset + i] = static_cast<Point>(offset + s[i]);
    gens.emplace_back(std::move(img));
  }
  return from_gens(degree, std::move(gens));
}

/// Embedded subgroup fixtures "X_in_Y": X on the first points of Y for
/// plain names; for products "PxQ", X sits on the block of the matching
/// factor.
std::optional<PermGroup> fixture(const std::string& name) {
  static const std::map<std::string, std::pair<std::string, std::vector<std::vector<std::vector<Point>>>>>
      explicit_fixtures = {
          {"A4_in_A5", {"A5", {{{0, 1, 2}}, {{0, 1}, {2, 3}}}}},
          {"C5_in_A5", {"A5", {{{0, 1, 2, 3, 4}}}}},
          {"C2_in_S4", {"S4", {{{0, 1}}}}},
          {"A4_in_S4", {"S4", {{{0, 1, 2}}, {{0, 1}, {2, 3}}}}},
          {"V4_in_S4", {"S4", {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}}}},
          {"D8_in_S4", {"S4", {{{0, 1, 2, 3}}, {{0, 2}}}}},
          {"S3_in_S4", {"S4", {{{0, 1}}, {{0, 1, 2}}}}},
          {"C5_in_S5", {"S5", {{{0, 1, 2, 3, 4}}}}},
          {"S4_in_S5", {"S5", {{{0, 1}}, {{0, 1, 2, 3}}}}},
          {"A4_in_A6", {"A6", {{{0, 1, 2}}, {{0, 1}, {2, 3}}}}},
      };
  if (const auto it = explicit_fixtures.find(name); it != explicit_fixtures.end()) {
    const auto& [parent, gens] = it->second;
    const auto degree = builtin(parent).degree();
    std::vector<Permutation> perms;
    for (const auto& cyc : gens) perms.push_back(Permutation::from_cycles(degree, cyc));
    return from_gens(degree, std::move(perms));
  }
  const auto at = name.find("_in_");
  if (at == std::string::npos) return std::nullopt;
  const auto sub = name.substr(0, at);
  const auto parent = name.substr(at + 4);
  if (parent.find('x') == std::string::npos) return std::nullopt;
  // Factor-block embedding inside a named product.
  std::vector<std::string> parts;
  std::stringstream ss(parent);
  for (std::string part; std::getline(ss, part, 'x');) parts.push_back(part);
  std::size_t degree = 0;
  std::vector<std::size_t> offsets;
  for (const auto& part : parts) {
    offsets.push_back(degree);
    degree += builtin(part).degree();
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == sub) return shifted(builtin(sub), offsets[i], degree);
  }
  return std::nullopt;
}

}  // namespace

PermGroup builtin(const std::string& name, const Budget& budget) {
  if (auto f = fixture(name)) return *f;
  if (name.find('x') != std::string::npos) {
    std::stringstream ss(name);
    std::optional<PermGroup> acc;
    for (std::string part; std::getline(ss, part, 'x');) {
      auto g = builtin(part, budget);
      acc = acc ? direct_product(*acc, g) : g;
    }
    if (!acc) throw ArgumentError("unknown-builtin", "unknown builtin group", name);
    return *acc;
  }
  auto g = simple_builtin(name);
  if (!g) throw ArgumentError("unknown-builtin", "unknown builtin group", name);
  if (g->degree() > budget.max_degree) {
    throw ResourceError("degree exceeds budget", std::to_string(g->degree()));
  }
  return *g;
}

std::vector<std::string> builtin_fixture_names() {
  return {"A4_in_A5",     "C5_in_A5",     "C2_in_S4",     "A4_in_S4",     "V4_in_S4",
          "D8_in_S4",     "S3_in_S4",     "C5_in_S5",     "S4_in_S5",     "A4_in_A6",
          "S3_in_S3xC5",  "C5_in_S3xC5",  "S4_in_S4xA5",  "A5_in_S4xA5",  "S4_in_S4xC5",
          "C5_in_S4xC5"};
}

PermGroup load_group(const std::string& source, const Budget& budget) {
  const std::string prefix = "builtin:";
  if (source.rfind(prefix, 0) == 0) return builtin(source.substr(prefix.size()), budget);
  std::ifstream in(source);
  if (!in) throw ArgumentError("file-not-found", "cannot open generator file", source);
  std::stringstream buf;
  buf << in.rdbuf();
  return group_from_text(buf.str(), budget);
}

// ---------------------------------------------------------------- lattice

PermGroup subgroup_intersection(const PermGroup& a, const PermGroup& b, const Budget& budget) {
  require_same_degree(Permutation(a.degree()), Permutation(b.degree()));
  const bool a_small = a.order() <= b.order();
  const auto& small = a_small ? a : b;
  const auto& large = a_small ? b : a;
  if (small.is_subgroup_of(large)) return small;
  require_enumerable(small, budget);
  StabChain chain(small.degree());
  std::vector<Permutation> gens;
  small.for_each_element([&](const Permutation& x) {
    if (large.contains(x) && chain.extend(x)) gens.push_back(x);
  });
  return PermGroup::from_chain(std::move(gens), std::move(chain));
}

SubgroupCatalog enumerate_subgroups(const PermGroup& g, const Budget& budget) {
  auto table = std::make_shared<const GroupTable>(g, budget);
  const auto& t = *table;
  const auto n = t.size();

  struct Entry {
    ElementSet set;
    std::vector<std::uint32_t> gens;
  };
  std::vector<Entry> all;
  std::unordered_map<ElementSet, std::size_t> known;
  std::vector<std::size_t> reps;

  auto conj_set = [&](const ElementSet& s, std::uint32_t by) {
    ElementSet r(n);
    for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) {
      r[t.conj(static_cast<std::uint32_t>(i), by)] = true;
    }
    return r;
  };
  // Adds a subgroup together with its whole conjugacy class; only the
  // first member is queued for extension.
  auto add_class = [&](ElementSet s, std::vector<std::uint32_t> gens) {
    if (known.count(s)) return;
    const auto first = all.size();
    known.emplace(s, first);
    all.push_back({std::move(s), std::move(gens)});
    reps.push_back(first);
    for (auto k = first; k < all.size(); ++k) {
      for (auto by : t.generator_indices()) {
        auto c = conj_set(all[k].set, by);
        if (known.count(c)) continue;
        std::vector<std::uint32_t> cg;
        for (auto x : all[k].gens) cg.push_back(t.conj(x, by));
        known.emplace(c, all.size());
        all.push_back({std::move(c), std::move(cg)});
      }
    }
  };

  // One generator per cyclic subgroup.
  std::vector<std::uint32_t> cyclic;
  {
    std::unordered_map<ElementSet, std::uint32_t> seen;
    for (std::uint32_t x = 1; x < n; ++x) {
      const std::uint32_t one[] = {x};
      if (seen.emplace(t.closure(one), x).second) cyclic.push_back(x);
    }
  }

  add_class(t.closure({}), {});
  // Every subgroup is a chain of joins with cyclic subgroups; conjugating
  // such a chain shows that extending one member per class suffices.
  for (std::size_t r = 0; r < reps.size(); ++r) {
    const auto base = all[reps[r]];
    for (auto x : cyclic) {
      if (base.set[x]) continue;
      auto gens = base.gens;
      gens.push_back(x);
      auto set = t.closure(gens);
      add_class(std::move(set), std::move(gens));
    }
  }

  std::vector<std::size_t> order(all.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<std::uint32_t>> members(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) members[i] = t.members(all[i].set);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (members[a].size() != members[b].size()) return members[a].size() < members[b].size();
    return members[a] < members[b];
  });

  SubgroupCatalog cat;
  cat.table = table;
  for (auto i : order) {
    cat.sets.push_back(all[i].set);
    cat.subgroups.push_back(t.to_group(all[i].gens));
  }
  return cat;
}

std::vector<FactorizedGroup> enumerate_factorizations(const SubgroupCatalog& catalog) {
  std::vector<FactorizedGroup> out;
  const auto& t = *catalog.table;
  const std::uint64_t n = t.size();
  std::vector<std::uint64_t> orders;
  for (const auto& s : catalog.sets) orders.push_back(s.count());
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    for (std::size_t j = 0; j < catalog.size(); ++j) {
      if (orders[i] * orders[j] < n) continue;
      const auto common = (catalog.sets[i] & catalog.sets[j]).count();
      if (orders[i] * orders[j] != n * common) continue;
      out.push_back({t.group(), catalog.subgroups[i], catalog.subgroups[j], common});
    }
  }
  return out;
}

std::vector<FactorizedGroup> enumerate_factorizations(const PermGroup& g, const Budget& budget) {
  return enumerate_factorizations(enumerate_subgroups(g, budget));
}

std::string catalog_json(const SubgroupCatalog& catalog) {
  auto list = nlohmann::json::array();
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    auto gens = nlohmann::json::array();
    for (const auto& s : catalog.subgroups[i].generators()) gens.push_back(s.to_string());
    list.push_back({{"order", catalog.sets[i].count()}, {"generators", gens}});
  }
  return list.dump();
}

}  // namespace solcon
