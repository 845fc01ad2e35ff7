#include "solcon/structure.hpp"

#include <atomic>
#include <numeric>
#include <stdexcept>

#include "solcon/group_table.hpp"
#include "solcon/groupio.hpp"
#include "solcon/numtheory.hpp"
#include "solcon/parallel.hpp"

namespace solcon {

namespace {

enum class Verdict { soluble, insoluble, unknown };

std::vector<std::vector<Point>> orbits_of(const std::vector<Permutation>& gens, std::size_t n) {
  std::vector<char> seen(n, 0);
  std::vector<std::vector<Point>> out;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<Point> orb{static_cast<Point>(start)};
    seen[start] = 1;
    for (std::size_t k = 0; k < orb.size(); ++k) {
      for (const auto& g : gens) {
        const auto y = g[orb[k]];
        if (!seen[y]) {
          seen[y] = 1;
          orb.push_back(y);
        }
      }
    }
    if (orb.size() > 1) out.push_back(std::move(orb));
  }
  return out;
}

std::vector<Permutation> restrict_to(const std::vector<Permutation>& gens,
                                     const std::vector<Point>& orbit, std::size_t n) {
  std::vector<Point> local(n, 0);
  for (std::size_t i = 0; i < orbit.size(); ++i) local[orbit[i]] = static_cast<Point>(i);
  std::vector<Permutation> out;
  for (const auto& g : gens) {
    std::vector<Point> img(orbit.size());
    for (std::size_t i = 0; i < orbit.size(); ++i) img[i] = local[g[orbit[i]]];
    out.emplace_back(std::move(img));
  }
  return out;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

/// Transitive action assumed. For each j the minimal block containing
/// {0, j} is grown by union-find; a block short of everything means
/// the action is imprimitive.
bool is_primitive(const std::vector<Permutation>& gens) {
  const auto k = gens.front().degree();
  for (std::size_t j = 1; j < k; ++j) {
    std::vector<std::size_t> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<std::pair<std::size_t, std::size_t>> queue{{0, j}};
    parent[j] = 0;
    std::size_t merged = 1;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (const auto& g : gens) {
        const auto a = find_root(parent, g[queue[q].first]);
        const auto b = find_root(parent, g[queue[q].second]);
        if (a == b) continue;
        parent[b] = a;
        ++merged;
        queue.emplace_back(a, b);
      }
    }
    if (merged < k) return false;
  }
  return true;
}

/// Some power of a generator is a single p-cycle with p = 2, 3 or p <= k - 3.
/// A primitive group with such an element contains the alternating group.
bool has_jordan_cycle(const std::vector<Permutation>& gens) {
  const auto k = gens.front().degree();
  for (const auto& g : gens) {
    const auto ord = element_order(g);
    for (auto p : prime_divisors(ord)) {
      if (!(p <= 3 || p + 3 <= k)) continue;
      if (support_size(g.pow(static_cast<std::int64_t>(ord / p))) == p) return true;
    }
  }
  return false;
}

/// Cheap decisions from generators alone. A primitive soluble group has
/// prime-power degree, and a constituent that contains an alternating
/// group of degree >= 5 is insoluble.
Verdict screen(const std::vector<Permutation>& gens) {
  std::vector<Permutation> live;
  for (const auto& g : gens) {
    if (!g.is_identity()) live.push_back(g);
  }
  if (live.empty()) return Verdict::soluble;
  bool abelian = true;
  for (std::size_t i = 0; i < live.size() && abelian; ++i) {
    for (std::size_t j = i + 1; j < live.size(); ++j) {
      if (live[i] * live[j] != live[j] * live[i]) {
        abelian = false;
        break;
      }
    }
  }
  if (abelian) return Verdict::soluble;
  bool small = true;
  for (const auto& orb : orbits_of(live, live.front().degree())) {
    if (orb.size() < 5) continue;
    small = false;
    const auto local = restrict_to(live, orb, live.front().degree());
    if (!is_primitive(local)) continue;
    if (!prime_power(orb.size())) return Verdict::insoluble;
    if (has_jordan_cycle(local)) return Verdict::insoluble;
  }
  // Every constituent embeds in S4.
  if (small) return Verdict::soluble;
  return Verdict::unknown;
}

BigInt factorial(std::size_t k) {
  BigInt r = 1;
  for (std::size_t i = 2; i <= k; ++i) r *= static_cast<unsigned long>(i);
  return r;
}

std::size_t moved_points(const PermGroup& g) {
  std::vector<char> moved(g.degree(), 0);
  for (const auto& s : g.generators()) {
    for (std::size_t i = 0; i < g.degree(); ++i) {
      if (s[i] != i) moved[i] = 1;
    }
  }
  return static_cast<std::size_t>(std::count(moved.begin(), moved.end(), 1));
}

PermGroup normal_closure_unchecked(const std::vector<Permutation>& by, std::size_t degree,
                                   const std::vector<Permutation>& seeds) {
  StabChain chain(degree);
  std::vector<Permutation> gens;
  for (const auto& s : seeds) {
    if (chain.extend(s)) gens.push_back(s);
  }
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (const auto& g : by) {
      auto c = conjugate(gens[k], g);
      if (chain.extend(c)) gens.push_back(std::move(c));
    }
  }
  return PermGroup::from_chain(std::move(gens), std::move(chain));
}

std::vector<Permutation> generator_commutators(const std::vector<Permutation>& a,
                                               const std::vector<Permutation>& b, bool same) {
  std::vector<Permutation> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = same ? i + 1 : 0; j < b.size(); ++j) {
      auto c = commutator(a[i], b[j]);
      if (!c.is_identity()) out.push_back(std::move(c));
    }
  }
  return out;
}

/// Derived-series loop with exact shortcuts: odd order (Feit-Thompson),
/// at most two prime divisors (Burnside), and order >= k!/2 on a support
/// of k >= 5 points, which forces the alternating group.
bool soluble_by_series(PermGroup cur) {
  while (true) {
    if (cur.is_trivial() || cur.is_abelian()) return true;
    const auto order = cur.order();
    if (mpz_odd_p(order.get_mpz_t())) return true;
    std::size_t primes = 0;
    for (auto p : primes_up_to(cur.degree())) {
      if (mpz_divisible_ui_p(order.get_mpz_t(), p)) ++primes;
    }
    if (primes <= 2) return true;
    const auto k = moved_points(cur);
    if (k >= 5 && 2 * order >= factorial(k)) return false;
    auto d = derived_subgroup(cur);
    if (d.order() == order) return false;
    cur = std::move(d);
  }
}

void require_member(const PermGroup& ambient, const Permutation& x) {
  if (!ambient.contains(x)) {
    throw ArgumentError("membership-violation", "element is not in the ambient group",
                        x.to_string());
  }
}

}  // namespace

std::vector<BigInt> DerivedSeries::orders() const {
  std::vector<BigInt> out;
  for (const auto& t : terms) out.push_back(t.order());
  return out;
}

std::size_t DerivedSeries::length() const {
  std::size_t k = 0;
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i].order() != terms[i - 1].order()) ++k;
  }
  return k;
}

PermGroup derived_subgroup(const PermGroup& g) {
  return normal_closure_unchecked(g.generators(), g.degree(),
                                  generator_commutators(g.generators(), g.generators(), true));
}

DerivedSeries derived_series(const PermGroup& g) {
  DerivedSeries s{{g}};
  while (!s.terms.back().is_trivial()) {
    auto d = derived_subgroup(s.terms.back());
    const bool stable = d.order() == s.terms.back().order();
    s.terms.push_back(std::move(d));
    if (stable) break;
  }
  return s;
}

bool is_soluble(const PermGroup& g) {
  switch (screen(g.generators())) {
    case Verdict::soluble:
      return true;
    case Verdict::insoluble:
      return false;
    case Verdict::unknown:
      break;
  }
  return soluble_by_series(g);
}

bool two_generated_soluble(const Permutation& a, const Permutation& b) {
  require_same_degree(a, b);
  const std::vector<Permutation> gens{a, b};
  switch (screen(gens)) {
    case Verdict::soluble:
      return true;
    case Verdict::insoluble:
      return false;
    case Verdict::unknown:
      break;
  }
  return soluble_by_series(PermGroup(gens));
}

PermGroup normal_closure(const PermGroup& ambient, const std::vector<Permutation>& seeds) {
  for (const auto& s : seeds) {
    require_same_degree(s, Permutation(ambient.degree()));
    require_member(ambient, s);
  }
  return normal_closure_unchecked(ambient.generators(), ambient.degree(), seeds);
}

PermGroup commutator_of_subgroups(const PermGroup& a, const PermGroup& b,
                                  const PermGroup& ambient) {
  for (const auto* h : {&a, &b}) {
    for (const auto& x : h->generators()) {
      require_same_degree(x, Permutation(ambient.degree()));
      require_member(ambient, x);
    }
  }
  auto by = a.generators();
  by.insert(by.end(), b.generators().begin(), b.generators().end());
  return normal_closure_unchecked(by, ambient.degree(),
                                  generator_commutators(a.generators(), b.generators(), false));
}

PermGroup soluble_radical(const PermGroup& g, RadicalMethod method, const Budget& budget) {
  if (method == RadicalMethod::bruteforce) {
    const GroupTable table(g, budget);
    std::vector<std::uint32_t> gens;
    for (const auto& n : table.normal_subgroups()) {
      if (!table.is_soluble(n)) continue;
      const auto more = table.generators_of(n);
      gens.insert(gens.end(), more.begin(), more.end());
    }
    return table.to_group(table.generators_of(table.closure(gens)));
  }

  // Accept x iff <x, y> is soluble for every y in G; the accepted set is a
  // union of classes and equals the radical as a set.
  const auto classes = conjugacy_class_reps(g, budget);
  const auto elems = g.elements(budget);
  std::atomic<std::uint64_t> pairs{0};
  std::vector<Permutation> accepted;
  std::uint64_t accepted_size = 0;
  for (std::size_t i = 0; i < classes.reps.size(); ++i) {
    const auto& x = classes.reps[i];
    if (!x.is_identity()) {
      const auto hit = parallel_find_first(elems.size(), budget.effective_jobs(), [&](std::size_t k) {
        if (++pairs > budget.max_pairs) {
          throw ResourceError("pair budget exceeded", std::to_string(budget.max_pairs));
        }
        return !two_generated_soluble(x, elems[k]);
      });
      if (hit != elems.size()) continue;
      accepted.push_back(x);
    }
    accepted_size += classes.class_sizes[i];
  }
  auto r = accepted.empty() ? PermGroup(g.degree()) : normal_closure(g, accepted);
  if (r.order() != accepted_size || !is_soluble(r)) {
    throw std::logic_error("radical verification failed: order " + r.order().get_str() +
                           " vs accepted " + std::to_string(accepted_size));
  }
  return r;
}

PClosedResult is_p_closed(const PermGroup& h, std::uint64_t p, const Budget& budget) {
  if (!is_prime(p)) throw ArgumentError("p must be prime", std::to_string(p));
  const auto order = h.order();
  if (!mpz_divisible_ui_p(order.get_mpz_t(), p)) return {true, true};
  BigInt sylow = 1;
  BigInt rest = order;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
    rest /= static_cast<unsigned long>(p);
    sylow *= static_cast<unsigned long>(p);
  }

  if (sylow == p) {
    // Sylow of prime order: closed iff the subgroup generated by one
    // element of order p is normal.
    std::optional<Permutation> x;
    for (const auto& s : h.generators()) {
      const auto k = element_order(s);
      if (k % p == 0) {
        x = s.pow(static_cast<std::int64_t>(k / p));
        break;
      }
    }
    if (!x) {
      require_enumerable(h, budget);
      h.for_each_element([&](const Permutation& y) {
        if (element_order(y) != p) return true;
        x = y;
        return false;
      });
    }
    const PermGroup c({*x});
    for (const auto& s : h.generators()) {
      if (!c.contains(conjugate(*x, s))) return {false, false};
    }
    return {true, false};
  }

  require_enumerable(h, budget);
  PermGroup gen_by_p(h.degree());
  bool closed = true;
  h.for_each_element([&](const Permutation& y) {
    if (y.is_identity() || !is_p_element(y, p) || gen_by_p.contains(y)) return true;
    const Permutation one[] = {y};
    gen_by_p = gen_by_p.with_generators(one);
    const auto n = gen_by_p.order();
    if (sylow % n != 0) {
      closed = false;
      return false;
    }
    return true;
  });
  return {closed, false};
}

std::optional<std::uint64_t> non_mersenne_prime_in_range(std::uint64_t n) {
  if (n < 5) throw ArgumentError("n must be at least 5", std::to_string(n));
  for (auto p = n / 2 + 1; p <= n; ++p) {
    if (is_prime(p) && !is_mersenne_prime(p)) return p;
  }
  return std::nullopt;
}

PermGroup core_of_subgroup(const PermGroup& g, const PermGroup& a, const Budget& budget) {
  if (!a.is_subgroup_of(g)) {
    throw ArgumentError("membership-violation", "A is not a subgroup of G", "");
  }
  auto k = a;
  bool changed = true;
  while (changed && !k.is_trivial()) {
    changed = false;
    for (const auto& s : g.generators()) {
      const auto ks = conjugate_subgroup(k, s);
      if (ks == k) continue;
      k = subgroup_intersection(k, ks, budget);
      changed = true;
    }
  }
  return k;
}

std::optional<std::pair<Permutation, Permutation>> find_insoluble_conjugate_pair(
    const PermGroup& g, std::uint64_t q, const Budget& budget) {
  const auto reps = conjugacy_class_reps_where(
      g, [q](const Permutation& x) { return element_order(x) == q; }, budget);
  for (const auto& x : reps.reps) {
    for (const auto& y : conjugacy_class(g, x)) {
      if (!two_generated_soluble(x, y)) return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

}  // namespace solcon
