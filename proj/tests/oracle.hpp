#pragma once

// Test-only brute-force routines. They work on raw image vectors and never
// touch the stabilizer chain, so they serve as independent oracles.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "solcon/permutation.hpp"

namespace oracle {

using Images = std::vector<solcon::Point>;

inline Images mul(const Images& a, const Images& b) {
  Images r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

inline Images inv(const Images& a) {
  Images r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<solcon::Point>(i);
  return r;
}

inline Images identity(std::size_t n) {
  Images r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<solcon::Point>(i);
  return r;
}

inline Images images(const solcon::Permutation& p) { return {p.images().begin(), p.images().end()}; }

/// Element set of the group generated by `gens`, via breadth-first closure.
inline std::set<Images> closure(const std::vector<Images>& gens, std::size_t degree) {
  std::set<Images> seen{identity(degree)};
  std::vector<Images> queue{identity(degree)};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (const auto& g : gens) {
      auto y = mul(queue[k], g);
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  return seen;
}

inline std::set<Images> closure(const std::vector<solcon::Permutation>& gens, std::size_t degree) {
  std::vector<Images> g;
  for (const auto& p : gens) g.push_back(images(p));
  return closure(g, degree);
}

/// Derived-series orders by explicit commutator closure.
inline std::vector<std::size_t> derived_orders(std::set<Images> g) {
  std::vector<std::size_t> out{g.size()};
  const auto n = g.begin()->size();
  while (true) {
    std::set<Images> comms;
    for (const auto& a : g) {
      for (const auto& b : g) comms.insert(mul(mul(inv(a), inv(b)), mul(a, b)));
    }
    auto next = closure(std::vector<Images>(comms.begin(), comms.end()), n);
    if (next.size() == g.size()) break;
    out.push_back(next.size());
    g = std::move(next);
  }
  return out;
}

/// Conjugacy class sizes in order of the lexicographically least member.
inline std::vector<std::size_t> class_sizes(const std::set<Images>& g) {
  std::set<Images> done;
  std::vector<std::size_t> sizes;
  for (const auto& x : g) {
    if (done.count(x)) continue;
    std::set<Images> cls;
    for (const auto& h : g) cls.insert(mul(mul(inv(h), x), h));
    done.insert(cls.begin(), cls.end());
    sizes.push_back(cls.size());
  }
  return sizes;
}

inline std::uint64_t order_of(const Images& x) {
  auto y = x;
  std::uint64_t k = 1;
  while (y != identity(x.size())) {
    y = mul(y, x);
    ++k;
  }
  return k;
}

inline bool soluble(const std::set<Images>& g) { return derived_orders(g).back() == 1; }

/// Every subgroup generated by at most two elements. For the small groups
/// used in the tests (S4, A5, S5, ...) this is every subgroup.
inline std::set<std::set<Images>> two_generated_subgroups(const std::set<Images>& g) {
  std::set<std::set<Images>> out;
  const std::vector<Images> elems(g.begin(), g.end());
  const auto n = elems.front().size();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i; j < elems.size(); ++j) out.insert(closure({elems[i], elems[j]}, n));
  }
  return out;
}

inline bool all_two_generated_soluble(const std::set<Images>& g) {
  const std::vector<Images> elems(g.begin(), g.end());
  const auto n = elems.front().size();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      if (!soluble(closure({elems[i], elems[j]}, n))) return false;
    }
  }
  return true;
}

inline std::vector<std::uint64_t> primes_dividing(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  return out;
}

/// Soluble-graph edges read off a subgroup list: p-q is an edge iff some
/// soluble member has order divisible by pq.
inline std::set<std::pair<std::uint64_t, std::uint64_t>> soluble_graph_edges(
    const std::set<std::set<Images>>& subgroups, std::uint64_t order) {
  std::set<std::pair<std::uint64_t, std::uint64_t>> edges;
  const auto ps = primes_dividing(order);
  for (const auto& h : subgroups) {
    if (!soluble(h)) continue;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      for (std::size_t j = i + 1; j < ps.size(); ++j) {
        if (h.size() % (ps[i] * ps[j]) == 0) edges.emplace(ps[i], ps[j]);
      }
    }
  }
  return edges;
}

/// Largest soluble normal subgroup, as the union of all soluble normal
/// subgroups among `subgroups` (a complete list).
inline std::set<Images> radical(const std::set<Images>& g, const std::set<std::set<Images>>& subgroups) {
  std::set<Images> best{identity(g.begin()->size())};
  for (const auto& h : subgroups) {
    if (h.size() <= best.size() || !soluble(h)) continue;
    bool normal = true;
    for (const auto& x : g) {
      for (const auto& y : h) {
        if (!h.count(mul(mul(inv(x), y), x))) {
          normal = false;
          break;
        }
      }
      if (!normal) break;
    }
    if (normal) best = h;
  }
  return best;
}

}  // namespace oracle
