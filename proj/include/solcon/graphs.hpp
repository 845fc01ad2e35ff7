#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "solcon/perm_group.hpp"

namespace solcon {

enum class GraphKind { prime, soluble };
enum class GraphFormat { dot, json };

/// Vertices are the prime divisors of |G|, ascending; edges are pairs
/// (p, q) with p < q in lexicographic order.
struct PrimeGraph {
  std::string group_label;
  GraphKind kind = GraphKind::prime;
  std::vector<std::uint64_t> vertices;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;

  bool has_edge(std::uint64_t p, std::uint64_t q) const;
};

/// Edge p-q iff some element has order divisible by pq.
PrimeGraph prime_graph(const PermGroup& g, const std::string& label = "G",
                       const Budget& budget = {});

/// Edge p-q iff G has a soluble subgroup of order divisible by pq.
PrimeGraph soluble_graph(const PermGroup& g, const std::string& label = "G",
                         const Budget& budget = {});

/// Whether some p-element and some q-element generate a soluble subgroup.
/// This is the soluble-graph edge test for one pair of primes.
bool soluble_edge(const PermGroup& g, std::uint64_t p, std::uint64_t q, const Budget& budget = {});

/// True iff p-q is not a soluble-graph edge. Throws ArgumentError when
/// p == q or either prime does not divide |G|.
bool are_independent(const PermGroup& g, std::uint64_t p, std::uint64_t q,
                     const Budget& budget = {});

std::string export_graph(const PrimeGraph& graph, GraphFormat format);

}  // namespace solcon
