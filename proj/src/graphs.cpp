#include "solcon/graphs.hpp"

#include <atomic>
#include <sstream>

#include <nlohmann/json.hpp>

#include "solcon/numtheory.hpp"
#include "solcon/parallel.hpp"
#include "solcon/structure.hpp"

namespace solcon {

namespace {

std::vector<std::uint64_t> order_primes(const PermGroup& g) {
  const auto order = g.order();
  std::vector<std::uint64_t> out;
  for (auto p : primes_up_to(g.degree())) {
    if (mpz_divisible_ui_p(order.get_mpz_t(), p)) out.push_back(p);
  }
  return out;
}

bool is_nontrivial_p_element(const Permutation& x, std::uint64_t p) {
  return !x.is_identity() && is_p_element(x, p);
}

}  // namespace

bool PrimeGraph::has_edge(std::uint64_t p, std::uint64_t q) const {
  if (p > q) std::swap(p, q);
  return std::find(edges.begin(), edges.end(), std::make_pair(p, q)) != edges.end();
}

PrimeGraph prime_graph(const PermGroup& g, const std::string& label, const Budget& budget) {
  PrimeGraph out{label, GraphKind::prime, order_primes(g), {}};
  std::vector<std::uint64_t> orders;
  for (const auto& x : conjugacy_class_reps(g, budget).reps) orders.push_back(element_order(x));
  for (std::size_t i = 0; i < out.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < out.vertices.size(); ++j) {
      const auto pq = out.vertices[i] * out.vertices[j];
      if (std::any_of(orders.begin(), orders.end(), [&](auto k) { return k % pq == 0; })) {
        out.edges.emplace_back(out.vertices[i], out.vertices[j]);
      }
    }
  }
  return out;
}

// A soluble subgroup of order divisible by pq has a Hall {p,q}-subgroup,
// which contains a p-element and a q-element generating a soluble group;
// the converse is immediate. Existence of such a pair is invariant under
// simultaneous conjugation, so x only ranges over class representatives.
bool soluble_edge(const PermGroup& g, std::uint64_t p, std::uint64_t q, const Budget& budget) {
  const auto xs = conjugacy_class_reps_where(
      g, [p](const Permutation& x) { return is_nontrivial_p_element(x, p); }, budget);
  const auto ys = elements_where(
      g, [q](const Permutation& y) { return is_nontrivial_p_element(y, q); }, budget);
  const auto pairs = static_cast<long double>(xs.reps.size()) * static_cast<long double>(ys.size());
  if (pairs > static_cast<long double>(budget.max_pairs)) {
    throw ResourceError("pair budget exceeded",
                        std::to_string(xs.reps.size()) + " x " + std::to_string(ys.size()));
  }
  for (const auto& x : xs.reps) {
    const auto hit = parallel_find_first(ys.size(), budget.effective_jobs(),
                                         [&](std::size_t k) { return two_generated_soluble(x, ys[k]); });
    if (hit != ys.size()) return true;
  }
  return false;
}

PrimeGraph soluble_graph(const PermGroup& g, const std::string& label, const Budget& budget) {
  PrimeGraph out{label, GraphKind::soluble, order_primes(g), {}};
  const bool whole = is_soluble(g);
  const auto pg = whole ? PrimeGraph{} : prime_graph(g, label, budget);
  for (std::size_t i = 0; i < out.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < out.vertices.size(); ++j) {
      const auto p = out.vertices[i];
      const auto q = out.vertices[j];
      // G itself, or a cyclic subgroup of order pq, settles the edge.
      if (whole || pg.has_edge(p, q) || soluble_edge(g, p, q, budget)) out.edges.emplace_back(p, q);
    }
  }
  return out;
}

bool are_independent(const PermGroup& g, std::uint64_t p, std::uint64_t q, const Budget& budget) {
  if (p == q) throw ArgumentError("equal-primes", "p and q must differ", std::to_string(p));
  const auto order = g.order();
  for (auto r : {p, q}) {
    if (!is_prime(r) || !mpz_divisible_ui_p(order.get_mpz_t(), r)) {
      throw ArgumentError("non-divisor", "prime does not divide the group order", std::to_string(r));
    }
  }
  return !soluble_edge(g, p, q, budget);
}

std::string export_graph(const PrimeGraph& graph, GraphFormat format) {
  const char* kind = graph.kind == GraphKind::prime ? "prime" : "soluble";
  if (format == GraphFormat::json) {
    nlohmann::ordered_json j;
    j["group"] = graph.group_label;
    j["kind"] = kind;
    j["vertices"] = graph.vertices;
    auto edges = nlohmann::ordered_json::array();
    for (const auto& [p, q] : graph.edges) edges.push_back({p, q});
    j["edges"] = edges;
    return j.dump();
  }
  std::ostringstream out;
  out << "graph G {\n  label=\"" << graph.group_label << ' ' << kind << "\";\n";
  for (auto v : graph.vertices) out << "  " << v << ";\n";
  for (const auto& [p, q] : graph.edges) out << "  " << p << " -- " << q << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace solcon
