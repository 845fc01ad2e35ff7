#include <catch_amalgamated.hpp>

#include "oracle.hpp"
#include "solcon/graphs.hpp"
#include "solcon/groupio.hpp"

using namespace solcon;

namespace {

using EdgeSet = std::set<std::pair<std::uint64_t, std::uint64_t>>;

EdgeSet edge_set(const PrimeGraph& g) { return {g.edges.begin(), g.edges.end()}; }

EdgeSet oracle_prime_edges(const PermGroup& g) {
  const auto elems = oracle::closure(g.generators(), g.degree());
  const auto ps = oracle::primes_dividing(elems.size());
  EdgeSet out;
  for (const auto& x : elems) {
    const auto k = oracle::order_of(x);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      for (std::size_t j = i + 1; j < ps.size(); ++j) {
        if (k % (ps[i] * ps[j]) == 0) out.emplace(ps[i], ps[j]);
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("A5 graphs", "[graphs]") {
  const auto a5 = builtin("A5");
  const auto pg = prime_graph(a5, "A5");
  CHECK(pg.vertices == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(pg.edges.empty());
  const auto sg = soluble_graph(a5, "A5");
  CHECK(edge_set(sg) == EdgeSet{{2, 3}, {2, 5}});
  CHECK(sg.has_edge(5, 2));
  CHECK_FALSE(sg.has_edge(3, 5));
}

TEST_CASE("graphs agree with brute-force oracles", "[graphs][oracle]") {
  for (const auto& name : {"S4", "A5", "S5", "psl2_7", "S3xC5", "A4", "D10", "pgl2_7"}) {
    INFO(name);
    const auto g = builtin(name);
    const auto elems = oracle::closure(g.generators(), g.degree());
    const auto pg = prime_graph(g, name);
    const auto sg = soluble_graph(g, name);
    CHECK(edge_set(pg) == oracle_prime_edges(g));
    CHECK(edge_set(sg) == oracle::soluble_graph_edges(oracle::two_generated_subgroups(elems), elems.size()));
    CHECK(pg.vertices == oracle::primes_dividing(elems.size()));
    for (const auto& e : pg.edges) CHECK(sg.has_edge(e.first, e.second));
  }
}

TEST_CASE("independent primes", "[graphs]") {
  const auto a5 = builtin("A5");
  CHECK(are_independent(a5, 3, 5));
  CHECK_FALSE(are_independent(a5, 2, 3));
  CHECK_FALSE(are_independent(a5, 5, 2));
  CHECK(are_independent(builtin("psl2_16"), 17, 5));
  CHECK(are_independent(builtin("psl2_7"), 3, 7) == false);
  CHECK(are_independent(builtin("psl2_7"), 2, 7));
  try {
    are_independent(a5, 3, 3);
    FAIL("expected equal-primes");
  } catch (const ArgumentError& e) {
    CHECK(e.code() == "equal-primes");
  }
  try {
    are_independent(a5, 3, 7);
    FAIL("expected non-divisor");
  } catch (const ArgumentError& e) {
    CHECK(e.code() == "non-divisor");
  }
}

TEST_CASE("graph export formats", "[graphs]") {
  const auto sg = soluble_graph(builtin("A5"), "A5");
  CHECK(export_graph(sg, GraphFormat::json) ==
        R"({"group":"A5","kind":"soluble","vertices":[2,3,5],"edges":[[2,3],[2,5]]})");
  CHECK(export_graph(sg, GraphFormat::dot) ==
        "graph G {\n  label=\"A5 soluble\";\n  2;\n  3;\n  5;\n  2 -- 3;\n  2 -- 5;\n}\n");
  const auto pg = prime_graph(builtin("C6"), "C6");
  CHECK(export_graph(pg, GraphFormat::json) ==
        R"({"group":"C6","kind":"prime","vertices":[2,3],"edges":[[2,3]]})");
}

TEST_CASE("soluble groups have complete soluble graphs", "[graphs][property]") {
  for (const auto& name : {"S4", "S3xC5", "D10", "C6", "pgl2_3"}) {
    const auto g = soluble_graph(builtin(name));
    const auto n = g.vertices.size();
    CHECK(g.edges.size() == n * (n - 1) / 2);
  }
}
