#include <catch_amalgamated.hpp>

#include <random>

#include "oracle.hpp"
#include "solcon/groupio.hpp"
#include "solcon/structure.hpp"

using namespace solcon;

namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<Point>> cycles) {
  return Permutation::from_cycles(n, cycles);
}

std::vector<std::uint64_t> orders_u64(const DerivedSeries& s) {
  std::vector<std::uint64_t> out;
  for (const auto& o : s.orders()) out.push_back(to_u64(o));
  return out;
}

std::set<oracle::Images> elements_of(const PermGroup& g) {
  return oracle::closure(g.generators(), g.degree());
}

const std::vector<std::string> kSmall = {"S3", "S4", "A4", "A5", "S5", "D8", "D10", "C6", "V4",
                                         "psl2_7", "S3xC5", "A4_in_A6", "pgl2_5"};

}  // namespace

TEST_CASE("derived series frozen values", "[structure]") {
  CHECK(orders_u64(derived_series(builtin("S4"))) == std::vector<std::uint64_t>{24, 12, 4, 1});
  CHECK(orders_u64(derived_series(builtin("A5"))) == std::vector<std::uint64_t>{60, 60});
  CHECK(orders_u64(derived_series(PermGroup(5))) == std::vector<std::uint64_t>{1});
  CHECK(orders_u64(derived_series(builtin("S5"))) == std::vector<std::uint64_t>{120, 60, 60});
  CHECK(derived_series(builtin("S4")).length() == 3);
  CHECK(derived_series(builtin("C6")).length() == 1);
}

TEST_CASE("derived series agrees with commutator closure oracle", "[structure][oracle]") {
  for (const auto& name : kSmall) {
    INFO(name);
    const auto g = builtin(name);
    const auto expected = oracle::derived_orders(elements_of(g));
    auto got = orders_u64(derived_series(g));
    // The oracle stops before repeating a perfect term.
    if (got.size() > 1 && got[got.size() - 1] == got[got.size() - 2]) got.pop_back();
    CHECK(got == std::vector<std::uint64_t>(expected.begin(), expected.end()));
    CHECK(is_soluble(g) == oracle::soluble(elements_of(g)));
  }
}

TEST_CASE("solubility of larger groups", "[structure]") {
  CHECK_FALSE(is_soluble(builtin("A7")));
  CHECK_FALSE(is_soluble(builtin("S6")));
  CHECK_FALSE(is_soluble(builtin("psl2_8")));
  CHECK_FALSE(is_soluble(builtin("A4xA5")));
  CHECK(is_soluble(builtin("S4xC5")));
  CHECK(is_soluble(builtin("D8xS3")));
  CHECK(is_soluble(builtin("pgl2_3")));
  CHECK(is_soluble(PermGroup(1)));
}

TEST_CASE("two-generated solubility matches the oracle on random pairs", "[structure][property]") {
  std::mt19937_64 rng(11);
  for (auto [n, trials] : {std::pair<std::size_t, int>{5, 150}, {6, 25}}) {
    const auto elems = symmetric_group(n).elements();
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    for (int trial = 0; trial < trials; ++trial) {
      const auto& a = elems[pick(rng)];
      const auto& b = elems[pick(rng)];
      const bool expected = oracle::soluble(oracle::closure({a, b}, n));
      CHECK(two_generated_soluble(a, b) == expected);
      CHECK(two_generated_soluble(a, b) == is_soluble(build_group({a, b})));
    }
  }
}

TEST_CASE("normal closure and commutator subgroups", "[structure]") {
  const auto s4 = builtin("S4");
  CHECK(to_u64(normal_closure(s4, {cyc(4, {{0, 1}})}).order()) == 24);
  CHECK(to_u64(normal_closure(s4, {cyc(4, {{0, 1}, {2, 3}})}).order()) == 4);
  CHECK(to_u64(normal_closure(s4, {cyc(4, {{0, 1, 2}})}).order()) == 12);
  CHECK(normal_closure(s4, {}).is_trivial());
  try {
    normal_closure(builtin("A4"), {cyc(4, {{0, 1}})});
    FAIL("expected membership-violation");
  } catch (const ArgumentError& e) {
    CHECK(e.code() == "membership-violation");
  }
  CHECK(derived_subgroup(s4) == builtin("A4"));
  const auto a4 = builtin("A4");
  const auto c2 = builtin("C2_in_S4");
  // [A4, <(1,2)>] is A4 itself: it is normal in S4 and not inside V4.
  CHECK(to_u64(commutator_of_subgroups(a4, c2, s4).order()) == 12);
  CHECK(to_u64(commutator_of_subgroups(builtin("V4_in_S4"), builtin("V4_in_S4"), s4).order()) == 1);
}

TEST_CASE("soluble radical frozen values", "[structure]") {
  for (auto method : {RadicalMethod::gkps, RadicalMethod::bruteforce}) {
    CHECK(to_u64(soluble_radical(builtin("S4xA5"), method).order()) == 24);
    CHECK(soluble_radical(builtin("A5"), method).is_trivial());
    CHECK(soluble_radical(builtin("psl2_7"), method).is_trivial());
    CHECK(to_u64(soluble_radical(builtin("S4"), method).order()) == 24);
    CHECK(to_u64(soluble_radical(builtin("S3xC5"), method).order()) == 30);
    CHECK(to_u64(soluble_radical(builtin("C5xA5"), method).order()) == 5);
  }
  CHECK(soluble_radical(builtin("A7"), RadicalMethod::gkps).is_trivial());
}

TEST_CASE("soluble radical matches the subgroup-list oracle", "[structure][oracle]") {
  for (const auto& name : {"S4", "A5", "S5", "D8", "S3xC5", "C2xA5", "pgl2_5"}) {
    INFO(name);
    const auto g = builtin(name);
    const auto elems = elements_of(g);
    const auto expected = oracle::radical(elems, oracle::two_generated_subgroups(elems));
    const auto r = soluble_radical(g, RadicalMethod::gkps);
    CHECK(to_u64(r.order()) == expected.size());
    CHECK(elements_of(r) == expected);
  }
}

TEST_CASE("p-closure", "[structure]") {
  const auto s4 = builtin("S4");
  CHECK_FALSE(is_p_closed(s4, 3).p_closed);
  CHECK_FALSE(is_p_closed(s4, 2).p_closed);
  CHECK(is_p_closed(builtin("A4"), 2).p_closed);
  CHECK_FALSE(is_p_closed(builtin("A4"), 3).p_closed);
  CHECK(is_p_closed(builtin("S3"), 3).p_closed);
  const auto vac = is_p_closed(s4, 5);
  CHECK(vac.p_closed);
  CHECK(vac.vacuous);
  CHECK(is_p_closed(builtin("D10"), 5).p_closed);
  CHECK(is_p_closed(builtin("C6"), 2).p_closed);
  CHECK_FALSE(is_p_closed(builtin("A5"), 5).p_closed);
}

TEST_CASE("p-closure matches the oracle definition", "[structure][oracle]") {
  for (const auto& name : {"S3", "S4", "A4", "D8", "D10", "S3xC5", "C6", "A5", "pgl2_3"}) {
    const auto g = builtin(name);
    const auto elems = elements_of(g);
    for (auto p : oracle::primes_dividing(elems.size())) {
      INFO(name << " p=" << p);
      std::vector<oracle::Images> pelts;
      for (const auto& x : elems) {
        auto k = oracle::order_of(x);
        while (k % p == 0) k /= p;
        if (k == 1) pelts.push_back(x);
      }
      auto size = oracle::closure(pelts, g.degree()).size();
      while (size % p == 0) size /= p;
      CHECK(is_p_closed(g, p).p_closed == (size == 1));
    }
  }
}

TEST_CASE("non-Mersenne prime in (n/2, n]", "[structure]") {
  CHECK(non_mersenne_prime_in_range(5) == 5u);
  CHECK(non_mersenne_prime_in_range(7) == 5u);
  CHECK(non_mersenne_prime_in_range(9) == 5u);
  CHECK_FALSE(non_mersenne_prime_in_range(10).has_value());
  CHECK(non_mersenne_prime_in_range(12) == 11u);
  CHECK(non_mersenne_prime_in_range(30) == 17u);
  CHECK_THROWS_AS(non_mersenne_prime_in_range(4), ArgumentError);
}

TEST_CASE("core of a subgroup", "[structure]") {
  const auto s4 = builtin("S4");
  CHECK(core_of_subgroup(s4, builtin("S3_in_S4")).is_trivial());
  CHECK(to_u64(core_of_subgroup(s4, builtin("D8_in_S4")).order()) == 4);
  CHECK(to_u64(core_of_subgroup(s4, builtin("A4_in_S4")).order()) == 12);
  CHECK(core_of_subgroup(builtin("A5"), builtin("A4_in_A5")).is_trivial());
}

TEST_CASE("insoluble conjugate pairs", "[structure]") {
  const auto a5 = builtin("A5");
  const auto pair = find_insoluble_conjugate_pair(a5, 3);
  REQUIRE(pair.has_value());
  CHECK(element_order(pair->first) == 3);
  CHECK(element_order(pair->second) == 3);
  CHECK_FALSE(two_generated_soluble(pair->first, pair->second));
  // Two involutions generate a dihedral group.
  CHECK_FALSE(find_insoluble_conjugate_pair(a5, 2).has_value());
  CHECK_FALSE(find_insoluble_conjugate_pair(builtin("S4"), 3).has_value());
}
