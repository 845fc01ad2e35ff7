#include <catch_amalgamated.hpp>

#include <random>

#include "oracle.hpp"
#include "solcon/perm_group.hpp"

using namespace solcon;

namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<Point>> cycles) {
  return Permutation::from_cycles(n, cycles);
}

PermGroup a5() { return build_group({cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{0, 1, 2}})}); }
PermGroup s4() { return build_group({cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})}); }
PermGroup s3() { return build_group({cyc(3, {{0, 1}}), cyc(3, {{0, 1, 2}})}); }

}  // namespace

TEST_CASE("permutation basics", "[permutation]") {
  const auto p = cyc(5, {{0, 1, 2}, {3, 4}});
  CHECK(element_order(p) == 6);
  CHECK(element_order(Permutation(7)) == 1);
  const auto seven = cyc(10, {{0, 1, 2, 3, 4, 5, 6}});
  CHECK(element_order(seven) == 7);
  CHECK(is_p_element(seven, 7));
  CHECK_FALSE(is_p_element(p, 2));
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.to_string() == "(1,2,3)(4,5)");
  CHECK(p.to_string(false) == "(0,1,2)(3,4)");
  CHECK(Permutation(3).to_string() == "()");
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), ArgumentError);
  CHECK_THROWS_AS(p * Permutation(4), ArgumentError);
}

TEST_CASE("right action and conjugation conventions", "[permutation]") {
  const auto a = cyc(3, {{0, 1}});
  const auto b = cyc(3, {{1, 2}});
  // 0 -a-> 1 -b-> 2
  CHECK((a * b)[0] == 2);
  const auto x = cyc(5, {{0, 1, 2}});
  const auto g = cyc(5, {{0, 3}, {1, 4}});
  CHECK(conjugate(x, g) == cyc(5, {{3, 4, 2}}));
  CHECK(conjugate(x, g) == g.inverse() * x * g);
  CHECK(commutator(a, b) == a.inverse() * b.inverse() * a * b);
}

TEST_CASE("element order agrees with iterated composition", "[permutation][property]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Point> img(9);
    std::iota(img.begin(), img.end(), Point{0});
    std::shuffle(img.begin(), img.end(), rng);
    Permutation p(img);
    const auto k = element_order(p);
    if (k > 100) continue;
    CHECK(k == oracle::order_of(oracle::images(p)));
  }
}

TEST_CASE("build_group orders", "[permgroup]") {
  const auto A5 = a5();
  CHECK(A5.order() == 60);
  CHECK(oracle::closure(A5.generators(), 5).size() == 60);
  CHECK(build_group({Permutation(4)}).order() == 1);
  const auto S4 = s4();
  CHECK(S4.order() == 24);
  CHECK(oracle::closure(S4.generators(), 4).size() == 24);
  CHECK_THROWS_AS(build_group({}), ArgumentError);
  CHECK_THROWS_AS(build_group({cyc(4, {{0, 1}}), cyc(5, {{0, 1}})}), ArgumentError);
}

TEST_CASE("group order matches closure on larger groups", "[permgroup][property]") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 4 + trial % 5;
    std::vector<Permutation> gens;
    for (int k = 0; k < 2; ++k) {
      std::vector<Point> img(n);
      std::iota(img.begin(), img.end(), Point{0});
      // Short random products keep some groups proper.
      std::shuffle(img.begin(), img.begin() + static_cast<long>(2 + rng() % (n - 1)), rng);
      gens.emplace_back(img);
    }
    const auto g = build_group(gens);
    const auto elems = oracle::closure(gens, n);
    REQUIRE(g.order() == static_cast<unsigned long>(elems.size()));
    for (const auto& e : elems) CHECK(g.contains(Permutation(e)));
  }
}

TEST_CASE("membership", "[permgroup]") {
  const auto A5 = a5();
  CHECK(contains(A5, cyc(5, {{0, 1, 2}})));
  CHECK_FALSE(contains(A5, cyc(5, {{0, 1}})));
  const auto S4in5 = build_group({cyc(5, {{0, 1}}), cyc(5, {{0, 1, 2, 3}})});
  CHECK_FALSE(S4in5.contains(cyc(5, {{0, 1, 2, 3, 4}})));
  CHECK_THROWS_AS(A5.contains(Permutation(4)), ArgumentError);
}

TEST_CASE("closure under products and inverses", "[permgroup][property]") {
  const auto A5 = a5();
  const auto elems = A5.elements();
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto& g = elems[rng() % elems.size()];
    const auto& h = elems[rng() % elems.size()];
    CHECK(A5.contains(g * h));
    CHECK(A5.contains(g.inverse()));
  }
}

TEST_CASE("lexicographic enumeration and dense indices", "[permgroup]") {
  for (const auto& g : {a5(), s4(), s3()}) {
    const auto elems = g.elements();
    CHECK(std::is_sorted(elems.begin(), elems.end()));
    CHECK(std::adjacent_find(elems.begin(), elems.end()) == elems.end());
    CHECK(elems.size() == g.order_u64());
    std::set<std::uint64_t> idx;
    for (const auto& e : elems) idx.insert(g.element_index(e));
    CHECK(idx.size() == elems.size());
    CHECK(*idx.rbegin() == elems.size() - 1);
  }
}

TEST_CASE("conjugacy class reps", "[permgroup]") {
  const auto A5 = a5();
  const auto cr = conjugacy_class_reps(A5);
  // Reps come in lexicographic order: (3,4,5) precedes (2,3)(4,5).
  CHECK(cr.class_sizes == std::vector<std::uint64_t>{1, 20, 15, 12, 12});
  auto sorted = cr.class_sizes;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<std::uint64_t>{1, 12, 12, 15, 20});
  const auto oracle_sizes = oracle::class_sizes(oracle::closure(A5.generators(), 5));
  CHECK(std::vector<std::uint64_t>(oracle_sizes.begin(), oracle_sizes.end()) == cr.class_sizes);

  const auto trivial = conjugacy_class_reps(PermGroup(3));
  CHECK(trivial.class_sizes == std::vector<std::uint64_t>{1});

  const auto S3 = conjugacy_class_reps(s3());
  CHECK(S3.class_sizes == std::vector<std::uint64_t>{1, 3, 2});

  Budget tiny;
  tiny.max_enumeration_order = 10;
  CHECK_THROWS_AS(conjugacy_class_reps(A5, tiny), ResourceError);
}

TEST_CASE("conjugating a class rep stays in its class", "[permgroup][property]") {
  const auto S4 = s4();
  const auto cr = conjugacy_class_reps(S4);
  const auto elems = S4.elements();
  for (std::size_t i = 0; i < cr.reps.size(); ++i) {
    const auto cls = conjugacy_class(S4, cr.reps[i]);
    CHECK(cls.size() == cr.class_sizes[i]);
    CHECK(cls.front() == cr.reps[i]);
    for (std::size_t k = 0; k < elems.size(); k += 3) {
      const auto y = conjugate(cr.reps[i], elems[k]);
      CHECK(std::binary_search(cls.begin(), cls.end(), y));
      for (std::size_t j = 0; j < cr.reps.size(); ++j) {
        if (j == i) continue;
        const auto other = conjugacy_class(S4, cr.reps[j]);
        CHECK_FALSE(std::binary_search(other.begin(), other.end(), y));
      }
    }
  }
}

TEST_CASE("conjugate_subgroup", "[permgroup]") {
  const auto A5 = a5();
  const auto A4 = build_group({cyc(5, {{0, 1, 2}}), cyc(5, {{1, 2, 3}})});
  REQUIRE(A4.order() == 12);
  const auto A4g = conjugate_subgroup(A4, cyc(5, {{0, 4}, {1, 2}}));
  CHECK(A4g.order() == 12);
  CHECK(A4g.is_subgroup_of(A5));
  CHECK(conjugate_subgroup(A5, Permutation(5)) == A5);
  const auto c3 = build_group({cyc(5, {{0, 1, 2}})});
  const auto c3g = conjugate_subgroup(c3, cyc(5, {{0, 3}, {1, 4}}));
  CHECK(c3g.generators().front() == cyc(5, {{3, 4, 2}}));
  CHECK_THROWS_AS(conjugate_subgroup(c3, Permutation(4)), ArgumentError);
}

TEST_CASE("large degree chain stays exact", "[permgroup]") {
  std::vector<Point> shift(40);
  for (std::size_t i = 0; i < 40; ++i) shift[i] = static_cast<Point>((i + 1) % 40);
  const auto s40 = build_group({Permutation(shift), cyc(40, {{0, 1}})});
  BigInt fact = 1;
  for (unsigned long i = 2; i <= 40; ++i) fact *= i;
  CHECK(s40.order() == fact);
  Budget b;
  b.max_degree = 30;
  CHECK_THROWS_AS(build_group({Permutation(shift)}, b), ResourceError);
}
