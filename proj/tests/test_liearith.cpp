#include <catch_amalgamated.hpp>

#include "solcon/errors.hpp"
#include "solcon/liearith.hpp"
#include "solcon/numtheory.hpp"

using namespace solcon;

namespace {

LieSpec spec(LieFamily f, unsigned dim, std::uint64_t q) { return LieSpec::make(f, dim, q); }

/// Multiplicative order of p modulo a prime r not dividing p.
std::uint64_t mult_order(std::uint64_t p, std::uint64_t r) {
  std::uint64_t x = p % r;
  std::uint64_t k = 1;
  while (x != 1) {
    x = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * p) % r);
    ++k;
  }
  return k;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 r = 1, x = b % m;
  for (; e; e >>= 1, x = x * x % m) {
    if (e & 1) r = r * x % m;
  }
  return static_cast<std::uint64_t>(r);
}

/// Smallest prime r < limit with ord_r(p) = k, by direct search.
std::optional<std::uint64_t> oracle_ppd(std::uint64_t p, unsigned k, std::uint64_t limit) {
  for (std::uint64_t r = k + 1; r < limit; r += k) {
    if (r % p == 0 || !is_prime(r) || pow_mod(p, k, r) != 1) continue;
    bool exact = true;
    for (unsigned i = 1; i < k; ++i) {
      if (k % i == 0 && pow_mod(p, i, r) == 1) exact = false;
    }
    if (exact) return r;
  }
  return std::nullopt;
}

bool is_ppd(std::uint64_t p, unsigned k, const BigInt& r) {
  BigInt x;
  const BigInt base = p;
  for (unsigned i = 1; i <= k; ++i) {
    mpz_powm_ui(x.get_mpz_t(), base.get_mpz_t(), i, r.get_mpz_t());
    if (x == 1) return i == k;
  }
  return false;
}

}  // namespace

TEST_CASE("simple group orders", "[liearith]") {
  struct Row {
    LieFamily f;
    unsigned dim;
    std::uint64_t q;
    const char* order;
    std::uint64_t out;
  };
  const std::vector<Row> rows = {
      {LieFamily::linear, 2, 4, "60", 2},
      {LieFamily::linear, 2, 7, "168", 2},
      {LieFamily::linear, 2, 9, "360", 4},
      {LieFamily::linear, 3, 4, "20160", 12},
      {LieFamily::linear, 5, 2, "9999360", 2},
      {LieFamily::linear, 6, 2, "20158709760", 2},
      {LieFamily::unitary, 3, 3, "6048", 2},
      {LieFamily::unitary, 4, 2, "25920", 2},
      {LieFamily::symplectic, 2, 3, "25920", 2},
      {LieFamily::symplectic, 3, 2, "1451520", 1},
      {LieFamily::symplectic, 2, 4, "979200", 4},
      {LieFamily::odd_orthogonal, 3, 3, "4585351680", 2},
      {LieFamily::minus_orthogonal, 4, 2, "197406720", 2},
      {LieFamily::plus_orthogonal, 4, 2, "174182400", 6},
  };
  for (const auto& row : rows) {
    INFO(to_string(row.f) << " " << row.dim << " " << row.q);
    const auto o = simple_group_order(spec(row.f, row.dim, row.q));
    CHECK(o.order.get_str() == row.order);
    CHECK(o.out_order == row.out);
  }
}

TEST_CASE("family parameter validation", "[liearith]") {
  CHECK_THROWS_AS(spec(LieFamily::linear, 2, 6), ArgumentError);
  CHECK_THROWS_AS(spec(LieFamily::linear, 1, 7), ArgumentError);
  CHECK_THROWS_AS(spec(LieFamily::unitary, 2, 3), ArgumentError);
  CHECK_THROWS_AS(spec(LieFamily::odd_orthogonal, 3, 4), ArgumentError);
  CHECK_THROWS_AS(spec(LieFamily::plus_orthogonal, 3, 2), ArgumentError);
  CHECK(parse_family("plus-orthogonal") == LieFamily::plus_orthogonal);
  CHECK(parse_family("linear") == LieFamily::linear);
  CHECK_FALSE(parse_family("exceptional").has_value());
  const auto s = spec(LieFamily::linear, 3, 27);
  CHECK(s.p == 3);
  CHECK(s.e == 3);
}

TEST_CASE("Zsigmondy frozen values", "[liearith]") {
  CHECK_FALSE(zsigmondy(2, 6).has_value());
  CHECK_FALSE(zsigmondy(7, 2).has_value());
  CHECK_FALSE(zsigmondy(3, 2).has_value());
  CHECK(zsigmondy(5, 2) == BigInt(3));
  CHECK(zsigmondy(2, 3) == BigInt(7));
  CHECK(zsigmondy(2, 4) == BigInt(5));
  CHECK(zsigmondy(2, 5) == BigInt(31));
  CHECK(zsigmondy(2, 11) == BigInt(23));
  CHECK(zsigmondy(2, 20) == BigInt(41));
  CHECK(zsigmondy(2, 8) == BigInt(17));
  CHECK(zsigmondy(3, 37) == BigInt(13097927));
  CHECK(zsigmondy(2, 1279)->get_str().size() > 0);
  CHECK_FALSE(zsigmondy_exists(2, 6));
  CHECK(zsigmondy_exists(2, 7));
  CHECK_THROWS_AS(zsigmondy(6, 3), ArgumentError);
}

TEST_CASE("Zsigmondy agrees with a direct multiplicative-order search", "[liearith][oracle]") {
  const std::uint64_t limit = 200'000;
  for (std::uint64_t p : primes_up_to(60)) {
    for (unsigned k = 2; k <= 24; ++k) {
      INFO("p=" << p << " k=" << k);
      const auto got = zsigmondy(p, k);
      const auto expected = oracle_ppd(p, k, limit);
      if (expected) {
        REQUIRE(got.has_value());
        CHECK(*got == BigInt(*expected));
      } else if (got) {
        CHECK(*got >= limit);
        CHECK(is_ppd(p, k, *got));
      }
    }
  }
}

TEST_CASE("primitive part carries exactly the primitive divisors", "[liearith][property]") {
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    for (unsigned k = 2; k <= 18; ++k) {
      const auto m = primitive_part(p, k);
      for (std::uint64_t r : primes_up_to(5000)) {
        if (r == p) continue;
        const bool divides = mpz_divisible_ui_p(m.get_mpz_t(), r) != 0;
        CHECK(divides == (mult_order(p, r) == k));
      }
    }
  }
}

TEST_CASE("family primes", "[liearith]") {
  const auto l62 = family_primes(spec(LieFamily::linear, 6, 2));
  CHECK_FALSE(l62.r.has_value());
  CHECK(l62.s == BigInt(31));
  CHECK(l62.t == BigInt(5));
  const auto l52 = family_primes(spec(LieFamily::linear, 5, 2));
  CHECK(l52.r == BigInt(31));
  CHECK(l52.s == BigInt(5));
  CHECK(l52.t == BigInt(7));
  const auto l2_16 = family_primes(spec(LieFamily::linear, 2, 16));
  CHECK(l2_16.r == BigInt(17));
  CHECK(l2_16.s == BigInt(5));
  CHECK_FALSE(l2_16.t.has_value());
  const auto sp = family_primes(spec(LieFamily::symplectic, 3, 3));
  CHECK(sp.r == BigInt(7));
  CHECK(sp.s == BigInt(13));
  CHECK(sp.t == BigInt(5));
}

TEST_CASE("p-part bound", "[liearith]") {
  const BigInt n = simple_group_order(spec(LieFamily::linear, 6, 2)).order;
  const auto b = l1_bound(7, n, n / 63, 2);
  CHECK(b.n_exp == 2);
  CHECK(b.b_exp == 1);
  CHECK(b.out_exp == 0);
  CHECK(b.guaranteed_exp == 1);
  CHECK(l1_bound(2, 64, 2, 4).guaranteed_exp == 3);
  CHECK(l1_bound(3, 10, 9, 1).guaranteed_exp == 0);
  CHECK_THROWS_AS(l1_bound(4, 64, 2, 4), ArgumentError);
}

TEST_CASE("independence certificates", "[liearith]") {
  const auto l52 = spec(LieFamily::linear, 5, 2);
  const auto c = ack_certificate(l52, 31, 7);
  CHECK(c.certified);
  CHECK(c.cases == std::vector<std::string>{"pi(n) u pi(q^n-1)"});
  CHECK_FALSE(ack_certificate(l52, 31, 5).certified);
  try {
    ack_certificate(l52, 7, 31);
    FAIL("expected r-mismatch");
  } catch (const ArgumentError& e) {
    CHECK(e.code() == "r-mismatch");
  }
  CHECK_THROWS_AS(ack_certificate(l52, 31, 31), ArgumentError);

  const auto l62 = spec(LieFamily::linear, 6, 2);
  CHECK_THROWS_AS(ack_certificate(l62, 7, 31), ArgumentError);
  const auto sub = ack_certificate_substituted(l62, 7, 31);
  CHECK(sub.certified);
  CHECK_FALSE(ack_certificate_substituted(l62, 7, 3).certified);

  // n = 2^l with q = p adds the second linear case.
  const auto l42 = spec(LieFamily::linear, 4, 2);
  const auto c42 = ack_certificate_substituted(l42, 5, 7);
  CHECK(c42.cases.size() == 2);
  CHECK(c42.certified);
  CHECK_FALSE(ack_certificate_substituted(l42, 5, 3).certified);
}
