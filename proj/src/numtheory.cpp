#include "solcon/numtheory.hpp"

#include <cmath>
#include <numeric>

#include "solcon/errors.hpp"

namespace solcon {
namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a deterministic witness set below 2^64.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

unsigned valuation(std::uint64_t n, std::uint64_t p) {
  unsigned v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

bool is_mersenne_prime(std::uint64_t p) {
  if (!is_prime(p)) return false;
  const auto m = p + 1;
  return (m & (m - 1)) == 0;
}

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  const auto g = std::gcd(a, b);
  const auto q = a / g;
  if (b != 0 && q > UINT64_MAX / b) throw ResourceError("element order overflows 64 bits");
  return q * b;
}

std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  if (is_prime(q)) return std::make_pair(q, 1u);
  // Composite prime powers p^e with e >= 2 have p <= 2^32.
  for (unsigned e = 64; e >= 2; --e) {
    auto r = static_cast<std::uint64_t>(std::pow(static_cast<long double>(q), 1.0L / e));
    for (auto c = r > 1 ? r - 1 : 1; c <= r + 1; ++c) {
      if (c < 2) continue;
      u128 v = 1;
      for (unsigned i = 0; i < e && v <= q; ++i) v *= c;
      if (v == q && is_prime(c)) return std::make_pair(c, e);
    }
  }
  return std::nullopt;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<bool> composite(n + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (auto j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace solcon
