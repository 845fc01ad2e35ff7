#include "solcon/liearith.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "solcon/errors.hpp"
#include "solcon/numtheory.hpp"

namespace solcon {

extern const char* const kZsigmondyFactorTable;

namespace {

constexpr std::uint64_t kTrialLimit = 1u << 20;
constexpr std::uint64_t kRhoIterations = 1u << 22;

BigInt pow_big(std::uint64_t base, unsigned long exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

BigInt pow_big(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

int mobius(unsigned n) {
  int m = 1;
  for (auto p : prime_divisors(n)) {
    if ((n / p) % p == 0) return 0;
    m = -m;
  }
  return m;
}

bool probable_prime(const BigInt& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

/// Brent's variant of Pollard rho; a nontrivial factor or nullopt.
std::optional<BigInt> pollard_brent(const BigInt& n) {
  if (mpz_even_p(n.get_mpz_t())) return BigInt(2);
  for (unsigned long c = 1; c <= 4; ++c) {
    BigInt y = 2, x, ys, q = 1, g = 1;
    auto f = [&](BigInt& v) {
      v = v * v + c;
      v %= n;
    };
    std::uint64_t r = 1;
    std::uint64_t spent = 0;
    const std::uint64_t m = 128;
    while (g == 1 && spent < kRhoIterations) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) f(y);
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        const auto steps = std::min(m, r - k);
        for (std::uint64_t i = 0; i < steps; ++i) {
          f(y);
          q = q * abs(x - y) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += steps;
      }
      spent += r;
      r *= 2;
    }
    if (g == n) {
      do {
        f(ys);
        const BigInt diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return std::nullopt;
}

void factor_into(const BigInt& n, std::vector<BigInt>& out) {
  if (n == 1) return;
  if (probable_prime(n)) {
    out.push_back(n);
    return;
  }
  const auto f = pollard_brent(n);
  if (!f) throw ResourceError("cannot factor primitive part", n.get_str());
  factor_into(*f, out);
  factor_into(n / *f, out);
}

using FactorTable = std::map<std::pair<std::uint64_t, unsigned>, std::vector<BigInt>>;

const FactorTable& factor_table() {
  static const FactorTable table = [] {
    FactorTable t;
    std::istringstream in(kZsigmondyFactorTable);
    for (std::string line; std::getline(in, line);) {
      if (line.empty() || line[0] == '#') continue;
      std::istringstream fields(line);
      std::uint64_t p;
      unsigned k;
      fields >> p >> k;
      std::vector<BigInt> fs;
      for (std::string f; fields >> f;) fs.emplace_back(f);
      t[{p, k}] = std::move(fs);
    }
    return t;
  }();
  return table;
}

/// Smallest prime factor of the primitive part m of p^k - 1. All of its
/// prime factors are 1 mod k, so trial division only visits those.
BigInt smallest_ppd(std::uint64_t p, unsigned k, const BigInt& m) {
  for (std::uint64_t r = k + 1; r <= kTrialLimit; r += k) {
    if (BigInt(r) * r > m) return m;
    if (mpz_divisible_ui_p(m.get_mpz_t(), r)) return BigInt(r);
  }
  if (probable_prime(m)) return m;
  std::vector<BigInt> factors;
  if (const auto it = factor_table().find({p, k}); it != factor_table().end()) {
    BigInt prod = 1;
    for (const auto& f : it->second) prod *= f;
    const bool ok = prod == m && std::all_of(it->second.begin(), it->second.end(), probable_prime);
    if (!ok) throw std::logic_error("stored factorization does not match for p=" + std::to_string(p) +
                                    " k=" + std::to_string(k));
    factors = it->second;
  } else {
    factor_into(m, factors);
  }
  return *std::min_element(factors.begin(), factors.end());
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw ArgumentError("not-prime", "p must be prime", std::to_string(p));
}

bool divides(const BigInt& s, const BigInt& x) {
  return x != 0 && mpz_divisible_p(x.get_mpz_t(), s.get_mpz_t());
}

/// 2^l = x, or nullopt.
std::optional<unsigned> log2_exact(unsigned x) {
  if (x == 0 || (x & (x - 1)) != 0) return std::nullopt;
  unsigned l = 0;
  while ((1u << l) < x) ++l;
  return l;
}

/// A union of pi(X) sets and explicit primes.
struct PrimeSetUnion {
  std::string label;
  std::vector<BigInt> numbers;
  std::vector<BigInt> primes;

  bool contains(const BigInt& s) const {
    for (const auto& x : numbers) {
      if (divides(s, x)) return true;
    }
    return std::find(primes.begin(), primes.end(), s) != primes.end();
  }
};

std::vector<PrimeSetUnion> ack_cases(const LieSpec& spec, const BigInt& r) {
  const auto q = to_big(spec.q);
  const unsigned d = spec.dim;
  std::vector<PrimeSetUnion> cases;
  switch (spec.family) {
    case LieFamily::linear:
      cases.push_back({"pi(n) u pi(q^n-1)", {BigInt(d), pow_big(q, d) - 1}, {}});
      if (const auto l = log2_exact(d); l && *l >= 1 && r == d + 1 && spec.e == 1) {
        cases.push_back({"pi(q-1) u pi(l) u {2,r}", {q - 1, BigInt(*l)}, {BigInt(2), r}});
      }
      break;
    case LieFamily::unitary:
      if (d % 2 == 0 && d >= 4) {
        cases.push_back({"pi(n-1) u pi(q^(n-1)+1)", {BigInt(d - 1), pow_big(q, d - 1) + 1}, {}});
      }
      break;
    case LieFamily::symplectic:
    case LieFamily::odd_orthogonal:
    case LieFamily::minus_orthogonal:
      cases.push_back({"pi(m) u pi(q^m+1) u {2}", {BigInt(d), pow_big(q, d) + 1}, {BigInt(2)}});
      if (const auto l = log2_exact(d); l && r == 2 * d + 1 && spec.e == 1) {
        cases.push_back({"pi(q-1) u pi(l+1) u {2,r}", {q - 1, BigInt(*l + 1)}, {BigInt(2), r}});
      }
      break;
    case LieFamily::plus_orthogonal:
      cases.push_back({"pi(m-1) u pi(q^(m-1)+1) u pi(q+1) u {2}",
                       {BigInt(d - 1), pow_big(q, d - 1) + 1, q + 1},
                       {BigInt(2)}});
      if (const auto l = log2_exact(d - 1); l && r == 2 * d - 1 && spec.e == 1) {
        cases.push_back({"pi(q^2-1) u pi(l+1) u {2,r}", {q * q - 1, BigInt(*l + 1)}, {BigInt(2), r}});
      }
      if (const auto l = log2_exact(d); l && r == 2 * d - 1 && spec.e == 1) {
        cases.push_back({"pi(q-1) u pi(l+1) u {2,r}", {q - 1, BigInt(*l + 1)}, {BigInt(2), r}});
      }
      break;
  }
  return cases;
}

AckCertificate certify(const LieSpec& spec, const BigInt& r, const BigInt& s) {
  if (s == r) throw ArgumentError("equal-primes", "s must differ from r", s.get_str());
  if (s < 2 || !probable_prime(s)) throw ArgumentError("not-prime", "s must be prime", s.get_str());
  AckCertificate out;
  const auto cases = ack_cases(spec, r);
  if (cases.empty()) {
    out.reason = "no soluble-subgroup lemma applies to " + to_string(spec.family) + " with dim " +
                 std::to_string(spec.dim);
    return out;
  }
  for (const auto& c : cases) {
    out.cases.push_back(c.label);
    if (c.contains(s)) {
      out.reason = s.get_str() + " lies in " + c.label;
      return out;
    }
  }
  out.certified = true;
  return out;
}

}  // namespace

std::string to_string(LieFamily f) {
  switch (f) {
    case LieFamily::linear:
      return "linear";
    case LieFamily::unitary:
      return "unitary";
    case LieFamily::symplectic:
      return "symplectic";
    case LieFamily::odd_orthogonal:
      return "odd_orthogonal";
    case LieFamily::minus_orthogonal:
      return "minus_orthogonal";
    case LieFamily::plus_orthogonal:
      return "plus_orthogonal";
  }
  return "?";
}

std::optional<LieFamily> parse_family(const std::string& s) {
  std::string norm = s;
  std::replace(norm.begin(), norm.end(), '-', '_');
  for (auto f : {LieFamily::linear, LieFamily::unitary, LieFamily::symplectic,
                 LieFamily::odd_orthogonal, LieFamily::minus_orthogonal, LieFamily::plus_orthogonal}) {
    if (to_string(f) == norm) return f;
  }
  return std::nullopt;
}

LieSpec LieSpec::make(LieFamily family, unsigned dim, std::uint64_t q) {
  const auto pe = prime_power(q);
  if (!pe) throw ArgumentError("invalid-parameters", "q must be a prime power", std::to_string(q));
  const auto& [p, e] = *pe;
  const unsigned min_dim = [&] {
    switch (family) {
      case LieFamily::linear:
        return 2u;
      case LieFamily::unitary:
        return 3u;
      case LieFamily::symplectic:
        return 2u;
      case LieFamily::odd_orthogonal:
        return 3u;
      default:
        return 4u;
    }
  }();
  if (dim < min_dim) {
    throw ArgumentError("invalid-parameters", to_string(family) + " needs dim >= " + std::to_string(min_dim),
                        std::to_string(dim));
  }
  if (family == LieFamily::odd_orthogonal && p == 2) {
    throw ArgumentError("invalid-parameters", "odd_orthogonal needs q odd", std::to_string(q));
  }
  return {family, dim, q, p, e};
}

SimpleGroupOrder simple_group_order(const LieSpec& spec) {
  const auto q = to_big(spec.q);
  const unsigned long d = spec.dim;
  const std::uint64_t e = spec.e;
  BigInt order = 1;
  std::uint64_t out = 0;
  auto gcd_big = [](const BigInt& a, std::uint64_t b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), BigInt(b).get_mpz_t());
    return to_u64(g);
  };
  switch (spec.family) {
    case LieFamily::linear: {
      const auto dd = gcd_big(q - 1, d);
      order = pow_big(q, d * (d - 1) / 2);
      for (unsigned long i = 2; i <= d; ++i) order *= pow_big(q, i) - 1;
      order /= dd;
      out = (d == 2 ? 1 : 2) * dd * e;
      break;
    }
    case LieFamily::unitary: {
      const auto dd = gcd_big(q + 1, d);
      order = pow_big(q, d * (d - 1) / 2);
      for (unsigned long i = 2; i <= d; ++i) order *= pow_big(q, i) - (i % 2 == 0 ? 1 : -1);
      order /= dd;
      out = 2 * dd * e;
      break;
    }
    case LieFamily::symplectic:
    case LieFamily::odd_orthogonal: {
      const std::uint64_t dd = spec.p == 2 ? 1 : 2;
      order = pow_big(q, d * d);
      for (unsigned long i = 1; i <= d; ++i) order *= pow_big(q, 2 * i) - 1;
      order /= dd;
      if (spec.family == LieFamily::odd_orthogonal) {
        out = 2 * e;
      } else {
        out = (d == 2 && spec.p == 2) ? 2 * e : dd * e;
      }
      break;
    }
    case LieFamily::minus_orthogonal:
    case LieFamily::plus_orthogonal: {
      const int eps = spec.family == LieFamily::plus_orthogonal ? 1 : -1;
      const BigInt qm_eps = pow_big(q, d) - eps;
      const auto dd = gcd_big(qm_eps, 4);
      order = pow_big(q, d * (d - 1)) * qm_eps;
      for (unsigned long i = 1; i < d; ++i) order *= pow_big(q, 2 * i) - 1;
      order /= dd;
      out = (eps == 1 && d == 4 ? 6 : 2) * dd * e;
      break;
    }
  }
  return {order, out};
}

BigInt primitive_part(std::uint64_t p, unsigned k) {
  require_prime(p);
  if (k < 1) throw ArgumentError("invalid-parameters", "k must be positive", std::to_string(k));
  BigInt num = 1, den = 1;
  for (unsigned dv = 1; dv <= k; ++dv) {
    if (k % dv != 0) continue;
    const auto mu = mobius(k / dv);
    if (mu == 1) num *= pow_big(p, dv) - 1;
    if (mu == -1) den *= pow_big(p, dv) - 1;
  }
  BigInt m = num / den;
  for (auto ell : prime_divisors(k)) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), ell)) m /= static_cast<unsigned long>(ell);
  }
  return m;
}

bool zsigmondy_exists(std::uint64_t p, unsigned k) {
  if (k < 2) throw ArgumentError("invalid-parameters", "k must be at least 2", std::to_string(k));
  return primitive_part(p, k) > 1;
}

std::optional<BigInt> zsigmondy(std::uint64_t p, unsigned k) {
  if (k < 2) throw ArgumentError("invalid-parameters", "k must be at least 2", std::to_string(k));
  const auto m = primitive_part(p, k);
  if (m == 1) return std::nullopt;
  auto r = smallest_ppd(p, k, m);
  if (r % k != 1) {
    throw std::logic_error("primitive prime divisor " + r.get_str() + " is not 1 mod " + std::to_string(k));
  }
  return r;
}

FamilyPrimes family_primes(const LieSpec& spec) {
  const unsigned e = spec.e;
  const unsigned d = spec.dim;
  auto slot = [&](long exponent) -> std::optional<BigInt> {
    if (exponent < 2) return std::nullopt;
    return zsigmondy(spec.p, static_cast<unsigned>(exponent));
  };
  FamilyPrimes f;
  switch (spec.family) {
    case LieFamily::linear:
      f.r = slot(e * d);
      f.s = slot(e * (d - 1));
      if (d >= 4) f.t = slot(e * (d - 2));
      break;
    case LieFamily::unitary:
      f.r = slot(2 * e * (d - 1));
      f.s = slot(e * d);
      break;
    case LieFamily::symplectic:
    case LieFamily::odd_orthogonal:
      f.r = slot(2 * e * d);
      f.s = slot(e * d);
      f.t = slot(2 * e * (d - 1));
      break;
    case LieFamily::minus_orthogonal:
      f.r = slot(2 * e * d);
      f.t = slot(2 * e * (d - 1));
      break;
    case LieFamily::plus_orthogonal:
      f.r = slot(2 * e * (d - 1));
      f.s = slot(e * d);
      f.t = slot(e * (d - 1));
      break;
  }
  return f;
}

PPartBound l1_bound(const BigInt& p, const BigInt& order_n, const BigInt& order_bcap,
                    const BigInt& order_out) {
  if (p < 2 || !probable_prime(p)) throw ArgumentError("not-prime", "p must be prime", p.get_str());
  for (const auto* x : {&order_n, &order_bcap, &order_out}) {
    if (*x <= 0) throw ArgumentError("invalid-parameters", "orders must be positive", x->get_str());
  }
  auto val = [&](const BigInt& x) {
    BigInt rest;
    return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
  };
  PPartBound b;
  b.p = p;
  b.n_exp = val(order_n);
  b.b_exp = val(order_bcap);
  b.out_exp = val(order_out);
  const long g = static_cast<long>(b.n_exp) - b.b_exp - b.out_exp;
  b.guaranteed_exp = g > 0 ? static_cast<unsigned>(g) : 0;
  return b;
}

AckCertificate ack_certificate(const LieSpec& spec, const BigInt& r, const BigInt& s) {
  const auto fam = family_primes(spec);
  if (!fam.r || *fam.r != r) {
    throw ArgumentError("r-mismatch", "r is not the family prime r for this group",
                        "expected " + (fam.r ? fam.r->get_str() : std::string("none")) + ", got " +
                            r.get_str());
  }
  return certify(spec, r, s);
}

AckCertificate ack_certificate_substituted(const LieSpec& spec, const BigInt& r, const BigInt& s) {
  if (r < 2 || !probable_prime(r)) throw ArgumentError("not-prime", "r must be prime", r.get_str());
  return certify(spec, r, s);
}

}  // namespace solcon
