#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "solcon/bigint.hpp"

namespace solcon {

enum class LieFamily { linear, unitary, symplectic, odd_orthogonal, minus_orthogonal, plus_orthogonal };

std::string to_string(LieFamily f);
/// Accepts the enum spellings plus "plus-orthogonal" style hyphenation.
std::optional<LieFamily> parse_family(const std::string& s);

/// A classical simple group: L_n(q), U_n(q), PSp_2m(q), O_2m+1(q),
/// PO-_2m(q), PO+_2m(q). `dim` is n for linear/unitary and m otherwise.
struct LieSpec {
  LieFamily family;
  unsigned dim;
  std::uint64_t q;
  std::uint64_t p;
  unsigned e;

  /// Validates q = p^e and the rank constraints of the family.
  static LieSpec make(LieFamily family, unsigned dim, std::uint64_t q);
};

struct SimpleGroupOrder {
  BigInt order;
  std::uint64_t out_order;
};

/// |N| and |Out N| by the standard formulas:
///   L_n(q):     q^{n(n-1)/2} prod_{i=2..n} (q^i - 1) / d,             d = (n, q-1)
///   U_n(q):     q^{n(n-1)/2} prod_{i=2..n} (q^i - (-1)^i) / d,        d = (n, q+1)
///   PSp_2m(q), O_2m+1(q): q^{m^2} prod_{i=1..m} (q^{2i} - 1) / d,     d = (2, q-1)
///   PO^e_2m(q): q^{m(m-1)} (q^m - e) prod_{i=1..m-1} (q^{2i} - 1) / d, d = (4, q^m - e)
/// Out: L 2de (de for n = 2), U 2de, PSp de (2e when m = 2, p = 2),
/// O_2m+1 2e, PO- 2de, PO+ 2de (6de when m = 4), with q = p^e.
SimpleGroupOrder simple_group_order(const LieSpec& spec);

/// Phi_k(p) with every prime divisor of k removed. Its prime factors are
/// exactly the primitive prime divisors of p^k - 1.
BigInt primitive_part(std::uint64_t p, unsigned k);

/// Smallest primitive prime divisor of p^k - 1, absent exactly for
/// k = 2 with p Mersenne and for (p, k) = (2, 6). Asserts r = 1 (mod k).
/// Throws ResourceError if the primitive part cannot be factored.
std::optional<BigInt> zsigmondy(std::uint64_t p, unsigned k);

/// Existence only, without factoring.
bool zsigmondy_exists(std::uint64_t p, unsigned k);

struct FamilyPrimes {
  std::optional<BigInt> r;
  std::optional<BigInt> s;
  std::optional<BigInt> t;
};

/// Exponents of p whose smallest primitive prime divisors give r, s, t:
///   linear        r: en      s: e(n-1)   t: e(n-2), n >= 4
///   unitary       r: 2e(n-1) s: en
///   symplectic    r: 2em     s: em       t: 2e(m-1)
///   odd orthog.   as symplectic
///   minus orthog. r: 2em                 t: 2e(m-1)
///   plus orthog.  r: 2e(m-1) s: em       t: e(m-1)
/// A slot is empty when its exponent is below 2 or has no primitive divisor.
FamilyPrimes family_primes(const LieSpec& spec);

struct PPartBound {
  BigInt p;
  unsigned n_exp = 0;
  unsigned b_exp = 0;
  unsigned out_exp = 0;
  /// p^guaranteed_exp divides |A n N|.
  unsigned guaranteed_exp = 0;
};

PPartBound l1_bound(const BigInt& p, const BigInt& order_n, const BigInt& order_bcap,
                    const BigInt& order_out);

struct AckCertificate {
  bool certified = false;
  std::string reason;
  /// One entry per case whose side conditions hold, e.g. "pi(n) u pi(q^n-1)".
  std::vector<std::string> cases;
};

/// Certifies that r and s are independent: s lies outside every prime set
/// that a soluble subgroup containing an r-element may have, over all
/// applicable cases. Throws ArgumentError ("r-mismatch") unless r is the
/// family's r, and for s == r.
AckCertificate ack_certificate(const LieSpec& spec, const BigInt& r, const BigInt& s);

/// Same set computation for a substituted r (used at the exceptions where
/// the family has no r), without the family-r check.
AckCertificate ack_certificate_substituted(const LieSpec& spec, const BigInt& r, const BigInt& s);

}  // namespace solcon
