#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "solcon/perm_group.hpp"

namespace solcon {

/// Derived series G = G^(0) > G^(1) > ... . The last term is either the
/// trivial group or a repeated perfect term, so it always equals its own
/// derived subgroup.
struct DerivedSeries {
  std::vector<PermGroup> terms;

  std::vector<BigInt> orders() const;
  /// Number of strict descents (derived length when the group is soluble).
  std::size_t length() const;
};

DerivedSeries derived_series(const PermGroup& g);

/// Exact solubility test. Uses the derived series, short-circuited by
/// classical sufficient conditions (abelian, odd order, at most two prime
/// divisors) and by detecting a full alternating group on the support.
bool is_soluble(const PermGroup& g);

/// Whether <a, b> is soluble.
bool two_generated_soluble(const Permutation& a, const Permutation& b);

/// Smallest subgroup containing `seeds` normalized by `ambient`. Throws
/// ArgumentError ("membership") if a seed lies outside `ambient`.
PermGroup normal_closure(const PermGroup& ambient, const std::vector<Permutation>& seeds);

PermGroup derived_subgroup(const PermGroup& g);

/// [A, B], the normal closure in <A, B> of the generator commutators.
PermGroup commutator_of_subgroups(const PermGroup& a, const PermGroup& b,
                                  const PermGroup& ambient);

enum class RadicalMethod { bruteforce, gkps };

/// Largest soluble normal subgroup.
///
/// `gkps` keeps every element x such that <x, y> is soluble for all y in G;
/// this set is exactly the radical, and the result is re-verified (normal,
/// soluble, and of order equal to the number of accepted elements).
/// `bruteforce` joins all soluble normal subgroups from a lattice scan and
/// needs the group within the subgroup-oracle budget.
PermGroup soluble_radical(const PermGroup& g, RadicalMethod method, const Budget& budget = {});

struct PClosedResult {
  bool p_closed = true;
  /// p does not divide |H|, so the answer is vacuous.
  bool vacuous = false;
  explicit operator bool() const { return p_closed; }
};

/// Whether the subgroup generated by all p-elements of H is a p-group.
PClosedResult is_p_closed(const PermGroup& h, std::uint64_t p, const Budget& budget = {});

/// Smallest prime p with n/2 < p <= n that is not a Mersenne prime.
/// Throws ArgumentError for n < 5.
std::optional<std::uint64_t> non_mersenne_prime_in_range(std::uint64_t n);

/// Largest normal subgroup of G inside A.
PermGroup core_of_subgroup(const PermGroup& g, const PermGroup& a, const Budget& budget = {});

/// Search for two conjugate elements of order q generating an insoluble
/// subgroup. Scans reps of order-q classes against their class, and returns
/// the first pair found in lexicographic order.
std::optional<std::pair<Permutation, Permutation>> find_insoluble_conjugate_pair(
    const PermGroup& g, std::uint64_t q, const Budget& budget = {});

}  // namespace solcon
