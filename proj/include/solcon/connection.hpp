#pragma once

#include <atomic>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "solcon/perm_group.hpp"

namespace solcon {

/// Raised when the three equivalent conditions disagree. This can only
/// signal an implementation bug.
class TheoremViolation : public Error {
 public:
  TheoremViolation(const std::string& message, std::string context)
      : Error("theorem-violation", message, std::move(context)) {}
};

/// G = AB with A, B <= G, checked through |A||B| / |A n B| = |G|.
struct FactorizedGroup {
  PermGroup G;
  PermGroup A;
  PermGroup B;
  std::uint64_t intersection_order = 1;
};

/// Throws ArgumentError with code "not-a-subgroup" or "product-property".
FactorizedGroup make_factorized(const PermGroup& g, const PermGroup& a, const PermGroup& b,
                                const Budget& budget = {});

enum class ConnectionMode { full, prime_pairs };

using Witness = std::pair<Permutation, Permutation>;

struct ConditionResult {
  bool holds = true;
  /// Lexicographically least (a, b) with <a, b> insoluble.
  std::optional<Witness> witness;
};

struct ConnectionReport {
  bool condition1 = true;
  bool condition2 = true;
  bool condition3 = true;
  std::optional<Witness> witness;
  BigInt radical_order = 1;
};

/// Per-ambient state shared by many factorizations of the same G: the
/// soluble radical and a cache of pair solubility keyed by the element
/// indices of a and b in G (used when |G| <= 4096).
class ConnectionContext {
 public:
  explicit ConnectionContext(PermGroup g, Budget budget = {});

  const PermGroup& group() const noexcept { return g_; }
  const Budget& budget() const noexcept { return budget_; }
  bool soluble_pair(const Permutation& a, const Permutation& b) const;
  const PermGroup& radical();

 private:
  PermGroup g_;
  Budget budget_;
  std::size_t n_ = 0;
  std::unique_ptr<std::atomic<std::uint8_t>[]> cache_;
  std::once_flag radical_once_;
  std::optional<PermGroup> radical_;
};

/// full: <a, b> soluble for all a in A, b in B. prime_pairs: the same for
/// nontrivial p-elements a and q-elements b with p != q. Exact; throws
/// ResourceError when the pair count exceeds budget.max_pairs.
ConditionResult check_condition(const FactorizedGroup& f, ConnectionMode mode,
                                const Budget& budget = {}, ConnectionContext* ctx = nullptr);

/// [A, B] <= soluble radical of G.
bool check_condition3(const FactorizedGroup& f, const Budget& budget = {},
                      ConnectionContext* ctx = nullptr);

/// All three conditions; throws TheoremViolation if they disagree.
ConnectionReport verify_main_theorem(const FactorizedGroup& f, const Budget& budget = {},
                                     ConnectionContext* ctx = nullptr);

/// G = A^g B^h must again be a factorization with the same prime-pairs answer.
bool verify_conjugation_lemma(const FactorizedGroup& f, const Permutation& g,
                              const Permutation& h, const Budget& budget = {},
                              ConnectionContext* ctx = nullptr);

/// For an S-connected factorization: rad(A) = A n rad(G) and likewise for B.
/// Throws ArgumentError ("not-s-connected") otherwise.
bool radical_intersection_check(const FactorizedGroup& f, const Budget& budget = {},
                                ConnectionContext* ctx = nullptr);

}  // namespace solcon
