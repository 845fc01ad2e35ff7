#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "solcon/bigint.hpp"
#include "solcon/errors.hpp"
#include "solcon/permutation.hpp"

namespace solcon {

/// Stabilizer chain over the fixed base 0, 1, ..., n-1, built by the
/// deterministic Schreier-Sims algorithm. Level l describes the stabilizer
/// of points 0..l-1 and its orbit on l, with explicit transversals.
///
/// The chain is mutable only through extend(); PermGroup wraps a finished
/// chain and never changes it afterwards.
class StabChain {
 public:
  explicit StabChain(std::size_t degree);

  std::size_t degree() const noexcept { return degree_; }

  /// Adds g to the group; returns false if g was already a member.
  bool extend(const Permutation& g);

  bool contains(const Permutation& g) const;

  BigInt order() const;
  /// Order if it fits in 64 bits.
  bool order_fits_u64() const;
  std::uint64_t order_u64() const;

  const std::vector<Point>& orbit(std::size_t level) const { return levels_[level].orbit; }
  /// Transversal element mapping `level` to orbit(level)[k].
  const Permutation& transversal(std::size_t level, std::size_t k) const {
    return levels_[level].reps[k];
  }
  /// Levels whose orbit has more than one point, ascending.
  std::vector<std::size_t> nontrivial_levels() const;

  /// Dense index in [0, order) from the sift coordinates. Requires
  /// membership and a 64-bit order.
  std::uint64_t index_of(const Permutation& g) const;

  const std::vector<Permutation>& strong_generators() const { return strong_; }

 private:
  struct Level {
    std::vector<std::uint32_t> gens;
    std::vector<Point> orbit;
    std::vector<std::int32_t> pos;
    std::vector<Permutation> reps;
    std::vector<Permutation> inv_reps;
    std::vector<std::vector<bool>> checked;
  };

  /// Sifts h from `from` downwards. Returns the residue and the level where
  /// sifting stopped (degree() if it reached the identity).
  std::pair<Permutation, std::size_t> strip(Permutation h, std::size_t from) const;
  void add_to_level(std::size_t level, std::uint32_t gen);
  void complete(std::size_t start);

  std::size_t degree_;
  std::vector<Level> levels_;
  std::vector<Permutation> strong_;
};

/// A permutation group: generators plus an exact stabilizer chain.
/// Immutable after construction; copies share the chain.
class PermGroup {
 public:
  /// Trivial group of the given degree.
  explicit PermGroup(std::size_t degree, const Budget& budget = {});

  /// Throws ArgumentError on an empty list or mixed degrees.
  explicit PermGroup(std::vector<Permutation> generators, const Budget& budget = {});

  /// Wraps a chain already built from exactly these generators.
  static PermGroup from_chain(std::vector<Permutation> generators, StabChain chain);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return gens_; }
  const StabChain& chain() const noexcept { return *chain_; }

  BigInt order() const { return chain_->order(); }
  /// Throws ResourceError if the order exceeds 64 bits.
  std::uint64_t order_u64() const;

  /// Throws on degree mismatch.
  bool contains(const Permutation& g) const;
  bool is_trivial() const { return gens_.empty(); }
  bool is_abelian() const;
  bool is_subgroup_of(const PermGroup& other) const;
  /// Normalized by every generator of `ambient`.
  bool is_normalized_by(const PermGroup& ambient) const;

  /// Group generated by these generators plus `extra`.
  PermGroup with_generators(std::span<const Permutation> extra) const;

  /// Visits every element in lexicographic order of image sequences.
  /// `f` may return bool; returning false stops the walk. Returns false if
  /// stopped early.
  template <class F>
  bool for_each_element(F&& f) const;

  /// All elements, lexicographically sorted. Budgeted.
  std::vector<Permutation> elements(const Budget& budget = {}) const;

  std::uint64_t element_index(const Permutation& g) const { return chain_->index_of(g); }

  friend bool operator==(const PermGroup& a, const PermGroup& b);

 private:
  std::size_t degree_;
  std::vector<Permutation> gens_;
  std::shared_ptr<const StabChain> chain_;
};

/// Representatives of conjugacy classes (lexicographically least element
/// of each class) with class sizes, in lexicographic order of reps.
struct ClassReps {
  std::vector<Permutation> reps;
  std::vector<std::uint64_t> class_sizes;
};

/// [OP] build_group. Throws ArgumentError for empty lists or mixed degrees.
PermGroup build_group(const std::vector<Permutation>& generators, const Budget& budget = {});

inline BigInt group_order(const PermGroup& g) { return g.order(); }

inline bool contains(const PermGroup& g, const Permutation& x) { return g.contains(x); }

/// Every conjugacy class. Throws ResourceError above the enumeration budget.
ClassReps conjugacy_class_reps(const PermGroup& g, const Budget& budget = {});

/// Classes restricted to elements satisfying `pred`, which must be a class
/// function (e.g. a condition on element order).
ClassReps conjugacy_class_reps_where(const PermGroup& g,
                                     const std::function<bool(const Permutation&)>& pred,
                                     const Budget& budget = {});

/// All elements satisfying `pred`, in lexicographic order. Budgeted.
std::vector<Permutation> elements_where(const PermGroup& g,
                                        const std::function<bool(const Permutation&)>& pred,
                                        const Budget& budget = {});

/// The class of x under conjugation by g (x need not lie in g).
std::vector<Permutation> conjugacy_class(const PermGroup& g, const Permutation& x);

/// G^g, generated by the conjugates of G's generators.
PermGroup conjugate_subgroup(const PermGroup& g, const Permutation& by);

/// Throws ResourceError if |G| exceeds the enumeration budget.
std::uint64_t require_enumerable(const PermGroup& g, const Budget& budget);

// ---------------------------------------------------------------------------

template <class F>
bool PermGroup::for_each_element(F&& f) const {
  const auto active = chain_->nontrivial_levels();
  auto visit = [&](const Permutation& x) -> bool {
    if constexpr (std::is_same_v<std::invoke_result_t<F&, const Permutation&>, void>) {
      f(x);
      return true;
    } else {
      return static_cast<bool>(f(x));
    }
  };
  // g = u_k ... u_1 u_0 with u_l from level l's transversal; the image of
  // base point l is (orbit point)^(u_{l-1} ... u_0), so sorting each orbit
  // by its image under the suffix gives lexicographic order.
  auto rec = [&](auto& self, std::size_t depth, const Permutation& suffix) -> bool {
    if (depth == active.size()) return visit(suffix);
    const auto level = active[depth];
    const auto& orb = chain_->orbit(level);
    std::vector<std::uint32_t> order(orb.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(),
              [&](auto x, auto y) { return suffix[orb[x]] < suffix[orb[y]]; });
    Permutation next;
    for (auto k : order) {
      next.assign_product(chain_->transversal(level, k), suffix);
      if (!self(self, depth + 1, next)) return false;
    }
    return true;
  };
  return rec(rec, 0, Permutation(degree_));
}

}  // namespace solcon
