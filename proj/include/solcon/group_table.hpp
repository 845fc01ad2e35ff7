#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "solcon/perm_group.hpp"

namespace solcon {

using ElementSet = boost::dynamic_bitset<std::uint64_t>;

/// Full multiplication table of a small group. Elements are numbered in
/// lexicographic order, so index 0 is the identity. This is the substrate
/// of the brute-force oracles: closures, normal closures and derived
/// series here never touch the stabilizer chain beyond element indexing.
class GroupTable {
 public:
  /// Throws ResourceError if |G| exceeds budget.max_subgroup_order.
  GroupTable(const PermGroup& g, const Budget& budget = {});

  std::uint32_t size() const noexcept { return n_; }
  const PermGroup& group() const noexcept { return group_; }
  const Permutation& element(std::uint32_t i) const { return elems_[i]; }
  std::uint32_t index(const Permutation& x) const;

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return table_[static_cast<std::size_t>(a) * n_ + b];
  }
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
  /// x^g = g^-1 x g.
  std::uint32_t conj(std::uint32_t x, std::uint32_t g) const { return mul(mul(inv_[g], x), g); }
  std::uint32_t order_of(std::uint32_t a) const { return orders_[a]; }
  const std::vector<std::uint32_t>& generator_indices() const noexcept { return gens_; }

  ElementSet empty_set() const { return ElementSet(n_); }
  ElementSet closure(std::span<const std::uint32_t> gens) const;
  /// Normal closure of `seeds` under conjugation by `by`.
  ElementSet normal_closure(std::span<const std::uint32_t> by,
                            std::span<const std::uint32_t> seeds) const;
  /// Subgroup generated by a set, with a short generating list.
  std::vector<std::uint32_t> generators_of(const ElementSet& h) const;
  /// Derived series by commutators of generators, ending at 1 or a perfect term.
  bool is_soluble(const ElementSet& h) const;

  std::vector<std::uint32_t> members(const ElementSet& s) const;
  PermGroup to_group(std::span<const std::uint32_t> gens) const;

  /// Conjugacy classes as element sets, ordered by least member.
  std::vector<ElementSet> conjugacy_classes() const;

  /// Every normal subgroup, from joins of normal closures of classes.
  std::vector<ElementSet> normal_subgroups() const;

 private:
  PermGroup group_;
  std::uint32_t n_;
  std::vector<Permutation> elems_;
  std::vector<std::uint32_t> dense_to_lex_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> orders_;
  std::vector<std::uint32_t> gens_;
};

}  // namespace solcon
