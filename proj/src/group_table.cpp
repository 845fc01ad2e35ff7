#include "solcon/group_table.hpp"

#include <unordered_set>

namespace solcon {

GroupTable::GroupTable(const PermGroup& g, const Budget& budget) : group_(g) {
  const auto order = g.order();
  if (!fits_u64(order) || to_u64(order) > budget.max_subgroup_order) {
    throw ResourceError("group order exceeds subgroup-oracle budget",
                        order.get_str() + " > " + std::to_string(budget.max_subgroup_order));
  }
  n_ = static_cast<std::uint32_t>(to_u64(order));
  elems_.reserve(n_);
  dense_to_lex_.assign(n_, 0);
  g.for_each_element([&](const Permutation& x) {
    dense_to_lex_[g.element_index(x)] = static_cast<std::uint32_t>(elems_.size());
    elems_.push_back(x);
  });
  table_.resize(static_cast<std::size_t>(n_) * n_);
  Permutation prod;
  for (std::uint32_t a = 0; a < n_; ++a) {
    for (std::uint32_t b = 0; b < n_; ++b) {
      prod.assign_product(elems_[a], elems_[b]);
      table_[static_cast<std::size_t>(a) * n_ + b] = index(prod);
    }
  }
  inv_.resize(n_);
  orders_.resize(n_);
  for (std::uint32_t a = 0; a < n_; ++a) {
    for (std::uint32_t b = 0; b < n_; ++b) {
      if (mul(a, b) == 0) {
        inv_[a] = b;
        break;
      }
    }
    std::uint32_t k = 1;
    for (auto y = a; y != 0; y = mul(y, a)) ++k;
    orders_[a] = k;
  }
  for (const auto& s : g.generators()) gens_.push_back(index(s));
}

std::uint32_t GroupTable::index(const Permutation& x) const {
  return dense_to_lex_[group_.element_index(x)];
}

ElementSet GroupTable::closure(std::span<const std::uint32_t> gens) const {
  ElementSet seen(n_);
  std::vector<std::uint32_t> queue{0};
  seen[0] = true;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (auto s : gens) {
      const auto y = mul(queue[k], s);
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  return seen;
}

ElementSet GroupTable::normal_closure(std::span<const std::uint32_t> by,
                                      std::span<const std::uint32_t> seeds) const {
  std::vector<std::uint32_t> gens;
  for (auto s : seeds) {
    if (s != 0) gens.push_back(s);
  }
  auto set = closure(gens);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (auto g : by) {
      const auto c = conj(gens[k], g);
      if (!set[c]) {
        gens.push_back(c);
        set = closure(gens);
      }
    }
  }
  return set;
}

std::vector<std::uint32_t> GroupTable::generators_of(const ElementSet& h) const {
  std::vector<std::uint32_t> gens;
  ElementSet cur(n_);
  cur[0] = true;
  for (auto i = h.find_first(); i != ElementSet::npos; i = h.find_next(i)) {
    if (cur[i]) continue;
    gens.push_back(static_cast<std::uint32_t>(i));
    cur = closure(gens);
  }
  return gens;
}

bool GroupTable::is_soluble(const ElementSet& h) const {
  auto gens = generators_of(h);
  auto size = h.count();
  while (size > 1) {
    std::vector<std::uint32_t> comms;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        const auto a = gens[i];
        const auto b = gens[j];
        comms.push_back(mul(mul(inv_[a], inv_[b]), mul(a, b)));
      }
    }
    const auto d = normal_closure(gens, comms);
    const auto dsize = d.count();
    if (dsize == size) return false;
    size = dsize;
    gens = generators_of(d);
  }
  return true;
}

std::vector<std::uint32_t> GroupTable::members(const ElementSet& s) const {
  std::vector<std::uint32_t> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) {
    out.push_back(static_cast<std::uint32_t>(i));
  }
  return out;
}

PermGroup GroupTable::to_group(std::span<const std::uint32_t> gens) const {
  std::vector<Permutation> perms;
  for (auto i : gens) {
    if (i != 0) perms.push_back(elems_[i]);
  }
  if (perms.empty()) return PermGroup(group_.degree());
  return PermGroup(std::move(perms));
}

std::vector<ElementSet> GroupTable::conjugacy_classes() const {
  ElementSet seen(n_);
  std::vector<ElementSet> out;
  for (std::uint32_t x = 0; x < n_; ++x) {
    if (seen[x]) continue;
    ElementSet cls(n_);
    for (std::uint32_t g = 0; g < n_; ++g) cls[conj(x, g)] = true;
    seen |= cls;
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<ElementSet> GroupTable::normal_subgroups() const {
  std::vector<ElementSet> found;
  std::unordered_set<ElementSet> known;
  auto add = [&](ElementSet s) {
    if (known.insert(s).second) found.push_back(std::move(s));
  };
  for (const auto& cls : conjugacy_classes()) {
    const auto x = static_cast<std::uint32_t>(cls.find_first());
    const std::uint32_t seed[] = {x};
    add(normal_closure(gens_, seed));
  }
  // The join of two normal subgroups is their product; saturate.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (found[i].is_subset_of(found[j]) || found[j].is_subset_of(found[i])) continue;
      auto gens = generators_of(found[i]);
      const auto more = generators_of(found[j]);
      gens.insert(gens.end(), more.begin(), more.end());
      add(closure(gens));
    }
  }
  return found;
}

}  // namespace solcon
