#include "solcon/perm_group.hpp"

#include <deque>
#include <thread>
#include <unordered_set>

#include <boost/dynamic_bitset.hpp>

namespace solcon {

unsigned Budget::effective_jobs() const {
  if (jobs != 0) return jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

// ---------------------------------------------------------------- StabChain

StabChain::StabChain(std::size_t degree) : degree_(degree), levels_(degree) {
  const Permutation id(degree);
  for (std::size_t l = 0; l < degree; ++l) {
    auto& L = levels_[l];
    L.orbit = {static_cast<Point>(l)};
    L.pos.assign(degree, -1);
    L.pos[l] = 0;
    L.reps = {id};
    L.inv_reps = {id};
  }
}

std::pair<Permutation, std::size_t> StabChain::strip(Permutation h, std::size_t from) const {
  Permutation tmp;
  for (std::size_t l = from; l < degree_; ++l) {
    const auto pt = h[l];
    if (pt == l) continue;
    const auto p = levels_[l].pos[pt];
    if (p < 0) return {std::move(h), l};
    tmp.assign_product(h, levels_[l].inv_reps[p]);
    std::swap(h, tmp);
  }
  return {std::move(h), degree_};
}

void StabChain::add_to_level(std::size_t level, std::uint32_t gen) {
  auto& L = levels_[level];
  L.gens.push_back(gen);
  auto try_add = [&](std::size_t k, const Permutation& s) {
    const auto pt = s[L.orbit[k]];
    if (L.pos[pt] >= 0) return;
    L.pos[pt] = static_cast<std::int32_t>(L.orbit.size());
    L.orbit.push_back(pt);
    L.reps.push_back(L.reps[k] * s);
    L.inv_reps.push_back(L.reps.back().inverse());
  };
  const auto old_size = L.orbit.size();
  for (std::size_t k = 0; k < old_size; ++k) try_add(k, strong_[gen]);
  for (std::size_t k = old_size; k < L.orbit.size(); ++k) {
    for (auto t : L.gens) try_add(k, strong_[t]);
  }
}

void StabChain::complete(std::size_t start) {
  auto i = static_cast<std::ptrdiff_t>(start);
  Permutation h;
  while (i >= 0) {
    auto& L = levels_[static_cast<std::size_t>(i)];
    bool restarted = false;
    for (std::size_t k = 0; k < L.orbit.size() && !restarted; ++k) {
      if (L.checked.size() <= k) L.checked.resize(k + 1);
      for (std::size_t t = 0; t < L.gens.size(); ++t) {
        auto& row = L.checked[k];
        if (row.size() <= t) row.resize(L.gens.size(), false);
        if (row[t]) continue;
        const auto& s = strong_[L.gens[t]];
        const auto target = L.pos[s[L.orbit[k]]];
        h.assign_product(L.reps[k], s);
        auto schreier = h * L.inv_reps[target];
        auto [res, j] = strip(std::move(schreier), static_cast<std::size_t>(i) + 1);
        if (j == degree_) {
          L.checked[k][t] = true;
          continue;
        }
        strong_.push_back(std::move(res));
        const auto g = static_cast<std::uint32_t>(strong_.size() - 1);
        for (auto l = static_cast<std::size_t>(i) + 1; l <= j; ++l) add_to_level(l, g);
        i = static_cast<std::ptrdiff_t>(j);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

bool StabChain::extend(const Permutation& g) {
  if (g.degree() != degree_) {
    throw ArgumentError("degree-mismatch", "generator degree differs from group degree",
                        std::to_string(g.degree()) + " vs " + std::to_string(degree_));
  }
  auto [res, j] = strip(g, 0);
  if (j == degree_) return false;
  strong_.push_back(std::move(res));
  const auto gi = static_cast<std::uint32_t>(strong_.size() - 1);
  for (std::size_t l = 0; l <= j; ++l) add_to_level(l, gi);
  complete(j);
  return true;
}

bool StabChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) {
    throw ArgumentError("degree-mismatch", "element degree differs from group degree",
                        std::to_string(g.degree()) + " vs " + std::to_string(degree_));
  }
  return strip(g, 0).second == degree_;
}

BigInt StabChain::order() const {
  BigInt n = 1;
  for (const auto& L : levels_) n *= static_cast<unsigned long>(L.orbit.size());
  return n;
}

bool StabChain::order_fits_u64() const { return fits_u64(order()); }

std::uint64_t StabChain::order_u64() const {
  const auto n = order();
  if (!fits_u64(n)) throw ResourceError("group order exceeds 64 bits", n.get_str());
  return to_u64(n);
}

std::vector<std::size_t> StabChain::nontrivial_levels() const {
  std::vector<std::size_t> out;
  for (std::size_t l = 0; l < degree_; ++l) {
    if (levels_[l].orbit.size() > 1) out.push_back(l);
  }
  return out;
}

std::uint64_t StabChain::index_of(const Permutation& g) const {
  std::uint64_t index = 0;
  std::uint64_t radix = 1;
  Permutation h = g;
  Permutation tmp;
  for (std::size_t l = 0; l < degree_; ++l) {
    const auto& L = levels_[l];
    if (L.orbit.size() == 1) {
      if (h[l] != l) throw ArgumentError("element not in group");
      continue;
    }
    const auto p = L.pos[h[l]];
    if (p < 0) throw ArgumentError("element not in group");
    index += radix * static_cast<std::uint64_t>(p);
    radix *= L.orbit.size();
    if (p != 0) {
      tmp.assign_product(h, L.inv_reps[p]);
      std::swap(h, tmp);
    }
  }
  return index;
}

// ---------------------------------------------------------------- PermGroup

namespace {

void check_degree(std::size_t degree, const Budget& budget) {
  if (degree == 0) throw ArgumentError("group degree must be positive");
  if (degree > budget.max_degree) {
    throw ResourceError("degree exceeds budget",
                        std::to_string(degree) + " > " + std::to_string(budget.max_degree));
  }
}

}  // namespace

PermGroup::PermGroup(std::size_t degree, const Budget& budget)
    : degree_(degree), chain_(std::make_shared<StabChain>(degree)) {
  check_degree(degree, budget);
}

PermGroup::PermGroup(std::vector<Permutation> generators, const Budget& budget) {
  if (generators.empty()) {
    throw ArgumentError("empty-generators",
                        "empty generator list; construct the trivial group with an explicit degree",
                        "");
  }
  degree_ = generators.front().degree();
  check_degree(degree_, budget);
  auto chain = std::make_shared<StabChain>(degree_);
  for (const auto& g : generators) require_same_degree(g, generators.front());
  for (auto& g : generators) {
    if (g.is_identity()) continue;
    chain->extend(g);
    gens_.push_back(std::move(g));
  }
  chain_ = std::move(chain);
}

PermGroup PermGroup::from_chain(std::vector<Permutation> generators, StabChain chain) {
  PermGroup r(chain.degree());
  r.gens_ = std::move(generators);
  r.chain_ = std::make_shared<const StabChain>(std::move(chain));
  return r;
}

std::uint64_t PermGroup::order_u64() const { return chain_->order_u64(); }

bool PermGroup::contains(const Permutation& g) const { return chain_->contains(g); }

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    for (std::size_t j = i + 1; j < gens_.size(); ++j) {
      if (gens_[i] * gens_[j] != gens_[j] * gens_[i]) return false;
    }
  }
  return true;
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (other.degree() != degree_) return false;
  return std::all_of(gens_.begin(), gens_.end(),
                     [&](const Permutation& g) { return other.contains(g); });
}

bool PermGroup::is_normalized_by(const PermGroup& ambient) const {
  for (const auto& g : ambient.generators()) {
    for (const auto& x : gens_) {
      if (!contains(conjugate(x, g))) return false;
    }
  }
  return true;
}

PermGroup PermGroup::with_generators(std::span<const Permutation> extra) const {
  PermGroup r = *this;
  std::shared_ptr<StabChain> chain;
  for (const auto& g : extra) {
    require_same_degree(g, Permutation(degree_));
    if (r.chain_->contains(g)) continue;
    if (!chain) chain = std::make_shared<StabChain>(*chain_);
    chain->extend(g);
    r.chain_ = chain;
    r.gens_.push_back(g);
  }
  return r;
}

std::vector<Permutation> PermGroup::elements(const Budget& budget) const {
  std::vector<Permutation> out;
  out.reserve(require_enumerable(*this, budget));
  for_each_element([&](const Permutation& x) { out.push_back(x); });
  return out;
}

bool operator==(const PermGroup& a, const PermGroup& b) {
  return a.degree() == b.degree() && a.order() == b.order() && a.is_subgroup_of(b);
}

// ---------------------------------------------------------------- free functions

PermGroup build_group(const std::vector<Permutation>& generators, const Budget& budget) {
  return PermGroup(generators, budget);
}

std::uint64_t require_enumerable(const PermGroup& g, const Budget& budget) {
  const auto n = g.order();
  if (!fits_u64(n) || to_u64(n) > budget.max_enumeration_order) {
    throw ResourceError("group order exceeds enumeration budget",
                        n.get_str() + " > " + std::to_string(budget.max_enumeration_order));
  }
  return to_u64(n);
}

ClassReps conjugacy_class_reps_where(const PermGroup& g,
                                     const std::function<bool(const Permutation&)>& pred,
                                     const Budget& budget) {
  const auto n = require_enumerable(g, budget);
  boost::dynamic_bitset<> seen(n);
  ClassReps out;
  std::vector<Permutation> queue;
  g.for_each_element([&](const Permutation& x) {
    const auto ix = g.element_index(x);
    if (seen[ix]) return;
    if (!pred(x)) return;
    // First unseen element in lexicographic order is the least of its class.
    seen[ix] = true;
    queue.assign(1, x);
    for (std::size_t k = 0; k < queue.size(); ++k) {
      for (const auto& s : g.generators()) {
        auto y = conjugate(queue[k], s);
        const auto iy = g.element_index(y);
        if (!seen[iy]) {
          seen[iy] = true;
          queue.push_back(std::move(y));
        }
      }
    }
    out.reps.push_back(x);
    out.class_sizes.push_back(queue.size());
  });
  return out;
}

ClassReps conjugacy_class_reps(const PermGroup& g, const Budget& budget) {
  return conjugacy_class_reps_where(g, [](const Permutation&) { return true; }, budget);
}

std::vector<Permutation> elements_where(const PermGroup& g,
                                        const std::function<bool(const Permutation&)>& pred,
                                        const Budget& budget) {
  require_enumerable(g, budget);
  std::vector<Permutation> out;
  g.for_each_element([&](const Permutation& x) {
    if (pred(x)) out.push_back(x);
  });
  return out;
}

std::vector<Permutation> conjugacy_class(const PermGroup& g, const Permutation& x) {
  std::vector<Permutation> out{x};
  std::unordered_set<Permutation> seen{x};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& s : g.generators()) {
      auto y = conjugate(out[k], s);
      if (seen.insert(y).second) out.push_back(std::move(y));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PermGroup conjugate_subgroup(const PermGroup& g, const Permutation& by) {
  require_same_degree(Permutation(g.degree()), by);
  if (g.is_trivial()) return PermGroup(g.degree());
  std::vector<Permutation> gens;
  gens.reserve(g.generators().size());
  for (const auto& x : g.generators()) gens.push_back(conjugate(x, by));
  return PermGroup(std::move(gens));
}

}  // namespace solcon
