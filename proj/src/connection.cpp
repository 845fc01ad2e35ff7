#include "solcon/connection.hpp"

#include "solcon/groupio.hpp"
#include "solcon/numtheory.hpp"
#include "solcon/parallel.hpp"
#include "solcon/structure.hpp"

namespace solcon {

namespace {

constexpr std::uint64_t kCacheLimit = 4096;

std::uint64_t order_or_throw(const PermGroup& g, const Budget& budget) {
  return require_enumerable(g, budget);
}

/// Prime of a nontrivial element of prime-power order, or 0.
std::uint64_t prime_of(const Permutation& x) {
  const auto k = element_order(x);
  if (k == 1) return 0;
  const auto ps = prime_divisors(k);
  return ps.size() == 1 ? ps.front() : 0;
}

}  // namespace

FactorizedGroup make_factorized(const PermGroup& g, const PermGroup& a, const PermGroup& b,
                                const Budget& budget) {
  for (const auto* h : {&a, &b}) {
    require_same_degree(Permutation(g.degree()), Permutation(h->degree()));
    if (!h->is_subgroup_of(g)) {
      throw ArgumentError("not-a-subgroup", "factor is not a subgroup of G", render_generators(*h));
    }
  }
  const auto inter = subgroup_intersection(a, b, budget);
  if (a.order() * b.order() != g.order() * inter.order()) {
    throw ArgumentError("product-property", "|A||B|/|A n B| differs from |G|",
                        a.order().get_str() + "*" + b.order().get_str() + "/" +
                            inter.order().get_str() + " vs " + g.order().get_str());
  }
  return {g, a, b, inter.order_u64()};
}

ConnectionContext::ConnectionContext(PermGroup g, Budget budget)
    : g_(std::move(g)), budget_(budget) {
  const auto order = g_.order();
  if (fits_u64(order) && to_u64(order) <= kCacheLimit) {
    n_ = to_u64(order);
    cache_ = std::make_unique<std::atomic<std::uint8_t>[]>(n_ * n_);
    for (std::size_t i = 0; i < n_ * n_; ++i) cache_[i].store(0, std::memory_order_relaxed);
  }
}

bool ConnectionContext::soluble_pair(const Permutation& a, const Permutation& b) const {
  if (!cache_) return two_generated_soluble(a, b);
  const auto key = g_.element_index(a) * n_ + g_.element_index(b);
  // 0 unknown, 1 soluble, 2 insoluble. Racing writers store the same value.
  const auto hit = cache_[key].load(std::memory_order_relaxed);
  if (hit != 0) return hit == 1;
  const bool s = two_generated_soluble(a, b);
  cache_[key].store(s ? 1 : 2, std::memory_order_relaxed);
  return s;
}

const PermGroup& ConnectionContext::radical() {
  std::call_once(radical_once_, [&] { radical_ = soluble_radical(g_, RadicalMethod::gkps, budget_); });
  return *radical_;
}

ConditionResult check_condition(const FactorizedGroup& f, ConnectionMode mode, const Budget& budget,
                                ConnectionContext* ctx) {
  std::optional<ConnectionContext> local;
  if (!ctx) ctx = &local.emplace(f.G, budget);
  order_or_throw(f.A, budget);
  order_or_throw(f.B, budget);
  auto as = f.A.elements(budget);
  auto bs = f.B.elements(budget);
  std::vector<std::uint64_t> pa, pb;
  if (mode == ConnectionMode::prime_pairs) {
    auto keep = [](std::vector<Permutation>& xs, std::vector<std::uint64_t>& primes) {
      std::vector<Permutation> kept;
      for (auto& x : xs) {
        if (const auto p = prime_of(x)) {
          kept.push_back(std::move(x));
          primes.push_back(p);
        }
      }
      xs = std::move(kept);
    };
    keep(as, pa);
    keep(bs, pb);
  }
  const auto pairs = static_cast<long double>(as.size()) * static_cast<long double>(bs.size());
  if (pairs > static_cast<long double>(budget.max_pairs)) {
    throw ResourceError("pair budget exceeded",
                        std::to_string(as.size()) + " x " + std::to_string(bs.size()));
  }
  auto fails = [&](std::size_t i, std::size_t j) {
    if (mode == ConnectionMode::prime_pairs && pa[i] == pb[j]) return false;
    return !ctx->soluble_pair(as[i], bs[j]);
  };
  const auto hit = parallel_find_first(as.size(), budget.effective_jobs(), [&](std::size_t i) {
    for (std::size_t j = 0; j < bs.size(); ++j) {
      if (fails(i, j)) return true;
    }
    return false;
  }, 1);
  if (hit == as.size()) return {true, std::nullopt};
  for (std::size_t j = 0; j < bs.size(); ++j) {
    if (fails(hit, j)) return {false, Witness{as[hit], bs[j]}};
  }
  throw std::logic_error("witness vanished on rescan");
}

bool check_condition3(const FactorizedGroup& f, const Budget& budget, ConnectionContext* ctx) {
  std::optional<ConnectionContext> local;
  if (!ctx) ctx = &local.emplace(f.G, budget);
  const auto comm = commutator_of_subgroups(f.A, f.B, f.G);
  return comm.is_subgroup_of(ctx->radical());
}

ConnectionReport verify_main_theorem(const FactorizedGroup& f, const Budget& budget,
                                     ConnectionContext* ctx) {
  std::optional<ConnectionContext> local;
  if (!ctx) ctx = &local.emplace(f.G, budget);
  ConnectionReport r;
  auto c1 = check_condition(f, ConnectionMode::full, budget, ctx);
  r.condition1 = c1.holds;
  r.witness = std::move(c1.witness);
  r.condition2 = check_condition(f, ConnectionMode::prime_pairs, budget, ctx).holds;
  r.condition3 = check_condition3(f, budget, ctx);
  r.radical_order = ctx->radical().order();
  if (r.condition1 != r.condition2 || r.condition2 != r.condition3) {
    throw TheoremViolation("conditions (1), (2), (3) disagree",
                           std::string("c1=") + (r.condition1 ? "1" : "0") +
                               " c2=" + (r.condition2 ? "1" : "0") +
                               " c3=" + (r.condition3 ? "1" : "0") + "; A: " +
                               render_generators(f.A) + "B: " + render_generators(f.B));
  }
  return r;
}

bool verify_conjugation_lemma(const FactorizedGroup& f, const Permutation& g, const Permutation& h,
                              const Budget& budget, ConnectionContext* ctx) {
  for (const auto* x : {&g, &h}) {
    if (!f.G.contains(*x)) throw ArgumentError("membership-violation", "g and h must lie in G", x->to_string());
  }
  const auto conj = make_factorized(f.G, conjugate_subgroup(f.A, g), conjugate_subgroup(f.B, h), budget);
  return check_condition(conj, ConnectionMode::prime_pairs, budget, ctx).holds ==
         check_condition(f, ConnectionMode::prime_pairs, budget, ctx).holds;
}

bool radical_intersection_check(const FactorizedGroup& f, const Budget& budget,
                                ConnectionContext* ctx) {
  std::optional<ConnectionContext> local;
  if (!ctx) ctx = &local.emplace(f.G, budget);
  if (!check_condition(f, ConnectionMode::full, budget, ctx).holds) {
    throw ArgumentError("not-s-connected", "factorization is not S-connected", "");
  }
  const auto& rg = ctx->radical();
  for (const auto* h : {&f.A, &f.B}) {
    const auto own = soluble_radical(*h, RadicalMethod::gkps, budget);
    if (!(own == subgroup_intersection(*h, rg, budget))) return false;
  }
  return true;
}

}  // namespace solcon
