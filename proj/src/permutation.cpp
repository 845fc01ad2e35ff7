#include "solcon/permutation.hpp"

#include <limits>
#include <numeric>

#include "solcon/errors.hpp"
#include "solcon/numtheory.hpp"

namespace solcon {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree > std::numeric_limits<Point>::max() + std::size_t{1}) {
    throw ArgumentError("permutation degree too large", std::to_string(degree));
  }
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const auto v = images_[i];
    if (v >= images_.size() || seen[v]) {
      throw ArgumentError("image sequence is not a bijection",
                          "position " + std::to_string(i));
    }
    seen[v] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const auto a = cycle[i];
      if (a >= degree) {
        throw ArgumentError("point out of range", std::to_string(a));
      }
      if (used[a]) throw ArgumentError("point repeated in cycles", std::to_string(a));
      used[a] = true;
      p.images_[a] = cycle[(i + 1) % cycle.size()];
    }
  }
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

Permutation Permutation::pow(std::int64_t k) const {
  Permutation base = k < 0 ? inverse() : *this;
  auto e = static_cast<std::uint64_t>(k < 0 ? -k : k);
  Permutation result(degree());
  while (e != 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<Point> cycle;
    for (auto j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      cycle.push_back(j);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_string(bool one_based) const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(c[i] + (one_based ? 1 : 0));
    }
    s += ')';
  }
  return s;
}

void Permutation::assign_product(const Permutation& a, const Permutation& b) {
  const auto n = a.images_.size();
  images_.resize(n);
  for (std::size_t i = 0; i < n; ++i) images_[i] = b.images_[a.images_[i]];
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  require_same_degree(a, b);
  Permutation r;
  r.images_.resize(a.images_.size());
  for (std::size_t i = 0; i < a.images_.size(); ++i) r.images_[i] = b.images_[a.images_[i]];
  return r;
}

Permutation conjugate(const Permutation& x, const Permutation& g) {
  require_same_degree(x, g);
  // x^g maps i^g to (i^x)^g.
  std::vector<Point> img(x.degree());
  for (std::size_t i = 0; i < x.degree(); ++i) img[g[i]] = g[x[i]];
  return Permutation(std::move(img));
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

std::uint64_t element_order(const Permutation& g) {
  std::uint64_t order = 1;
  std::vector<bool> seen(g.degree(), false);
  for (std::size_t i = 0; i < g.degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = g[j]) {
      seen[j] = true;
      ++len;
    }
    order = checked_lcm(order, len);
  }
  return order;
}

bool is_p_element(const Permutation& g, std::uint64_t p) {
  auto n = element_order(g);
  while (n % p == 0) n /= p;
  return n == 1;
}

std::size_t support_size(const Permutation& g) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < g.degree(); ++i) n += g[i] != i;
  return n;
}

void require_same_degree(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw ArgumentError("degree-mismatch", "permutation degrees differ",
                        std::to_string(a.degree()) + " vs " + std::to_string(b.degree()));
  }
}

}  // namespace solcon
