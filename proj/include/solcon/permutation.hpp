#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace solcon {

using Point = std::uint16_t;

/// A bijection of {0, ..., degree-1}, stored as its image sequence.
///
/// Products follow the right-action convention: `(a * b)` applies `a`
/// first, then `b`, so `i^(ab) = (i^a)^b`. Conjugation is `x^g = g^-1 x g`
/// and the commutator is `[a, b] = a^-1 b^-1 a b`.
class Permutation {
 public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Takes ownership of an image sequence; throws ArgumentError unless it
  /// is a bijection.
  explicit Permutation(std::vector<Point> images);

  /// Builds a permutation from 0-based disjoint cycles.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t i) const noexcept { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  Permutation pow(std::int64_t k) const;

  /// Disjoint cycles of length >= 2, each starting at its least point,
  /// ordered by that point.
  std::vector<std::vector<Point>> cycles() const;

  /// Cycle notation, e.g. "(1,2,3)(4,5)"; "()" for the identity.
  std::string to_string(bool one_based = true) const;

  /// Overwrites *this with a * b without validation (hot-path helper).
  void assign_product(const Permutation& a, const Permutation& b);

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

/// `g^-1 x g`.
Permutation conjugate(const Permutation& x, const Permutation& g);

/// `a^-1 b^-1 a b`.
Permutation commutator(const Permutation& a, const Permutation& b);

/// Least k >= 1 with g^k = 1 (lcm of the cycle lengths).
std::uint64_t element_order(const Permutation& g);

/// True iff the order of `g` is a power of `p` (the identity counts).
bool is_p_element(const Permutation& g, std::uint64_t p);

/// Number of points moved by `g`.
std::size_t support_size(const Permutation& g);

void require_same_degree(const Permutation& a, const Permutation& b);

}  // namespace solcon

template <>
struct std::hash<solcon::Permutation> {
  std::size_t operator()(const solcon::Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : p.images()) h = (h ^ v) * 1099511628211ull;
    return h;
  }
};
