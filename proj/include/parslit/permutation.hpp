#ifndef PARSLIT_PERMUTATION_HPP
#define PARSLIT_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace parslit {

/// A cycle in canonical rotation: starts at its smallest element.
using Cycle = std::vector<int>;

/// Permutation of {0, ..., n-1} in one-line form: p(x) = one_line[x].
class Permutation {
 public:
  Permutation() = default;
  /// Throws Malformed unless `one_line` is a bijection of {0, ..., n-1}.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(std::size_t n);
  /// The long cycle x -> x + 1 (mod n).
  static Permutation shift(std::size_t n);
  static Permutation transposition(std::size_t n, int a, int b);

  std::size_t size() const noexcept { return map_.size(); }
  int operator()(int x) const { return map_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& one_line() const noexcept { return map_; }

  Permutation inverse() const;
  bool is_identity() const;

  /// Composition: (a * b)(x) = a(b(x)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> map_;
};

/// Disjoint cycles covering the ground set, fixed points included, each in
/// canonical rotation and the list sorted by leading element.
std::vector<Cycle> cycles(const Permutation& p);

/// Rotates a cycle so that it starts at its minimum.
Cycle canonical_cycle(std::span<const int> cycle);

/// Index into cycles(p) of the cycle containing x.
std::size_t cycle_index_of(const std::vector<Cycle>& cs, int x);

}  // namespace parslit

#endif  // PARSLIT_PERMUTATION_HPP
