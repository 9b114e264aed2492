#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "bns/rational.hpp"

namespace bns {

/// Number of unordered pairs {i, j} in {1..n}, i.e. the rank of the
/// abelianization of P_n.
constexpr std::size_t pair_count(int n) {
  return n < 2 ? 0 : static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

/// Position of {i, j} in lexicographic pair order (1-2, 1-3, ..., 1-n, 2-3, ...).
/// Arguments may come in either order; they must be distinct and in 1..n.
std::size_t pair_index(int n, int i, int j);

/// A set A of at least two strand labels, sorted strictly increasing. It names
/// the swing generator S_A; two-element sets are the standard generators.
class SwingSet {
 public:
  SwingSet(std::initializer_list<int> members);
  explicit SwingSet(std::vector<int> members);

  /// {1, ..., n}: the full twist.
  static SwingSet all(int n);

  const std::vector<int>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  int front() const { return members_.front(); }
  int back() const { return members_.back(); }
  bool contains(int i) const;
  bool subset_of(const SwingSet& other) const;
  bool disjoint_from(const SwingSet& other) const;

  /// Throws IndexOutOfRange unless every member is in 1..n.
  void check_range(int n) const;

  friend bool operator==(const SwingSet&, const SwingSet&) = default;
  friend auto operator<=>(const SwingSet&, const SwingSet&) = default;

 private:
  std::vector<int> members_;
};

/// A bijection of {1..n}; `(*this)(i)` is the image of i.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  /// Sends `first[k]` to k + 1 for each k and the remaining labels, in
  /// increasing order, to |first| + 1, ..., n.
  static Permutation sending_to_front(int n, std::span<const int> first);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const;
  const std::vector<int>& images() const noexcept { return images_; }
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// outer ∘ inner: first apply `inner`, then `outer`.
Permutation compose(const Permutation& outer, const Permutation& inner);

/// A character of P_n, stored as its value on every standard generator S_ij.
/// By the freeness of the abelianization these values are unconstrained.
class Character {
 public:
  /// The zero character on P_n.
  explicit Character(int n);
  /// `weights` in lexicographic pair order; must have pair_count(n) entries.
  Character(int n, std::vector<Rat> weights);

  int n() const noexcept { return n_; }
  const Rat& weight(int i, int j) const { return weights_[pair_index(n_, i, j)]; }
  std::span<const Rat> weights() const noexcept { return weights_; }
  bool is_zero() const;

  Character with_weight(int i, int j, Rat value) const;

  friend bool operator==(const Character&, const Character&) = default;
  friend Character operator+(const Character& lhs, const Character& rhs);
  friend Character operator*(const Rat& scale, const Character& chi);

 private:
  int n_;
  std::vector<Rat> weights_;
};

/// The class [chi] of a nonzero character under positive dilation, stored in
/// canonical form: integer weights with gcd 1 (the sign is kept).
class ProjectivePoint {
 public:
  const Character& character() const noexcept { return character_; }
  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

 private:
  friend ProjectivePoint normalize(const Character& chi);
  explicit ProjectivePoint(Character canonical) : character_(std::move(canonical)) {}
  Character character_;
};

/// chi(S_A): the sum of the weights of all pairs inside A.
Rat swing_value(const Character& chi, const SwingSet& a);

/// chi(Delta), the value on the central full twist.
Rat delta_value(const Character& chi);

/// Throws ZeroCharacter for the zero character.
ProjectivePoint normalize(const Character& chi);

/// Relabels strands: the result has weight w{i,j} on {perm(i), perm(j)}.
Character permute(const Character& chi, const Permutation& perm);

/// psi ∘ phi_A: pulls a character of P_k back along the projection that
/// forgets the strands outside `a` (|a| = k).
Character pullback_phi(const Character& psi, const SwingSet& a, int n);

/// psi ∘ rho for the epimorphism P_4 -> P_3 that identifies planar generators
/// on disjoint edges: w12 = w34 = psi(S12), w13 = w24 = psi(S13),
/// w14 = w23 = psi(S23).
Character pullback_rho(const Character& psi);

}  // namespace bns
