#include "bns/character.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bns/errors.hpp"

namespace bns {

std::size_t pair_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > n || i == j) {
    throw IndexOutOfRange("pair {" + std::to_string(i) + "," + std::to_string(j) +
                          "} is not a pair of distinct labels in 1.." + std::to_string(n));
  }
  // Pairs starting below i, then the offset of j within row i.
  const auto row = static_cast<std::size_t>(i - 1);
  const auto before = row * static_cast<std::size_t>(n) - row * (row + 1) / 2;
  return before + static_cast<std::size_t>(j - i - 1);
}

// ---------------------------------------------------------------- SwingSet

SwingSet::SwingSet(std::initializer_list<int> members) : SwingSet(std::vector<int>(members)) {}

SwingSet::SwingSet(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (members_.size() < 2) throw SizeMismatch("a swing set needs at least two members");
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw SizeMismatch("swing set has a repeated member");
  }
  if (members_.front() < 1) throw IndexOutOfRange("swing set members start at 1");
}

SwingSet SwingSet::all(int n) {
  std::vector<int> members(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(members.begin(), members.end(), 1);
  return SwingSet(std::move(members));
}

bool SwingSet::contains(int i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

bool SwingSet::subset_of(const SwingSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

bool SwingSet::disjoint_from(const SwingSet& other) const {
  auto a = members_.begin();
  auto b = other.members_.begin();
  while (a != members_.end() && b != other.members_.end()) {
    if (*a == *b) return false;
    if (*a < *b) ++a; else ++b;
  }
  return true;
}

void SwingSet::check_range(int n) const {
  if (members_.back() > n) {
    throw IndexOutOfRange("swing set member " + std::to_string(members_.back()) +
                          " exceeds n = " + std::to_string(n));
  }
}

// ------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int image : images_) {
    if (image < 1 || image > size() || seen[static_cast<std::size_t>(image)]) {
      throw IndexOutOfRange("not a permutation of 1.." + std::to_string(size()));
    }
    seen[static_cast<std::size_t>(image)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::sending_to_front(int n, std::span<const int> first) {
  std::vector<int> images(static_cast<std::size_t>(n), 0);
  int next = 1;
  for (int label : first) {
    if (label < 1 || label > n || images[static_cast<std::size_t>(label - 1)] != 0) {
      throw IndexOutOfRange("labels sent to the front must be distinct and in range");
    }
    images[static_cast<std::size_t>(label - 1)] = next++;
  }
  for (auto& image : images) {
    if (image == 0) image = next++;
  }
  return Permutation(std::move(images));
}

int Permutation::operator()(int i) const {
  if (i < 1 || i > size()) throw IndexOutOfRange("permutation argument out of range");
  return images_[static_cast<std::size_t>(i - 1)];
}

Permutation Permutation::inverse() const {
  std::vector<int> images(images_.size());
  for (int i = 1; i <= size(); ++i) images[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(images));
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) throw SizeMismatch("permutations act on different sets");
  std::vector<int> images(static_cast<std::size_t>(inner.size()));
  for (int i = 1; i <= inner.size(); ++i) images[static_cast<std::size_t>(i - 1)] = outer(inner(i));
  return Permutation(std::move(images));
}

// --------------------------------------------------------------- Character

Character::Character(int n) : n_(n), weights_(pair_count(n)) {
  if (n < 2) throw SizeMismatch("a character of P_n needs n >= 2");
}

Character::Character(int n, std::vector<Rat> weights) : n_(n), weights_(std::move(weights)) {
  if (n < 2) throw SizeMismatch("a character of P_n needs n >= 2");
  if (weights_.size() != pair_count(n)) {
    throw SizeMismatch("expected " + std::to_string(pair_count(n)) + " weights, got " +
                       std::to_string(weights_.size()));
  }
}

bool Character::is_zero() const {
  return std::all_of(weights_.begin(), weights_.end(), [](const Rat& w) { return w.is_zero(); });
}

Character Character::with_weight(int i, int j, Rat value) const {
  Character copy = *this;
  copy.weights_[pair_index(n_, i, j)] = std::move(value);
  return copy;
}

Character operator+(const Character& lhs, const Character& rhs) {
  if (lhs.n_ != rhs.n_) throw SizeMismatch("characters of different P_n");
  Character sum = lhs;
  for (std::size_t k = 0; k < sum.weights_.size(); ++k) sum.weights_[k] += rhs.weights_[k];
  return sum;
}

Character operator*(const Rat& scale, const Character& chi) {
  Character scaled = chi;
  for (auto& w : scaled.weights_) w *= scale;
  return scaled;
}

// --------------------------------------------------------------- operations

Rat swing_value(const Character& chi, const SwingSet& a) {
  a.check_range(chi.n());
  const auto& m = a.members();
  Rat total = 0;
  for (std::size_t p = 0; p < m.size(); ++p) {
    for (std::size_t q = p + 1; q < m.size(); ++q) total += chi.weight(m[p], m[q]);
  }
  return total;
}

Rat delta_value(const Character& chi) {
  Rat total = 0;
  for (const auto& w : chi.weights()) total += w;
  return total;
}

ProjectivePoint normalize(const Character& chi) {
  if (chi.is_zero()) throw ZeroCharacter();
  Int common_den = 1;
  for (const auto& w : chi.weights()) {
    common_den = boost::multiprecision::lcm(common_den, boost::multiprecision::denominator(w));
  }
  std::vector<Int> scaled;
  scaled.reserve(chi.weights().size());
  Int g = 0;
  for (const auto& w : chi.weights()) {
    Int v = boost::multiprecision::numerator(w) * (common_den / boost::multiprecision::denominator(w));
    g = boost::multiprecision::gcd(g, abs(v));
    scaled.push_back(std::move(v));
  }
  std::vector<Rat> canonical;
  canonical.reserve(scaled.size());
  for (auto& v : scaled) canonical.emplace_back(v / g);
  return ProjectivePoint(Character(chi.n(), std::move(canonical)));
}

Character permute(const Character& chi, const Permutation& perm) {
  if (perm.size() != chi.n()) throw SizeMismatch("permutation size differs from n");
  std::vector<Rat> weights(chi.weights().size());
  for (int i = 1; i <= chi.n(); ++i) {
    for (int j = i + 1; j <= chi.n(); ++j) {
      weights[pair_index(chi.n(), perm(i), perm(j))] = chi.weight(i, j);
    }
  }
  return Character(chi.n(), std::move(weights));
}

Character pullback_phi(const Character& psi, const SwingSet& a, int n) {
  if (static_cast<int>(a.size()) != psi.n()) {
    throw SizeMismatch("projection onto " + std::to_string(a.size()) +
                       " strands cannot carry a character of P_" + std::to_string(psi.n()));
  }
  a.check_range(n);
  std::vector<Rat> weights(pair_count(n));
  const auto& m = a.members();
  for (std::size_t p = 0; p < m.size(); ++p) {
    for (std::size_t q = p + 1; q < m.size(); ++q) {
      weights[pair_index(n, m[p], m[q])] = psi.weight(static_cast<int>(p) + 1, static_cast<int>(q) + 1);
    }
  }
  return Character(n, std::move(weights));
}

Character pullback_rho(const Character& psi) {
  if (psi.n() != 3) throw SizeMismatch("rho pulls back characters of P_3");
  const Rat& a = psi.weight(1, 2);
  const Rat& b = psi.weight(1, 3);
  const Rat& c = psi.weight(2, 3);
  // Lexicographic order: 12, 13, 14, 23, 24, 34.
  return Character(4, {a, b, c, c, b, a});
}

}  // namespace bns
