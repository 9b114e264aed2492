#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bns/character.hpp"
#include "bns/free_group.hpp"

namespace bns {

/// A word in the Artin generators of B_n: letter +i is sigma_i, -i its inverse.
class BraidWord {
 public:
  BraidWord(int strands, std::vector<int> letters);

  /// Parses "s1 S1 s2" (capital = inverse); an empty string is the identity.
  static BraidWord parse(std::string_view text, int strands);

  int strands() const noexcept { return strands_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  BraidWord inverse() const;

  friend BraidWord operator*(const BraidWord& lhs, const BraidWord& rhs);
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

std::string to_string(const BraidWord& w);

/// Artin's action of sigma_i on F_n: x_i -> x_i x_{i+1} x_i^-1,
/// x_{i+1} -> x_i, other letters fixed.
FreeGroupAut artin_sigma(int i, int n, bool inverse = false);

/// Left-to-right product of the letters' automorphisms.
FreeGroupAut to_automorphism(const BraidWord& w);

/// How the braid permutes strand positions; pure braids give the identity.
Permutation strand_permutation(const BraidWord& w);

/// A_ij = (s_{j-1} ... s_{i+1}) s_i^2 (S_{i+1} ... S_{j-1}): the standard
/// generator S_ij for points in convex position.
BraidWord standard_pure_word(int i, int j, int n);

/// S_A: move the members of A next to min(A) (passing the other strands on
/// the same side as standard_pure_word), twist them once, move them back.
/// For |A| = 2 this is standard_pure_word.
BraidWord swing_word(const SwingSet& a, int n);

/// Sufficient condition for S_A and S_B to commute: nested sets, or disjoint
/// sets whose convex hulls (points in convex position, circular order 1..n)
/// do not meet, i.e. some circular arc holds all of one and none of the other.
bool commutes_predicate(const SwingSet& a, const SwingSet& b);

/// uv = vu in the Artin representation. Throws BudgetExceeded above 6 strands.
bool commute_wordlevel(const BraidWord& u, const BraidWord& v);

/// Exact check of S_A = S_{f1} S_{f2} ... (left to right) in B_n via the
/// Artin representation.
bool swing_factorization_holds(const SwingSet& a, std::span<const SwingSet> factors, int n);

/// Named pass/fail line of the identity suite.
struct IdentityCheck {
  std::string name;
  bool holds = false;
};

/// S12 S13 S23 = S13 S23 S12 = S23 S12 S13 in B_3, and translated copies on
/// every contiguous triple of strands for n <= 5.
bool verify_swing_factorizations();

/// a b c = b c a = c a b for a = A12, b = A13, c = A23, and abc commutes with
/// a and b.
bool verify_p3_relation();

/// Words for the six planar generators a..f of P_4.
struct PlanarWords {
  std::array<BraidWord, 6> generators;
};

/// Parses lines "a: s1 s1"; '#' starts a comment. All six letters required.
PlanarWords parse_planar_words(std::istream& in);
PlanarWords load_planar_words(const std::filesystem::path& path);

/// a=A12, b=A13, c=A23, d=A34, e=A24, f=A14 with no conjugation.
PlanarWords naive_planar_words();

/// The nine relations of the planar presentation, each reported separately:
/// abc=bca, bca=cab, ad=da, cde=dec, dec=ecd, be=eb, bfd=fdb, fdb=dbf, cf=fc.
std::vector<IdentityCheck> verify_planar_presentation(const PlanarWords& words);

/// The planar relations after substituting a,d -> A12; b,e -> A13;
/// c,f -> A23 in B_3. Requires verify_p3_relation().
std::vector<IdentityCheck> verify_rho();

/// Everything the `verify` command reports. `seed` drives the randomized
/// free-reduction confluence check.
std::vector<IdentityCheck> identity_suite(const PlanarWords& words, unsigned long long seed = 1);

}  // namespace bns
