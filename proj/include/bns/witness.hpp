#pragma once

#include <span>
#include <string>
#include <vector>

#include "bns/character.hpp"
#include "bns/chi_graph.hpp"
#include "bns/classifier.hpp"

namespace bns {

/// S_swing = product[0] product[1] ... (left to right); `removed` is one of
/// the factors and is recovered from S_swing and the others.
struct Factorization {
  Edge removed;
  SwingSet swing;
  std::vector<Edge> product;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Data for the connected-and-dominating criterion: if J survives, C(J) is
/// connected, J dominates I and I generates P_n, then [chi] is in Sigma^1.
/// J and I are stated for the relabelled character permute(chi, permutation).
struct WitnessPackage {
  std::string lemma;  // certificate kind it supports
  Permutation permutation;
  std::vector<SwingSet> J;
  std::vector<SwingSet> I;
  std::vector<Factorization> factorizations;
};

/// C(J): adjacency by commutes_predicate.
struct CommutingGraph {
  std::vector<std::vector<bool>> adjacent;

  std::size_t size() const { return adjacent.size(); }
  std::size_t edge_count() const;
  bool connected() const;
};

CommutingGraph commuting_graph(std::span<const SwingSet> J, int n);

struct Domination {
  bool holds = false;
  std::vector<SwingSet> uncovered;
};

/// Every element of I commutes with some element of J.
Domination dominates(std::span<const SwingSet> J, std::span<const SwingSet> I, int n);

/// Rank over Q of the abelianized images of `generators` (the image of S_A
/// is the sum of the basis vectors of the pairs inside A).
std::size_t abelian_rank(std::span<const SwingSet> generators, int n);

/// Instantiates (J, I, factorizations) from the proof of the lemma the
/// certificate cites. Throws Error for circle certificates or when the
/// certificate does not re-check against chi.
WitnessPackage build_witness(const Certificate& certificate, const Character& chi);

struct WitnessReport {
  bool survives = false;
  bool connected = false;
  bool dominated = false;
  bool spans = false;                  // abelianized I has rank C(n,2)
  bool factorizations_abelian = false; // identities hold after abelianizing
  bool factorizations_exact = false;   // identities hold in B_n (n <= 5 only)
  bool exact_checked = false;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Checks all four conditions; never throws on a failed condition. The
/// factorization identities are also checked in the group itself when n <= 5.
WitnessReport verify_witness(const WitnessPackage& pkg, const Character& chi);

}  // namespace bns
