#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bns/character.hpp"
#include "bns/chi_graph.hpp"
#include "bns/circles.hpp"

namespace bns {

// Certificates. Every lemma certificate carries the relabelling `permutation`
// (original label -> normal-form label) that puts its witness data into the
// normal form used by the corresponding witness construction.
namespace cert {

/// [chi] lies on a P3- or P4-circle of the complement.
struct CircleMembership {
  CircleId id;
  friend bool operator==(const CircleMembership&, const CircleMembership&) = default;
};

/// chi(Delta) != 0 and Delta is central.
struct ZeroSum {
  Rat delta;
  friend bool operator==(const ZeroSum&, const ZeroSum&) = default;
};

/// Three pairwise disjoint edges; normal form 12, 34, 56.
struct DisjointTriple {
  std::array<Edge, 3> edges;
  Permutation permutation;
  friend bool operator==(const DisjointTriple&, const DisjointTriple&) = default;
};

/// `edge` is disjoint from both of `pair`, which share a vertex;
/// normal form 12; 34, 45.
struct DisjointPair {
  Edge edge;
  std::array<Edge, 2> pair;
  Permutation permutation;
  friend bool operator==(const DisjointPair&, const DisjointPair&) = default;
};

/// All edges meet `center`, at least three leaves; the first three leaves go
/// to 1, 2, 3 and the center to 4.
struct Star {
  int center;
  std::vector<int> leaves;
  Permutation permutation;
  friend bool operator==(const Star&, const Star&) = default;
};

/// Two valence-1 vertices whose edges are disjoint; leaves go to 1 and 3,
/// edges to 12 and 34.
struct DisjointLeaves {
  std::array<int, 2> leaves;
  std::array<Edge, 2> edges;
  Permutation permutation;
  friend bool operator==(const DisjointLeaves&, const DisjointLeaves&) = default;
};

/// A disjoint edge pair plus a triangle on three of its endpoints with
/// nonzero value; normal form 12, 34 and triangle 123.
struct Triangle {
  std::array<Edge, 2> edges;
  SwingSet triangle;
  Rat value;
  Permutation permutation;
  friend bool operator==(const Triangle&, const Triangle&) = default;
};

}  // namespace cert

using Certificate = std::variant<cert::CircleMembership, cert::ZeroSum, cert::DisjointTriple,
                                 cert::DisjointPair, cert::Star, cert::DisjointLeaves,
                                 cert::Triangle>;

enum class Verdict { InSigma1, InComplement };

struct Classification {
  Verdict verdict;
  Certificate certificate;
};

/// Decides whether [chi] lies in Sigma^1(P_n) and returns a certificate
/// naming the single reason. Stages, first match wins:
///   1. chi(Delta) != 0                           -> ZeroSum (covers n = 2)
///   2. three pairwise disjoint edges             -> DisjointTriple
///   3. an edge disjoint from two others          -> DisjointPair
///   4. a star with at least three edges          -> Star
///   5. support on at most three vertices         -> P3 circle
///   6. support on four vertices: disjoint leaves -> DisjointLeaves,
///      a nonzero triangle                        -> Triangle,
///      otherwise                                 -> P4 circle.
/// Throws ZeroCharacter for the zero character.
Classification classify(const Character& chi);

/// Machine name of the certificate kind, as used in JSON.
std::string_view kind_name(const Certificate& certificate);

/// Re-checks every numeric and combinatorial claim in `certificate` against
/// `chi`. Returns a description of the first failed claim, or nothing.
std::optional<std::string> certificate_defect(const Certificate& certificate,
                                              const Character& chi);

/// Certificate constructors used by the pipeline; exposed so a lemma can be
/// cited directly when its hypotheses hold even if an earlier stage applies.
cert::Triangle make_triangle_certificate(int n, const std::array<Edge, 2>& edges,
                                         const SwingSet& triangle, const Rat& value);

}  // namespace bns
