#pragma once

#include <optional>
#include <vector>

#include "bns/character.hpp"

namespace bns {

enum class CircleKind { P3, P4 };

/// One circle of the complement: P3 circles are indexed by 3-sets, P4 circles
/// by 4-sets of strands.
struct CircleId {
  CircleKind kind;
  SwingSet support;

  CircleId(CircleKind k, SwingSet s);

  friend bool operator==(const CircleId&, const CircleId&) = default;
};

/// All 3-subsets as P3 circles, then all 4-subsets as P4 circles, each block
/// in lexicographic order. There are C(n,3) + C(n,4) of them.
std::vector<CircleId> enumerate_circles(int n);

/// K_chi is supported inside the 3-set and chi(S_ijk) = 0.
bool on_p3_circle(const Character& chi, const CircleId& id);

/// K_chi is supported inside {i<j<k<l}, chi agrees on the disjoint pairs
/// ij|kl, ik|jl, il|jk, and the three shared values sum to zero.
bool on_p4_circle(const Character& chi, const CircleId& id);

bool on_circle(const Character& chi, const CircleId& id);

/// The unique circle containing [chi], if any. Only circles whose support
/// contains every vertex of K_chi are examined.
std::optional<CircleId> locate_circle(const Character& chi);

/// A point on the circle: P3 gets (t1, t2, -t1-t2) on the edges ij, ik, jk;
/// P4 gets those values on the matchings ij|kl, ik|jl, il|jk.
Character sample_circle(const CircleId& id, const Rat& t1, const Rat& t2, int n);

/// The circle with support relabelled by `perm`.
CircleId permute(const CircleId& id, const Permutation& perm);

}  // namespace bns
