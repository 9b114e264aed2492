#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bns/character.hpp"

namespace bns {

/// Undirected edge {u, v} of K_n with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool touches(const Edge& other) const {
    return u == other.u || u == other.v || v == other.u || v == other.v;
  }
  bool has(int vertex) const { return u == vertex || v == vertex; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// K_chi: the support graph of a character, edges in lexicographic order,
/// each labelled with its (nonzero) weight.
class CharGraph {
 public:
  CharGraph(int n, std::vector<Edge> edges, std::vector<Rat> labels);

  int n() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Rat>& labels() const noexcept { return labels_; }
  bool empty() const noexcept { return edges_.empty(); }
  int degree(int vertex) const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<Rat> labels_;
};

CharGraph build_kchi(const Character& chi);

/// All endpoints of edges, increasing. This is the vertex set of K_chi with
/// isolated vertices removed.
std::vector<int> support_vertices(const CharGraph& g);

/// An edge together with two distinct edges it shares no endpoint with.
struct DisjointWitness {
  Edge edge;
  Edge first;
  Edge second;
  friend bool operator==(const DisjointWitness&, const DisjointWitness&) = default;
};

/// Lexicographically least (edge; first < second) witness, if any.
std::optional<DisjointWitness> find_edge_disjoint_from_two(const CharGraph& g);

/// Lexicographically least triple of pairwise disjoint edges, if any.
std::optional<std::array<Edge, 3>> find_three_disjoint_edges(const CharGraph& g);

/// Lexicographically least pair of disjoint edges, if any.
std::optional<std::array<Edge, 2>> find_disjoint_pair(const CharGraph& g);

namespace shape {
struct Empty {
  friend bool operator==(const Empty&, const Empty&) = default;
};
struct Star {
  int center = 0;
  std::vector<int> leaves;
  friend bool operator==(const Star&, const Star&) = default;
};
struct SmallK4 {
  std::vector<int> vertices;
  friend bool operator==(const SmallK4&, const SmallK4&) = default;
};
struct HasDisjointFromTwo {
  DisjointWitness witness;
  friend bool operator==(const HasDisjointFromTwo&, const HasDisjointFromTwo&) = default;
};
// Unreachable by the star-or-small lemma; kept so the claim is testable.
struct Other {
  friend bool operator==(const Other&, const Other&) = default;
};
}  // namespace shape

using ShapeClass =
    std::variant<shape::Empty, shape::Star, shape::SmallK4, shape::HasDisjointFromTwo, shape::Other>;

/// A graph that is both a star and supported on at most four vertices is
/// reported as a Star. For a single edge the smaller endpoint is the center.
ShapeClass shape_classify(const CharGraph& g);

struct StarOrSmallReport {
  int max_vertices = 0;
  std::uint64_t graphs_checked = 0;
  std::uint64_t with_disjoint_from_two = 0;
  /// Edge sets violating: no edge disjoint from two others <=> star or <= 4 endpoints.
  std::vector<std::vector<Edge>> counterexamples;
  /// Edge sets on which shape_classify disagrees with the brute-force predicates
  /// (only filled when cross-checking was requested).
  std::vector<std::vector<Edge>> classifier_disagreements;
  bool cross_checked = false;

  bool ok() const { return counterexamples.empty() && classifier_disagreements.empty(); }
};

/// Enumerates every edge subset of K_m for m = max_vertices (which contains
/// every graph on fewer vertices) with bit-mask predicates, independent of
/// shape_classify. With `cross_check_limit` > 0, shape_classify is also run on
/// every subset of K_m for m <= cross_check_limit and compared.
/// Throws BudgetExceeded for max_vertices > 8.
StarOrSmallReport oracle_star_or_small(int max_vertices, int cross_check_limit = 0);

/// Shared values on the three perfect matchings {12|34}, {13|24}, {14|23}.
struct MatchingValues {
  Rat x;
  Rat y;
  Rat z;
  friend bool operator==(const MatchingValues&, const MatchingValues&) = default;
};

/// For a character of P_4 whose four triangle values S_123, S_124, S_134,
/// S_234 all vanish, the values shared by disjoint edges. Empty otherwise.
std::optional<MatchingValues> triple_sum_consequences(const Character& chi);

/// The character of P_4 carrying x, y, z on the three perfect matchings.
Character matching_character(const MatchingValues& values);

/// Graphviz export: vertices v1..vn, edges labelled by their weights,
/// isolated vertices dotted.
std::string to_dot(const CharGraph& g);

}  // namespace bns
