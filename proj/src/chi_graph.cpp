#include "bns/chi_graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "bns/errors.hpp"

namespace bns {

CharGraph::CharGraph(int n, std::vector<Edge> edges, std::vector<Rat> labels)
    : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
  if (edges_.size() != labels_.size()) throw SizeMismatch("one label per edge");
  if (!std::is_sorted(edges_.begin(), edges_.end()) ||
      std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw Error("graph edges must be distinct and sorted");
  }
  for (const auto& e : edges_) {
    if (e.u < 1 || e.v > n_ || e.u == e.v) throw IndexOutOfRange("edge outside K_n");
  }
}

int CharGraph::degree(int vertex) const {
  return static_cast<int>(
      std::count_if(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.has(vertex); }));
}

CharGraph build_kchi(const Character& chi) {
  std::vector<Edge> edges;
  std::vector<Rat> labels;
  for (int i = 1; i <= chi.n(); ++i) {
    for (int j = i + 1; j <= chi.n(); ++j) {
      const Rat& w = chi.weight(i, j);
      if (!w.is_zero()) {
        edges.emplace_back(i, j);
        labels.push_back(w);
      }
    }
  }
  return CharGraph(chi.n(), std::move(edges), std::move(labels));
}

std::vector<int> support_vertices(const CharGraph& g) {
  std::vector<int> vertices;
  for (const auto& e : g.edges()) {
    vertices.push_back(e.u);
    vertices.push_back(e.v);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

std::optional<DisjointWitness> find_edge_disjoint_from_two(const CharGraph& g) {
  const auto& edges = g.edges();
  for (const auto& e : edges) {
    const Edge* first = nullptr;
    for (const auto& f : edges) {
      if (e.touches(f)) continue;
      if (first == nullptr) {
        first = &f;
      } else {
        return DisjointWitness{e, *first, f};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::array<Edge, 3>> find_three_disjoint_edges(const CharGraph& g) {
  const auto& edges = g.edges();
  for (std::size_t a = 0; a < edges.size(); ++a) {
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      if (edges[a].touches(edges[b])) continue;
      for (std::size_t c = b + 1; c < edges.size(); ++c) {
        if (!edges[c].touches(edges[a]) && !edges[c].touches(edges[b])) {
          return std::array<Edge, 3>{edges[a], edges[b], edges[c]};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::array<Edge, 2>> find_disjoint_pair(const CharGraph& g) {
  const auto& edges = g.edges();
  for (std::size_t a = 0; a < edges.size(); ++a) {
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      if (!edges[a].touches(edges[b])) return std::array<Edge, 2>{edges[a], edges[b]};
    }
  }
  return std::nullopt;
}

ShapeClass shape_classify(const CharGraph& g) {
  if (auto witness = find_edge_disjoint_from_two(g)) return shape::HasDisjointFromTwo{*witness};
  if (g.empty()) return shape::Empty{};

  const auto& edges = g.edges();
  for (int center : {edges.front().u, edges.front().v}) {
    const bool shared = std::all_of(edges.begin(), edges.end(),
                                    [&](const Edge& e) { return e.has(center); });
    if (!shared) continue;
    std::vector<int> leaves;
    for (const auto& e : edges) leaves.push_back(e.u == center ? e.v : e.u);
    std::sort(leaves.begin(), leaves.end());
    return shape::Star{center, std::move(leaves)};
  }

  auto vertices = support_vertices(g);
  if (vertices.size() <= 4) return shape::SmallK4{std::move(vertices)};
  return shape::Other{};
}

// ------------------------------------------------------------------- oracle

namespace {

struct CompleteGraphMasks {
  std::vector<Edge> edges;
  std::vector<std::uint32_t> vertex_mask;    // endpoints of edge k
  std::vector<std::uint32_t> disjoint_mask;  // edges sharing no endpoint with k

  explicit CompleteGraphMasks(int m) {
    for (int i = 1; i <= m; ++i) {
      for (int j = i + 1; j <= m; ++j) {
        edges.emplace_back(i, j);
        vertex_mask.push_back((1u << i) | (1u << j));
      }
    }
    disjoint_mask.assign(edges.size(), 0);
    for (std::size_t a = 0; a < edges.size(); ++a) {
      for (std::size_t b = 0; b < edges.size(); ++b) {
        if ((vertex_mask[a] & vertex_mask[b]) == 0) disjoint_mask[a] |= 1u << b;
      }
    }
  }

  std::vector<Edge> decode(std::uint32_t subset) const {
    std::vector<Edge> out;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (subset & (1u << k)) out.push_back(edges[k]);
    }
    return out;
  }
};

struct MaskFacts {
  bool disjoint_from_two = false;
  bool star = true;
  bool small = true;
};

MaskFacts mask_facts(const CompleteGraphMasks& k, std::uint32_t subset) {
  MaskFacts facts;
  std::uint32_t common = ~0u;
  std::uint32_t all = 0;
  for (std::uint32_t bits = subset; bits != 0; bits &= bits - 1) {
    const auto e = static_cast<std::size_t>(std::countr_zero(bits));
    if (std::popcount(subset & k.disjoint_mask[e]) >= 2) facts.disjoint_from_two = true;
    common &= k.vertex_mask[e];
    all |= k.vertex_mask[e];
  }
  facts.star = common != 0;
  facts.small = std::popcount(all) <= 4;
  return facts;
}

bool classification_agrees(const ShapeClass& shape, const MaskFacts& facts, std::uint32_t subset) {
  if (std::holds_alternative<shape::Other>(shape)) return false;
  if (facts.disjoint_from_two) return std::holds_alternative<shape::HasDisjointFromTwo>(shape);
  if (subset == 0) return std::holds_alternative<shape::Empty>(shape);
  if (facts.star) return std::holds_alternative<shape::Star>(shape);
  return facts.small && std::holds_alternative<shape::SmallK4>(shape);
}

}  // namespace

StarOrSmallReport oracle_star_or_small(int max_vertices, int cross_check_limit) {
  if (max_vertices > 8) {
    throw BudgetExceeded("star-or-small oracle is capped at 8 vertices (2^28 graphs)");
  }
  StarOrSmallReport report;
  report.max_vertices = max_vertices;
  if (max_vertices < 2) return report;

  const CompleteGraphMasks complete(max_vertices);
  const std::uint64_t total = std::uint64_t{1} << complete.edges.size();
  for (std::uint64_t s = 0; s < total; ++s) {
    const auto subset = static_cast<std::uint32_t>(s);
    const MaskFacts facts = mask_facts(complete, subset);
    ++report.graphs_checked;
    if (facts.disjoint_from_two) ++report.with_disjoint_from_two;
    if (facts.disjoint_from_two == (facts.star || facts.small)) {
      report.counterexamples.push_back(complete.decode(subset));
    }
  }

  report.cross_checked = cross_check_limit >= 2;
  for (int m = 2; m <= std::min(cross_check_limit, max_vertices); ++m) {
    const CompleteGraphMasks km(m);
    const std::uint64_t count = std::uint64_t{1} << km.edges.size();
    for (std::uint64_t s = 0; s < count; ++s) {
      const auto subset = static_cast<std::uint32_t>(s);
      auto edges = km.decode(subset);
      std::vector<Rat> labels(edges.size(), Rat(1));
      const CharGraph g(m, edges, std::move(labels));
      if (!classification_agrees(shape_classify(g), mask_facts(km, subset), subset)) {
        report.classifier_disagreements.push_back(std::move(edges));
      }
    }
  }
  return report;
}

// -------------------------------------------------------------- triple sums

std::optional<MatchingValues> triple_sum_consequences(const Character& chi) {
  if (chi.n() != 4) throw SizeMismatch("triple sums are defined for characters of P_4");
  for (const SwingSet& t : {SwingSet{1, 2, 3}, SwingSet{1, 2, 4}, SwingSet{1, 3, 4},
                            SwingSet{2, 3, 4}}) {
    if (!swing_value(chi, t).is_zero()) return std::nullopt;
  }
  MatchingValues values{chi.weight(1, 2), chi.weight(1, 3), chi.weight(1, 4)};
  if (chi.weight(3, 4) != values.x || chi.weight(2, 4) != values.y ||
      chi.weight(2, 3) != values.z || !(values.x + values.y + values.z).is_zero()) {
    throw std::logic_error("triple-sum identities violated");
  }
  return values;
}

Character matching_character(const MatchingValues& v) {
  // Lexicographic order: 12, 13, 14, 23, 24, 34.
  return Character(4, {v.x, v.y, v.z, v.z, v.y, v.x});
}

std::string to_dot(const CharGraph& g) {
  std::ostringstream out;
  out << "graph K_chi {\n";
  const auto support = support_vertices(g);
  for (int v = 1; v <= g.n(); ++v) {
    out << "  v" << v;
    if (!std::binary_search(support.begin(), support.end(), v)) out << " [style=dotted]";
    out << ";\n";
  }
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const auto& e = g.edges()[k];
    out << "  v" << e.u << " -- v" << e.v << " [label=\"" << to_string(g.labels()[k]) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace bns
