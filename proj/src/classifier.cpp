#include "bns/classifier.hpp"

#include <algorithm>
#include <stdexcept>

#include "bns/errors.hpp"

namespace bns {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

int shared_vertex(const Edge& a, const Edge& b) {
  if (b.has(a.u)) return a.u;
  if (b.has(a.v)) return a.v;
  return 0;
}

int other_end(const Edge& e, int vertex) { return e.u == vertex ? e.v : e.u; }

Permutation to_front(int n, std::initializer_list<int> labels) {
  return Permutation::sending_to_front(n, std::vector<int>(labels));
}

cert::DisjointTriple disjoint_triple(int n, const std::array<Edge, 3>& edges) {
  return {edges, to_front(n, {edges[0].u, edges[0].v, edges[1].u, edges[1].v, edges[2].u,
                              edges[2].v})};
}

cert::DisjointPair disjoint_pair(int n, const DisjointWitness& w) {
  const int hub = shared_vertex(w.first, w.second);
  return {w.edge,
          {w.first, w.second},
          to_front(n, {w.edge.u, w.edge.v, other_end(w.first, hub), hub, other_end(w.second, hub)})};
}

cert::Star star(int n, const shape::Star& s) {
  return {s.center, s.leaves, to_front(n, {s.leaves[0], s.leaves[1], s.leaves[2], s.center})};
}

std::optional<cert::DisjointLeaves> disjoint_leaves(const CharGraph& g) {
  std::vector<std::pair<int, Edge>> leaves;  // leaf, its unique edge
  for (int v = 1; v <= g.n(); ++v) {
    if (g.degree(v) != 1) continue;
    for (const auto& e : g.edges()) {
      if (e.has(v)) leaves.emplace_back(v, e);
    }
  }
  for (std::size_t a = 0; a < leaves.size(); ++a) {
    for (std::size_t b = a + 1; b < leaves.size(); ++b) {
      const auto& [u, eu] = leaves[a];
      const auto& [v, ev] = leaves[b];
      if (eu.touches(ev)) continue;
      return cert::DisjointLeaves{
          {u, v}, {eu, ev}, to_front(g.n(), {u, other_end(eu, u), v, other_end(ev, v)})};
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_permutation(const Permutation& perm, int n) {
  if (perm.size() != n) return "permutation acts on the wrong number of strands";
  return std::nullopt;
}

std::optional<std::string> check_edge_maps_to(const Permutation& perm, const Edge& e,
                                              const Edge& target) {
  if (Edge(perm(e.u), perm(e.v)) != target) {
    return "permutation does not send {" + std::to_string(e.u) + "," + std::to_string(e.v) +
           "} to {" + std::to_string(target.u) + "," + std::to_string(target.v) + "}";
  }
  return std::nullopt;
}

std::optional<std::string> check_survives(const Character& chi, const Edge& e) {
  if (e.u < 1 || e.v > chi.n() || e.u == e.v) return "edge outside K_n";
  if (chi.weight(e.u, e.v).is_zero()) {
    return "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not in K_chi";
  }
  return std::nullopt;
}

}  // namespace

cert::Triangle make_triangle_certificate(int n, const std::array<Edge, 2>& edges,
                                         const SwingSet& triangle, const Rat& value) {
  const Edge* whole = nullptr;
  const Edge* split = nullptr;
  for (const auto& e : edges) {
    if (triangle.contains(e.u) && triangle.contains(e.v)) whole = &e; else split = &e;
  }
  if (whole == nullptr || split == nullptr || triangle.size() != 3) {
    throw Error("triangle must contain exactly one edge of the disjoint pair");
  }
  const int inside = triangle.contains(split->u) ? split->u : split->v;
  return cert::Triangle{edges, triangle, value,
                        to_front(n, {whole->u, whole->v, inside, other_end(*split, inside)})};
}

Classification classify(const Character& chi) {
  if (chi.is_zero()) throw ZeroCharacter();
  const int n = chi.n();

  Rat delta = delta_value(chi);
  if (!delta.is_zero()) return {Verdict::InSigma1, cert::ZeroSum{std::move(delta)}};

  const CharGraph g = build_kchi(chi);
  if (auto triple = find_three_disjoint_edges(g)) {
    return {Verdict::InSigma1, disjoint_triple(n, *triple)};
  }
  if (auto witness = find_edge_disjoint_from_two(g)) {
    return {Verdict::InSigma1, disjoint_pair(n, *witness)};
  }

  const ShapeClass shape = shape_classify(g);
  if (std::holds_alternative<shape::Other>(shape)) {
    throw std::logic_error("graph is neither a star nor supported on four vertices");
  }
  if (const auto* s = std::get_if<shape::Star>(&shape); s != nullptr && s->leaves.size() >= 3) {
    return {Verdict::InSigma1, star(n, *s)};
  }

  const auto support = support_vertices(g);
  if (support.size() <= 3) {
    // delta = 0 rules out a single edge, so the support is exactly three vertices.
    CircleId id(CircleKind::P3, SwingSet(support));
    if (!on_p3_circle(chi, id)) throw std::logic_error("expected a P3 circle");
    return {Verdict::InComplement, cert::CircleMembership{std::move(id)}};
  }
  if (support.size() != 4) throw std::logic_error("unclassified character");

  if (auto leaves = disjoint_leaves(g)) return {Verdict::InSigma1, std::move(*leaves)};

  const auto pair = find_disjoint_pair(g);
  if (!pair) throw std::logic_error("four-vertex non-star graph without disjoint edges");
  const std::array<SwingSet, 4> triangles{
      SwingSet{support[0], support[1], support[2]}, SwingSet{support[0], support[1], support[3]},
      SwingSet{support[0], support[2], support[3]}, SwingSet{support[1], support[2], support[3]}};
  for (const auto& t : triangles) {
    Rat value = swing_value(chi, t);
    if (!value.is_zero()) {
      return {Verdict::InSigma1, make_triangle_certificate(n, *pair, t, value)};
    }
  }

  // All four triangle values vanish: disjoint edges carry equal values.
  CircleId id(CircleKind::P4, SwingSet(support));
  if (!on_p4_circle(chi, id)) throw std::logic_error("expected a P4 circle");
  return {Verdict::InComplement, cert::CircleMembership{std::move(id)}};
}

std::string_view kind_name(const Certificate& certificate) {
  return std::visit(overloaded{
                        [](const cert::CircleMembership&) { return "circle"; },
                        [](const cert::ZeroSum&) { return "zero_sum"; },
                        [](const cert::DisjointTriple&) { return "disjoint_triple"; },
                        [](const cert::DisjointPair&) { return "disjoint_pair"; },
                        [](const cert::Star&) { return "star"; },
                        [](const cert::DisjointLeaves&) { return "disjoint_leaves"; },
                        [](const cert::Triangle&) { return "triangle"; },
                    },
                    certificate);
}

std::optional<std::string> certificate_defect(const Certificate& certificate,
                                              const Character& chi) {
  if (chi.is_zero()) return "character is zero";
  const int n = chi.n();
  using Defect = std::optional<std::string>;

  return std::visit(
      overloaded{
          [&](const cert::CircleMembership& c) -> Defect {
            if (c.id.support.back() > n) return "circle support outside 1..n";
            if (!on_circle(chi, c.id)) return "character is not on the named circle";
            return std::nullopt;
          },
          [&](const cert::ZeroSum& c) -> Defect {
            if (c.delta.is_zero()) return "zero-sum certificate with delta = 0";
            if (delta_value(chi) != c.delta) return "recorded delta differs from chi(Delta)";
            return std::nullopt;
          },
          [&](const cert::DisjointTriple& c) -> Defect {
            if (auto d = check_permutation(c.permutation, n)) return d;
            const std::array<Edge, 3> targets{Edge(1, 2), Edge(3, 4), Edge(5, 6)};
            for (std::size_t k = 0; k < 3; ++k) {
              if (auto d = check_survives(chi, c.edges[k])) return d;
              if (auto d = check_edge_maps_to(c.permutation, c.edges[k], targets[k])) return d;
            }
            return std::nullopt;
          },
          [&](const cert::DisjointPair& c) -> Defect {
            if (auto d = check_permutation(c.permutation, n)) return d;
            const std::array<Edge, 3> edges{c.edge, c.pair[0], c.pair[1]};
            const std::array<Edge, 3> targets{Edge(1, 2), Edge(3, 4), Edge(4, 5)};
            for (std::size_t k = 0; k < 3; ++k) {
              if (auto d = check_survives(chi, edges[k])) return d;
              if (auto d = check_edge_maps_to(c.permutation, edges[k], targets[k])) return d;
            }
            return std::nullopt;
          },
          [&](const cert::Star& c) -> Defect {
            if (auto d = check_permutation(c.permutation, n)) return d;
            if (c.leaves.size() < 3) return "star needs at least three leaves";
            if (!delta_value(chi).is_zero()) return "star certificate expects chi(Delta) = 0";
            const CharGraph g = build_kchi(chi);
            if (g.edges().size() != c.leaves.size()) return "leaf count differs from edge count";
            for (int leaf : c.leaves) {
              if (auto d = check_survives(chi, Edge(leaf, c.center))) return d;
              if (g.degree(leaf) != 1) return "star leaf has valence other than 1";
            }
            for (std::size_t k = 0; k < 3; ++k) {
              const int label = static_cast<int>(k) + 1;
              if (auto d = check_edge_maps_to(c.permutation, Edge(c.leaves[k], c.center),
                                              Edge(label, 4))) {
                return d;
              }
            }
            return std::nullopt;
          },
          [&](const cert::DisjointLeaves& c) -> Defect {
            if (auto d = check_permutation(c.permutation, n)) return d;
            if (!delta_value(chi).is_zero()) {
              return "disjoint-leaves certificate expects chi(Delta) = 0";
            }
            const CharGraph g = build_kchi(chi);
            if (c.edges[0].touches(c.edges[1])) return "leaf edges are not disjoint";
            const std::array<Edge, 2> targets{Edge(1, 2), Edge(3, 4)};
            for (std::size_t k = 0; k < 2; ++k) {
              if (auto d = check_survives(chi, c.edges[k])) return d;
              if (!c.edges[k].has(c.leaves[k])) return "leaf is not an endpoint of its edge";
              if (g.degree(c.leaves[k]) != 1) return "leaf has valence other than 1";
              if (auto d = check_edge_maps_to(c.permutation, c.edges[k], targets[k])) return d;
            }
            if (c.permutation(c.leaves[0]) != 1 || c.permutation(c.leaves[1]) != 3) {
              return "permutation does not send the leaves to 1 and 3";
            }
            return std::nullopt;
          },
          [&](const cert::Triangle& c) -> Defect {
            if (auto d = check_permutation(c.permutation, n)) return d;
            if (c.edges[0].touches(c.edges[1])) return "triangle edges are not disjoint";
            for (const auto& e : c.edges) {
              if (auto d = check_survives(chi, e)) return d;
            }
            if (c.triangle.size() != 3) return "triangle is not a 3-set";
            if (c.triangle.back() > n) return "triangle outside 1..n";
            for (int v : c.triangle.members()) {
              if (!c.edges[0].has(v) && !c.edges[1].has(v)) {
                return "triangle vertex is not an endpoint of the disjoint pair";
              }
            }
            if (c.value.is_zero() || swing_value(chi, c.triangle) != c.value) {
              return "triangle value is zero or differs from chi(S_T)";
            }
            std::vector<int> image;
            for (int v : c.triangle.members()) image.push_back(c.permutation(v));
            if (SwingSet(image) != SwingSet{1, 2, 3}) return "triangle does not map to {1,2,3}";
            const bool first_whole = c.triangle.contains(c.edges[0].u) && c.triangle.contains(c.edges[0].v);
            const Edge& whole = first_whole ? c.edges[0] : c.edges[1];
            const Edge& split = first_whole ? c.edges[1] : c.edges[0];
            if (auto d = check_edge_maps_to(c.permutation, whole, Edge(1, 2))) return d;
            if (auto d = check_edge_maps_to(c.permutation, split, Edge(3, 4))) return d;
            return std::nullopt;
          },
      },
      certificate);
}

}  // namespace bns
