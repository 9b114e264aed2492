#include "bns/witness.hpp"

#include <algorithm>
#include <numeric>

#include "bns/braid.hpp"
#include "bns/errors.hpp"

namespace bns {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

SwingSet pair_set(const Edge& e) { return SwingSet{e.u, e.v}; }

SwingSet all_but(int n, int skipped) {
  std::vector<int> members;
  for (int v = 1; v <= n; ++v) {
    if (v != skipped) members.push_back(v);
  }
  return SwingSet(std::move(members));
}

std::vector<SwingSet> standard_generators(int n, std::initializer_list<Edge> removed = {}) {
  std::vector<SwingSet> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (std::find(removed.begin(), removed.end(), Edge(i, j)) == removed.end()) {
        out.push_back(SwingSet{i, j});
      }
    }
  }
  return out;
}

std::string describe(const SwingSet& s) {
  std::string out = "S_{";
  for (int v : s.members()) out += std::to_string(v) + (v == s.back() ? "" : ",");
  return out + "}";
}

std::vector<Rat> abelian_image(const SwingSet& s, int n) {
  std::vector<Rat> row(pair_count(n));
  const auto& m = s.members();
  for (std::size_t p = 0; p < m.size(); ++p) {
    for (std::size_t q = p + 1; q < m.size(); ++q) row[pair_index(n, m[p], m[q])] = 1;
  }
  return row;
}

}  // namespace

std::size_t CommutingGraph::edge_count() const {
  std::size_t count = 0;
  for (std::size_t a = 0; a < adjacent.size(); ++a) {
    for (std::size_t b = a + 1; b < adjacent.size(); ++b) count += adjacent[a][b] ? 1 : 0;
  }
  return count;
}

bool CommutingGraph::connected() const {
  if (adjacent.empty()) return false;
  std::vector<bool> seen(adjacent.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < adjacent.size(); ++w) {
      if (adjacent[v][w] && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool s) { return s; });
}

CommutingGraph commuting_graph(std::span<const SwingSet> J, int n) {
  CommutingGraph g;
  g.adjacent.assign(J.size(), std::vector<bool>(J.size(), false));
  for (const auto& j : J) j.check_range(n);
  for (std::size_t a = 0; a < J.size(); ++a) {
    for (std::size_t b = a + 1; b < J.size(); ++b) {
      g.adjacent[a][b] = g.adjacent[b][a] = commutes_predicate(J[a], J[b]);
    }
  }
  return g;
}

Domination dominates(std::span<const SwingSet> J, std::span<const SwingSet> I, int n) {
  Domination result;
  for (const auto& i : I) {
    i.check_range(n);
    const bool covered =
        std::any_of(J.begin(), J.end(), [&](const SwingSet& j) { return commutes_predicate(i, j); });
    if (!covered) result.uncovered.push_back(i);
  }
  result.holds = result.uncovered.empty();
  return result;
}

std::size_t abelian_rank(std::span<const SwingSet> generators, int n) {
  std::vector<std::vector<Rat>> rows;
  for (const auto& g : generators) rows.push_back(abelian_image(g, n));
  const std::size_t cols = pair_count(n);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    auto pivot = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                              [&](const std::vector<Rat>& r) { return !r[col].is_zero(); });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), pivot);
    const auto& p = rows[rank];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      const Rat factor = rows[r][col] / p[col];
      for (std::size_t c = col; c < cols; ++c) rows[r][c] -= factor * p[c];
    }
    ++rank;
  }
  return rank;
}

WitnessPackage build_witness(const Certificate& certificate, const Character& chi) {
  if (auto defect = certificate_defect(certificate, chi)) {
    throw Error("certificate does not match the character: " + *defect);
  }
  const int n = chi.n();
  WitnessPackage pkg{std::string(kind_name(certificate)), Permutation::identity(n), {}, {}, {}};

  std::visit(
      overloaded{
          [&](const cert::CircleMembership&) {
            throw Error("circle certificates place [chi] in the complement; there is no witness");
          },
          [&](const cert::ZeroSum&) {
            pkg.J = {SwingSet::all(n)};
            pkg.I = standard_generators(n);
          },
          [&](const cert::DisjointTriple& c) {
            pkg.permutation = c.permutation;
            pkg.J = {SwingSet{1, 2}, SwingSet{3, 4}, SwingSet{5, 6}};
            pkg.I = standard_generators(n);
          },
          [&](const cert::DisjointPair& c) {
            pkg.permutation = c.permutation;
            pkg.J = {SwingSet{1, 2}, SwingSet{3, 4}, SwingSet{4, 5}};
            pkg.I = standard_generators(n, {Edge(1, 4), Edge(2, 4)});
            pkg.I.push_back(SwingSet{1, 4, 5});
            pkg.I.push_back(SwingSet{2, 4, 5});
            pkg.factorizations = {
                {Edge(1, 4), SwingSet{1, 4, 5}, {Edge(1, 4), Edge(1, 5), Edge(4, 5)}},
                {Edge(2, 4), SwingSet{2, 4, 5}, {Edge(2, 4), Edge(2, 5), Edge(4, 5)}}};
          },
          [&](const cert::Star& c) {
            pkg.permutation = c.permutation;
            pkg.J = {SwingSet{1, 4}, SwingSet{2, 4}, SwingSet{3, 4},
                     all_but(n, 1), all_but(n, 2), all_but(n, 3)};
            pkg.I = standard_generators(n);
          },
          [&](const cert::DisjointLeaves& c) {
            pkg.permutation = c.permutation;
            pkg.J = {SwingSet{1, 2}, SwingSet{3, 4}, SwingSet{1, 2, 3}, all_but(n, 1),
                     all_but(n, 3)};
            pkg.I = standard_generators(n);
          },
          [&](const cert::Triangle& c) {
            pkg.permutation = c.permutation;
            pkg.J = {SwingSet{1, 2}, SwingSet{1, 2, 3}, SwingSet{3, 4}};
            pkg.I = standard_generators(n, {Edge(1, 4), Edge(2, 4)});
            pkg.I.push_back(SwingSet{1, 3, 4});
            pkg.I.push_back(SwingSet{2, 3, 4});
            pkg.factorizations = {
                {Edge(1, 4), SwingSet{1, 3, 4}, {Edge(1, 3), Edge(1, 4), Edge(3, 4)}},
                {Edge(2, 4), SwingSet{2, 3, 4}, {Edge(2, 3), Edge(2, 4), Edge(3, 4)}}};
          },
      },
      certificate);
  return pkg;
}

WitnessReport verify_witness(const WitnessPackage& pkg, const Character& chi) {
  WitnessReport report;
  const int n = chi.n();
  auto fail = [&](std::string message) { report.failures.push_back(std::move(message)); };

  if (pkg.permutation.size() != n) {
    fail("permutation acts on " + std::to_string(pkg.permutation.size()) + " strands, not " +
         std::to_string(n));
    return report;
  }
  for (const auto* family : {&pkg.J, &pkg.I}) {
    for (const auto& s : *family) {
      if (s.back() > n) {
        fail(describe(s) + " is outside 1.." + std::to_string(n));
        return report;
      }
    }
  }
  const Character relabelled = permute(chi, pkg.permutation);

  report.survives = !pkg.J.empty();
  if (pkg.J.empty()) fail("J is empty");
  for (const auto& j : pkg.J) {
    if (swing_value(relabelled, j).is_zero()) {
      report.survives = false;
      fail(describe(j) + " dies under chi");
    }
  }

  report.connected = commuting_graph(pkg.J, n).connected();
  if (!report.connected) fail("commuting graph C(J) is disconnected");

  const auto domination = dominates(pkg.J, pkg.I, n);
  report.dominated = domination.holds;
  for (const auto& u : domination.uncovered) fail(describe(u) + " commutes with no element of J");

  report.spans = abelian_rank(pkg.I, n) == pair_count(n);
  if (!report.spans) fail("abelianized I does not span the character lattice");

  report.factorizations_abelian = true;
  report.exact_checked = n <= 5;
  report.factorizations_exact = report.exact_checked;
  for (const auto& f : pkg.factorizations) {
    const std::string name = describe(f.swing);
    // Abelianized: the product's pair vectors sum to the swing's.
    std::vector<Rat> sum(pair_count(n));
    bool in_range = true;
    for (const auto& e : f.product) {
      if (e.v > n || e.u < 1) in_range = false; else sum[pair_index(n, e.u, e.v)] += 1;
    }
    const bool contains_removed =
        std::find(f.product.begin(), f.product.end(), f.removed) != f.product.end();
    if (!in_range || !contains_removed || f.swing.back() > n || sum != abelian_image(f.swing, n)) {
      report.factorizations_abelian = false;
      fail(name + " factorization fails in the abelianization");
      continue;
    }
    // Recovery uses only S_swing and the other factors, all of which are in I.
    auto in_I = [&](const SwingSet& s) {
      return std::find(pkg.I.begin(), pkg.I.end(), s) != pkg.I.end();
    };
    bool recoverable = in_I(f.swing) && !in_I(pair_set(f.removed));
    for (const auto& e : f.product) {
      if (e != f.removed && !in_I(pair_set(e))) recoverable = false;
    }
    if (!recoverable) {
      report.factorizations_abelian = false;
      fail(name + " factorization does not recover the removed generator from I");
    }
    if (report.exact_checked) {
      std::vector<SwingSet> factors;
      for (const auto& e : f.product) factors.push_back(pair_set(e));
      if (!swing_factorization_holds(f.swing, factors, n)) {
        report.factorizations_exact = false;
        fail(name + " factorization fails in the braid group");
      }
    }
  }
  return report;
}

}  // namespace bns
