#include <doctest.h>

#include "bns/classifier.hpp"
#include "bns/errors.hpp"
#include "bns/witness.hpp"
#include "support/random_characters.hpp"

using namespace bns;

namespace {

Character chi0() { return Character(4, {3, 2, -4, -5, 0, 1}); }

std::vector<SwingSet> standard(int n) {
  std::vector<SwingSet> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out.push_back(SwingSet{i, j});
  }
  return out;
}

std::vector<SwingSet> without(std::vector<SwingSet> sets, std::initializer_list<SwingSet> removed) {
  for (const auto& r : removed) sets.erase(std::find(sets.begin(), sets.end(), r));
  return sets;
}

SwingSet all_but(int n, int skipped) {
  std::vector<int> m;
  for (int v = 1; v <= n; ++v) {
    if (v != skipped) m.push_back(v);
  }
  return SwingSet(m);
}

}  // namespace

TEST_CASE("commuting graphs of the lemma families") {
  const std::vector<SwingSet> triple{{1, 2}, {3, 4}, {5, 6}};
  const auto t = commuting_graph(triple, 6);
  CHECK(t.edge_count() == 3);
  CHECK(t.connected());

  const std::vector<SwingSet> path{{1, 2}, {3, 4}, {4, 5}};
  const auto p = commuting_graph(path, 5);
  CHECK(p.edge_count() == 2);
  CHECK(p.adjacent[0][1]);
  CHECK(p.adjacent[0][2]);
  CHECK_FALSE(p.adjacent[1][2]);

  for (int n = 5; n <= 8; ++n) {
    // S14, S24, S34, S_A1, S_A2, S_A3
    const std::vector<SwingSet> star{{1, 4}, {2, 4}, {3, 4}, all_but(n, 1), all_but(n, 2), all_but(n, 3)};
    const auto g = commuting_graph(star, n);
    // Hexagon S14 - S_A2 - S34 - S_A1 - S24 - S_A3 - S14.
    CHECK(g.adjacent[0][4]);
    CHECK(g.adjacent[4][2]);
    CHECK(g.adjacent[2][3]);
    CHECK(g.adjacent[3][1]);
    CHECK(g.adjacent[1][5]);
    CHECK(g.adjacent[5][0]);
    CHECK(g.connected());
  }
  CHECK_FALSE(commuting_graph(std::vector<SwingSet>{{1, 2}, {2, 3}}, 3).connected());
  CHECK_THROWS_AS(commuting_graph(std::vector<SwingSet>{{1, 7}}, 6), IndexOutOfRange);
}

TEST_CASE("domination") {
  const std::vector<SwingSet> triple{{1, 2}, {3, 4}, {5, 6}};
  CHECK(dominates(triple, standard(6), 6).holds);

  const std::vector<SwingSet> path{{1, 2}, {3, 4}, {4, 5}};
  auto i = without(standard(5), {{1, 4}, {2, 4}});
  i.push_back({1, 4, 5});
  i.push_back({2, 4, 5});
  CHECK(dominates(path, i, 5).holds);

  const auto miss = dominates(std::vector<SwingSet>{{1, 2}}, std::vector<SwingSet>{{1, 3}}, 3);
  CHECK_FALSE(miss.holds);
  CHECK(miss.uncovered == std::vector<SwingSet>{{1, 3}});
}

TEST_CASE("abelian rank") {
  CHECK(abelian_rank(standard(5), 5) == 10);
  CHECK(abelian_rank(without(standard(5), {{1, 4}}), 5) == 9);
  auto i = without(standard(5), {{1, 4}});
  i.push_back({1, 4, 5});
  CHECK(abelian_rank(i, 5) == 10);
}

TEST_CASE("zero-sum witness") {
  const auto chi = chi0();
  const auto pkg = build_witness(classify(chi).certificate, chi);
  CHECK(pkg.lemma == "zero_sum");
  CHECK(pkg.J == std::vector<SwingSet>{SwingSet::all(4)});
  CHECK(pkg.I == standard(4));
  CHECK(pkg.factorizations.empty());
  CHECK(verify_witness(pkg, chi).ok());
}

TEST_CASE("disjoint-leaves witness values") {
  const Character chi = Character(4).with_weight(1, 2, 1).with_weight(3, 4, -1);
  const auto pkg = build_witness(classify(chi).certificate, chi);
  CHECK(pkg.lemma == "disjoint_leaves");
  CHECK(pkg.J == std::vector<SwingSet>{{1, 2}, {3, 4}, {1, 2, 3}, {2, 3, 4}, {1, 2, 4}});
  const auto relabelled = permute(chi, pkg.permutation);
  std::vector<Rat> values;
  for (const auto& j : pkg.J) values.push_back(swing_value(relabelled, j));
  CHECK(values == std::vector<Rat>{1, -1, 1, -1, 1});
  CHECK(verify_witness(pkg, chi).ok());
}

TEST_CASE("triangle witness") {
  const Character chi = Character(4).with_weight(1, 2, 1).with_weight(3, 4, 1).with_weight(1, 3, -2);
  const auto t = make_triangle_certificate(4, {Edge{1, 2}, Edge{3, 4}}, {1, 2, 3}, -1);
  const auto pkg = build_witness(t, chi);
  CHECK(pkg.lemma == "triangle");
  CHECK(pkg.J == std::vector<SwingSet>{{1, 2}, {1, 2, 3}, {3, 4}});
  auto expected_i = without(standard(4), {{1, 4}, {2, 4}});
  expected_i.push_back({1, 3, 4});
  expected_i.push_back({2, 3, 4});
  CHECK(pkg.I == expected_i);
  REQUIRE(pkg.factorizations.size() == 2);
  CHECK(pkg.factorizations[0] ==
        Factorization{{1, 4}, {1, 3, 4}, {Edge{1, 3}, Edge{1, 4}, Edge{3, 4}}});
  CHECK(pkg.factorizations[1] ==
        Factorization{{2, 4}, {2, 3, 4}, {Edge{2, 3}, Edge{2, 4}, Edge{3, 4}}});
  const auto report = verify_witness(pkg, chi);
  CHECK(report.ok());
  CHECK(report.exact_checked);
  CHECK(report.factorizations_exact);
}

TEST_CASE("disjoint-pair witness carries exact factorizations") {
  const Character chi = Character(5).with_weight(1, 2, 2).with_weight(3, 4, -1).with_weight(4, 5, -1);
  const auto pkg = build_witness(classify(chi).certificate, chi);
  CHECK(pkg.lemma == "disjoint_pair");
  const auto report = verify_witness(pkg, chi);
  CHECK(report.ok());
  CHECK(report.factorizations_exact);
}

TEST_CASE("star witness survival follows the closed form") {
  testing::CharacterSampler sampler(51);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = sampler.uniform(4, 7);
    Character chi(n);
    const int leaves = sampler.uniform(3, n - 1);
    for (int k = 1; k <= leaves; ++k) chi = chi.with_weight(k, n, sampler.nonzero_rational());
    chi = chi.with_weight(1, n, chi.weight(1, n) - delta_value(chi));
    if (chi.weight(1, n) == 0) continue;
    const auto sigma = sampler.permutation(n);
    const auto moved = permute(chi, sigma);
    const auto c = classify(moved);
    REQUIRE(std::holds_alternative<cert::Star>(c.certificate));
    const auto pkg = build_witness(c.certificate, moved);
    const auto relabelled = permute(moved, pkg.permutation);
    for (int i = 1; i <= 3; ++i) {
      CHECK(swing_value(relabelled, all_but(n, i)) == -relabelled.weight(i, 4));
    }
    CHECK(verify_witness(pkg, moved).ok());
  }
}

TEST_CASE("circle certificates have no witness") {
  const Character chi(3, {1, 1, -2});
  CHECK_THROWS_AS(build_witness(classify(chi).certificate, chi), Error);
  CHECK_THROWS_AS(build_witness(cert::ZeroSum{-3}, Character(3, {1, 1, -2})), Error);
}

TEST_CASE("verify_witness reports failed conditions") {
  const Character chi = Character(3).with_weight(1, 2, 1).with_weight(2, 3, 1);
  WitnessPackage dead{"manual", Permutation::identity(3), {{1, 3}}, standard(3), {}};
  const auto r1 = verify_witness(dead, chi);
  CHECK_FALSE(r1.survives);
  CHECK_FALSE(r1.ok());

  WitnessPackage split{"manual", Permutation::identity(3), {{1, 2}, {2, 3}}, standard(3), {}};
  const auto r2 = verify_witness(split, chi);
  CHECK(r2.survives);
  CHECK_FALSE(r2.connected);

  WitnessPackage thin{"manual", Permutation::identity(3), {{1, 2, 3}}, {{1, 2}, {1, 3}}, {}};
  const auto r3 = verify_witness(thin, Character(3, {1, 1, 1}));
  CHECK(r3.dominated);
  CHECK_FALSE(r3.spans);

  const Character pair = Character(5).with_weight(1, 2, 2).with_weight(3, 4, -1).with_weight(4, 5, -1);
  auto pkg = build_witness(classify(pair).certificate, pair);
  pkg.factorizations[0].product = {Edge{1, 5}, Edge{1, 4}, Edge{4, 5}};
  const auto r4 = verify_witness(pkg, pair);
  CHECK(r4.factorizations_abelian);
  CHECK_FALSE(r4.factorizations_exact);
}

TEST_CASE("property: domination is monotone in J") {
  testing::CharacterSampler sampler(52);
  auto random_set = [&](int n) {
    std::vector<int> m;
    for (int v = 1; v <= n; ++v) {
      if (sampler.uniform(0, 2) == 0) m.push_back(v);
    }
    if (m.size() < 2) m = {1, n};
    return SwingSet(m);
  };
  for (int trial = 0; trial < 300; ++trial) {
    const int n = sampler.uniform(3, 8);
    std::vector<SwingSet> j{random_set(n)}, i;
    for (int k = 0; k < 6; ++k) i.push_back(random_set(n));
    auto before = dominates(j, i, n).uncovered;
    j.push_back(random_set(n));
    const auto after = dominates(j, i, n).uncovered;
    for (const auto& u : after) CHECK(std::find(before.begin(), before.end(), u) != before.end());
  }
}

TEST_CASE("property: every Sigma^1 verdict has a verified witness") {
  testing::CharacterSampler sampler(53);
  int built = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = sampler.uniform(2, 6);
    const auto chi = sampler.character(n);
    const auto c = classify(chi);
    if (c.verdict != Verdict::InSigma1) continue;
    const auto report = verify_witness(build_witness(c.certificate, chi), chi);
    CHECK_MESSAGE(report.ok(), kind_name(c.certificate));
    ++built;
  }
  CHECK(built > 500);
}
