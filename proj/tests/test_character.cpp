#include <doctest.h>

#include "bns/character.hpp"
#include "bns/errors.hpp"
#include "bns/json_io.hpp"
#include "support/random_characters.hpp"

using namespace bns;

namespace {

Character chi0() { return Character(4, {3, 2, -4, -5, 0, 1}); }

Rat r(long long p, long long q = 1) { return Rat(p, q); }

}  // namespace

TEST_CASE("pair_index walks pairs lexicographically") {
  CHECK(pair_index(4, 1, 2) == 0);
  CHECK(pair_index(4, 1, 4) == 2);
  CHECK(pair_index(4, 2, 3) == 3);
  CHECK(pair_index(4, 3, 4) == 5);
  CHECK(pair_index(4, 4, 3) == 5);
  CHECK_THROWS_AS(pair_index(4, 2, 2), IndexOutOfRange);
  CHECK_THROWS_AS(pair_index(4, 0, 2), IndexOutOfRange);
  CHECK_THROWS_AS(pair_index(4, 1, 5), IndexOutOfRange);
}

TEST_CASE("rationals parse and print exactly") {
  CHECK(parse_rat("3") == 3);
  CHECK(parse_rat("-4/6") == r(-2, 3));
  CHECK(to_string(r(-2, 3)) == "-2/3");
  CHECK(to_string(r(8, 4)) == "2");
  CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rat("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_rat(" 1"), ParseError);
  CHECK_THROWS_AS(parse_rat(""), ParseError);
  CHECK_THROWS_AS(parse_rat("0.5"), ParseError);
}

TEST_CASE("swing sets are sorted, duplicate-free and of size at least two") {
  CHECK(SwingSet{4, 1, 2}.members() == std::vector<int>{1, 2, 4});
  CHECK_THROWS_AS(SwingSet({1}), Error);
  CHECK_THROWS_AS(SwingSet({1, 1}), Error);
  CHECK_THROWS_AS(SwingSet({0, 2}), Error);
  CHECK(SwingSet{1, 4}.subset_of(SwingSet{1, 4, 5}));
  CHECK(SwingSet{2, 3}.disjoint_from(SwingSet{1, 4, 5}));
  CHECK_THROWS_AS(SwingSet({1, 5}).check_range(4), IndexOutOfRange);
}

TEST_CASE("swing values of chi0") {
  const auto chi = chi0();
  CHECK(swing_value(chi, {1, 2, 4}) == -1);
  CHECK(swing_value(chi, {1, 2, 3}) == 0);
  CHECK(swing_value(chi, {1, 2, 3, 4}) == -3);
  CHECK(delta_value(chi) == -3);
  CHECK_THROWS_AS(swing_value(chi, {1, 5}), IndexOutOfRange);
}

TEST_CASE("delta_value") {
  CHECK(delta_value(Character(5)) == 0);
  CHECK(delta_value(Character(3, {1, 1, -2})) == 0);
  const auto chi = chi0();
  CHECK(delta_value(chi) == swing_value(chi, SwingSet::all(4)));
}

TEST_CASE("character construction checks sizes") {
  CHECK_THROWS_AS(Character(4, {1, 2, 3}), SizeMismatch);
  CHECK(Character(4).is_zero());
  CHECK_FALSE(chi0().is_zero());
}

TEST_CASE("normalize clears denominators and keeps the sign") {
  const Character frac(3, {r(2, 3), r(4, 3), 0});
  CHECK(normalize(frac).character() == Character(3, {1, 2, 0}));
  CHECK(normalize(Character(2, {-5})).character() == Character(2, {-1}));
  CHECK(normalize(chi0()) == normalize(r(7) * chi0()));
  CHECK_FALSE(normalize(chi0()) == normalize(r(-1) * chi0()));
  CHECK_THROWS_AS(normalize(Character(4)), ZeroCharacter);
}

TEST_CASE("permute relabels strands") {
  const auto chi = chi0();
  CHECK(permute(chi, Permutation::identity(4)) == chi);
  const auto swapped = permute(chi, Permutation({2, 1, 3, 4}));
  CHECK(swapped.weight(1, 2) == 3);
  CHECK(swapped.weight(2, 3) == 2);
  CHECK(swapped.weight(2, 4) == -4);
  CHECK(swapped.weight(1, 3) == -5);
  CHECK(swapped.weight(1, 4) == 0);
  CHECK(swapped.weight(3, 4) == 1);
  CHECK_THROWS_AS(permute(chi, Permutation::identity(5)), SizeMismatch);
  CHECK_THROWS_AS(Permutation({1, 1, 3}), Error);
}

TEST_CASE("pullbacks") {
  const Character psi(3, {1, 1, -2});
  const auto pulled = pullback_phi(psi, {2, 4, 5}, 5);
  Character expected(5);
  expected = expected.with_weight(2, 4, 1).with_weight(2, 5, 1).with_weight(4, 5, -2);
  CHECK(pulled == expected);
  CHECK(pullback_phi(Character(3), {2, 4, 5}, 5).is_zero());
  CHECK(delta_value(pulled) == delta_value(psi));

  CHECK(pullback_rho(psi) == Character(4, {1, 1, -2, -2, 1, 1}));
  CHECK(pullback_rho(Character(3)).is_zero());
  CHECK_THROWS_AS(pullback_rho(Character(4)), SizeMismatch);
  CHECK_THROWS_AS(pullback_phi(psi, {1, 2}, 5), SizeMismatch);
}

TEST_CASE("property: swing_value is additive") {
  testing::CharacterSampler sampler(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = sampler.uniform(3, 7);
    const auto a = sampler.character(n);
    const auto b = sampler.character(n);
    std::vector<int> members;
    for (int v = 1; v <= n; ++v) {
      if (sampler.uniform(0, 1) == 1) members.push_back(v);
    }
    if (members.size() < 2) members = {1, n};
    const SwingSet s(members);
    CHECK(swing_value(a + b, s) == swing_value(a, s) + swing_value(b, s));
  }
}

TEST_CASE("property: normalize is idempotent and constant on dilation orbits") {
  testing::CharacterSampler sampler(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto chi = sampler.character(sampler.uniform(2, 7));
    const auto point = normalize(chi);
    CHECK(normalize(point.character()) == point);
    CHECK(normalize(sampler.dilation() * chi) == point);
    for (const auto& w : point.character().weights()) CHECK(denominator(w) == 1);
  }
}

TEST_CASE("property: permute is a group action") {
  testing::CharacterSampler sampler(13);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = sampler.uniform(2, 7);
    const auto chi = sampler.character(n);
    const auto sigma = sampler.permutation(n);
    const auto tau = sampler.permutation(n);
    CHECK(permute(permute(chi, sigma), tau) == permute(chi, compose(tau, sigma)));
    CHECK(permute(permute(chi, sigma), sigma.inverse()) == chi);
  }
}

TEST_CASE("property: pullback_phi transports swing values") {
  testing::CharacterSampler sampler(14);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = sampler.uniform(4, 7);
    const int k = sampler.uniform(2, n - 1);
    const auto perm = sampler.permutation(n);
    std::vector<int> a;
    for (int v = 1; v <= k; ++v) a.push_back(perm(v));
    const SwingSet set(a);
    const auto psi = sampler.character(k);
    const auto chi = pullback_phi(psi, set, n);
    // Every subset B of the image, as positions inside a.
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      std::vector<int> inner, outer;
      for (int p = 0; p < k; ++p) {
        if (mask & (1u << p)) {
          inner.push_back(p + 1);
          outer.push_back(set.members()[static_cast<std::size_t>(p)]);
        }
      }
      if (inner.size() < 2) continue;
      CHECK(swing_value(chi, SwingSet(outer)) == swing_value(psi, SwingSet(inner)));
    }
  }
}

TEST_CASE("property: delta of a rho pullback doubles") {
  testing::CharacterSampler sampler(15);
  for (int trial = 0; trial < 100; ++trial) {
    const auto psi = sampler.character(3);
    CHECK(delta_value(pullback_rho(psi)) == 2 * delta_value(psi));
  }
}

TEST_CASE("character JSON round trip") {
  testing::CharacterSampler sampler(16);
  for (int trial = 0; trial < 100; ++trial) {
    const auto chi = sampler.character(sampler.uniform(2, 7));
    const auto json = to_json(chi);
    CHECK(character_from_json(json) == chi);
    CHECK(to_json(character_from_json(Json::parse(json.dump()))) == json);
  }
}

TEST_CASE("character JSON errors name the key") {
  auto key_of = [](const char* text) {
    try {
      character_from_json(Json::parse(text));
    } catch (const ParseError& e) {
      return e.key();
    }
    return std::string("<no error>");
  };
  CHECK(key_of(R"({"weights": {}})") == "n");
  CHECK(key_of(R"({"n": 1, "weights": {}})") == "n");
  CHECK(key_of(R"({"n": 2})") == "weights");
  CHECK(key_of(R"({"n": 2, "weights": {"1-2": "1"}, "extra": 0})") == "extra");
  CHECK(key_of(R"({"n": 3, "weights": {"1-2": "1", "1-3": "0"}})") == "2-3");
  CHECK(key_of(R"({"n": 2, "weights": {"2-1": "1"}})") == "2-1");
  CHECK(key_of(R"({"n": 2, "weights": {"1-2": "1/0"}})") == "1-2");
  CHECK(key_of(R"({"n": 2, "weights": {"1-2": 0.5}})") == "1-2");
  CHECK(key_of(R"({"n": 2, "weights": {"a": "1"}})") == "a");
  CHECK(key_of(R"({"n": 2, "weights": {"1-2": 7}})") == "<no error>");
}
