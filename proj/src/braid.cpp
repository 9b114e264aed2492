#include "bns/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <optional>
#include <random>
#include <sstream>

#include "bns/errors.hpp"

namespace bns {

// ---------------------------------------------------------------- BraidWord

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw SizeMismatch("a braid needs at least one strand");
  for (int l : letters_) {
    if (l == 0 || std::abs(l) >= strands_) {
      throw IndexOutOfRange("sigma_" + std::to_string(std::abs(l)) + " is not a generator of B_" +
                            std::to_string(strands_));
    }
  }
}

BraidWord BraidWord::parse(std::string_view text, int strands) {
  std::vector<int> letters;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token.size() < 2 || (token[0] != 's' && token[0] != 'S') ||
        !std::all_of(token.begin() + 1, token.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw ParseError(token, "expected an Artin letter like s1 or S1");
    }
    const int index = std::stoi(token.substr(1));
    letters.push_back(token[0] == 's' ? index : -index);
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord BraidWord::inverse() const {
  std::vector<int> letters;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) letters.push_back(-*it);
  return BraidWord(strands_, std::move(letters));
}

BraidWord operator*(const BraidWord& lhs, const BraidWord& rhs) {
  if (lhs.strands_ != rhs.strands_) throw SizeMismatch("braids on different strand counts");
  std::vector<int> letters = lhs.letters_;
  letters.insert(letters.end(), rhs.letters_.begin(), rhs.letters_.end());
  return BraidWord(lhs.strands_, std::move(letters));
}

std::string to_string(const BraidWord& w) {
  std::string out;
  for (int l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += (l > 0 ? 's' : 'S');
    out += std::to_string(std::abs(l));
  }
  return out;
}

// ------------------------------------------------------- Artin representation

FreeGroupAut artin_sigma(int i, int n, bool inverse) {
  if (i < 1 || i >= n) {
    throw IndexOutOfRange("sigma_" + std::to_string(i) + " needs 1 <= i < n = " + std::to_string(n));
  }
  std::vector<FreeWord> forward;
  for (int k = 1; k <= n; ++k) forward.push_back(FreeWord::letter(k));
  std::vector<FreeWord> backward = forward;
  const auto at = [](int k) { return static_cast<std::size_t>(k - 1); };
  forward[at(i)] = FreeWord{i, i + 1, -i};
  forward[at(i + 1)] = FreeWord{i};
  backward[at(i)] = FreeWord{i + 1};
  backward[at(i + 1)] = FreeWord{-(i + 1), i, i + 1};
  if (inverse) std::swap(forward, backward);
  return FreeGroupAut(std::move(forward), std::move(backward));
}

FreeGroupAut to_automorphism(const BraidWord& w) {
  const int n = w.strands();
  // Letter automorphisms are reused many times.
  std::vector<FreeGroupAut> positive, negative;
  for (int i = 1; i < n; ++i) {
    positive.push_back(artin_sigma(i, n));
    negative.push_back(artin_sigma(i, n, true));
  }
  FreeGroupAut result = FreeGroupAut::identity(n);
  for (int l : w.letters()) {
    const auto& step = l > 0 ? positive[static_cast<std::size_t>(l - 1)]
                             : negative[static_cast<std::size_t>(-l - 1)];
    result = compose(result, step);
  }
  return result;
}

Permutation strand_permutation(const BraidWord& w) {
  // position[p] = strand currently at position p.
  std::vector<int> position(static_cast<std::size_t>(w.strands()));
  for (int p = 0; p < w.strands(); ++p) position[static_cast<std::size_t>(p)] = p + 1;
  for (int l : w.letters()) {
    const auto i = static_cast<std::size_t>(std::abs(l) - 1);
    std::swap(position[i], position[i + 1]);
  }
  // Image of strand s is the position it ends at.
  std::vector<int> images(position.size());
  for (std::size_t p = 0; p < position.size(); ++p) {
    images[static_cast<std::size_t>(position[p] - 1)] = static_cast<int>(p) + 1;
  }
  return Permutation(std::move(images));
}

BraidWord standard_pure_word(int i, int j, int n) {
  if (i < 1 || j > n || i >= j) {
    throw IndexOutOfRange("A_ij needs 1 <= i < j <= n");
  }
  return swing_word(SwingSet{i, j}, n);
}

BraidWord swing_word(const SwingSet& a, int n) {
  a.check_range(n);
  const auto& m = a.members();
  const int base = m.front();
  const int k = static_cast<int>(m.size());
  std::vector<int> gather;
  for (int idx = 1; idx < k; ++idx) {
    for (int p = m[static_cast<std::size_t>(idx)] - 1; p >= base + idx; --p) gather.push_back(p);
  }
  std::vector<int> letters = gather;
  for (int round = 0; round < k; ++round) {
    for (int p = base; p <= base + k - 2; ++p) letters.push_back(p);
  }
  for (auto it = gather.rbegin(); it != gather.rend(); ++it) letters.push_back(-*it);
  return BraidWord(n, std::move(letters));
}

bool commutes_predicate(const SwingSet& a, const SwingSet& b) {
  if (a.subset_of(b) || b.subset_of(a)) return true;
  if (!a.disjoint_from(b)) return false;
  // Labels of the merged members in circular order; non-crossing iff at most
  // two maximal runs.
  std::vector<bool> from_a;
  auto pa = a.members().begin();
  auto pb = b.members().begin();
  while (pa != a.members().end() || pb != b.members().end()) {
    if (pb == b.members().end() || (pa != a.members().end() && *pa < *pb)) {
      from_a.push_back(true);
      ++pa;
    } else {
      from_a.push_back(false);
      ++pb;
    }
  }
  int changes = 0;
  for (std::size_t k = 0; k < from_a.size(); ++k) {
    if (from_a[k] != from_a[(k + 1) % from_a.size()]) ++changes;
  }
  return changes <= 2;
}

bool commute_wordlevel(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) throw SizeMismatch("braids on different strand counts");
  if (u.strands() > 6) throw BudgetExceeded("word-level commutation is capped at 6 strands");
  const auto fu = to_automorphism(u);
  const auto fv = to_automorphism(v);
  return aut_equal(compose(fu, fv), compose(fv, fu));
}

bool swing_factorization_holds(const SwingSet& a, std::span<const SwingSet> factors, int n) {
  auto product = FreeGroupAut::identity(n);
  for (const auto& f : factors) product = compose(product, to_automorphism(swing_word(f, n)));
  return aut_equal(product, to_automorphism(swing_word(a, n)));
}

// ------------------------------------------------------------------ checks

namespace {

FreeGroupAut product(std::initializer_list<const FreeGroupAut*> factors) {
  auto it = factors.begin();
  FreeGroupAut result = **it;
  for (++it; it != factors.end(); ++it) result = compose(result, **it);
  return result;
}

struct Relation {
  std::string_view lhs;
  std::string_view rhs;
};

constexpr std::array<Relation, 9> kPlanarRelations{{
    {"abc", "bca"}, {"bca", "cab"}, {"ad", "da"},
    {"cde", "dec"}, {"dec", "ecd"}, {"be", "eb"},
    {"bfd", "fdb"}, {"fdb", "dbf"}, {"cf", "fc"},
}};

FreeGroupAut evaluate(std::string_view symbols, const std::array<FreeGroupAut, 6>& gens) {
  FreeGroupAut result = FreeGroupAut::identity(gens[0].rank());
  for (char s : symbols) result = compose(result, gens[static_cast<std::size_t>(s - 'a')]);
  return result;
}

std::vector<IdentityCheck> check_planar_relations(const std::array<FreeGroupAut, 6>& gens,
                                                  std::string_view prefix) {
  std::vector<IdentityCheck> out;
  for (const auto& r : kPlanarRelations) {
    out.push_back({std::string(prefix) + std::string(r.lhs) + "=" + std::string(r.rhs),
                   aut_equal(evaluate(r.lhs, gens), evaluate(r.rhs, gens))});
  }
  return out;
}

bool triple_factorizations_hold(int first, int n) {
  const auto s12 = to_automorphism(standard_pure_word(first, first + 1, n));
  const auto s13 = to_automorphism(standard_pure_word(first, first + 2, n));
  const auto s23 = to_automorphism(standard_pure_word(first + 1, first + 2, n));
  const auto swing = to_automorphism(swing_word(SwingSet{first, first + 1, first + 2}, n));
  const auto p1 = product({&s12, &s13, &s23});
  const auto p2 = product({&s13, &s23, &s12});
  const auto p3 = product({&s23, &s12, &s13});
  return aut_equal(p1, p2) && aut_equal(p2, p3) && aut_equal(p1, swing);
}

bool artin_relations_hold(int n) {
  std::vector<FreeGroupAut> s;
  for (int i = 1; i < n; ++i) s.push_back(artin_sigma(i, n));
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!aut_equal(compose(s[i], artin_sigma(static_cast<int>(i) + 1, n, true)),
                   FreeGroupAut::identity(n))) {
      return false;
    }
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (j == i + 1) {
        if (!aut_equal(product({&s[i], &s[j], &s[i]}), product({&s[j], &s[i], &s[j]}))) return false;
      } else if (!aut_equal(compose(s[i], s[j]), compose(s[j], s[i]))) {
        return false;
      }
    }
  }
  return true;
}

bool pair_commutation_matches_predicate(int n) {
  std::vector<SwingSet> pairs;
  std::vector<FreeGroupAut> auts;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      pairs.push_back(SwingSet{i, j});
      auts.push_back(to_automorphism(standard_pure_word(i, j, n)));
    }
  }
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    for (std::size_t q = p; q < pairs.size(); ++q) {
      const bool word = aut_equal(compose(auts[p], auts[q]), compose(auts[q], auts[p]));
      if (word != commutes_predicate(pairs[p], pairs[q])) return false;
    }
  }
  return true;
}

bool standard_words_are_pure(int n) {
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (strand_permutation(standard_pure_word(i, j, n)) != Permutation::identity(n)) return false;
    }
  }
  return true;
}

bool reduction_is_confluent(unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> letter(1, 3);
  std::uniform_int_distribution<int> length(0, 24);
  std::bernoulli_distribution negate(0.5);
  auto random_letters = [&] {
    std::vector<int> w(static_cast<std::size_t>(length(rng)));
    for (auto& l : w) l = negate(rng) ? -letter(rng) : letter(rng);
    return w;
  };
  for (int trial = 0; trial < 500; ++trial) {
    const auto u = random_letters();
    const auto v = random_letters();
    std::vector<int> uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    if (FreeWord(uv) != FreeWord(u) * FreeWord(v)) return false;
  }
  return true;
}

bool composition_is_left_to_right() {
  // sigma_1 then sigma_2 differs from sigma_2 then sigma_1, and the product
  // acts as "apply the first factor's substitution, then the second's".
  const auto s1 = artin_sigma(1, 3);
  const auto s2 = artin_sigma(2, 3);
  const auto both = compose(s1, s2);
  for (int k = 1; k <= 3; ++k) {
    const auto x = FreeWord::letter(k);
    if (both.apply(x) != s2.apply(s1.apply(x))) return false;
  }
  return !aut_equal(both, compose(s2, s1));
}

}  // namespace

bool verify_swing_factorizations() {
  if (!triple_factorizations_hold(1, 3)) return false;
  for (int n = 4; n <= 5; ++n) {
    for (int first = 1; first + 2 <= n; ++first) {
      if (!triple_factorizations_hold(first, n)) return false;
    }
  }
  return true;
}

bool verify_p3_relation() {
  const auto a = to_automorphism(standard_pure_word(1, 2, 3));
  const auto b = to_automorphism(standard_pure_word(1, 3, 3));
  const auto c = to_automorphism(standard_pure_word(2, 3, 3));
  const auto abc = product({&a, &b, &c});
  return aut_equal(abc, product({&b, &c, &a})) && aut_equal(abc, product({&c, &a, &b})) &&
         aut_equal(compose(abc, a), compose(a, abc)) && aut_equal(compose(abc, b), compose(b, abc));
}

PlanarWords parse_planar_words(std::istream& in) {
  std::array<std::optional<BraidWord>, 6> found;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    std::string name = line.substr(0, colon == std::string::npos ? 0 : colon);
    name.erase(std::remove_if(name.begin(), name.end(), [](unsigned char c) { return std::isspace(c); }),
               name.end());
    if (colon == std::string::npos || name.size() != 1 || name[0] < 'a' || name[0] > 'f') {
      throw ParseError(name, "expected a line of the form '<a..f>: <artin word>'");
    }
    try {
      found[static_cast<std::size_t>(name[0] - 'a')] = BraidWord::parse(line.substr(colon + 1), 4);
    } catch (const IndexOutOfRange& e) {
      throw ParseError(name, e.what());
    }
  }
  for (std::size_t k = 0; k < found.size(); ++k) {
    if (!found[k]) throw ParseError(std::string(1, static_cast<char>('a' + k)), "missing generator");
  }
  return PlanarWords{{*found[0], *found[1], *found[2], *found[3], *found[4], *found[5]}};
}

PlanarWords load_planar_words(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open planar word list " + path.string());
  return parse_planar_words(in);
}

PlanarWords naive_planar_words() {
  return PlanarWords{{standard_pure_word(1, 2, 4), standard_pure_word(1, 3, 4),
                      standard_pure_word(2, 3, 4), standard_pure_word(3, 4, 4),
                      standard_pure_word(2, 4, 4), standard_pure_word(1, 4, 4)}};
}

std::vector<IdentityCheck> verify_planar_presentation(const PlanarWords& words) {
  std::array<FreeGroupAut, 6> gens{
      to_automorphism(words.generators[0]), to_automorphism(words.generators[1]),
      to_automorphism(words.generators[2]), to_automorphism(words.generators[3]),
      to_automorphism(words.generators[4]), to_automorphism(words.generators[5])};
  return check_planar_relations(gens, "planar ");
}

std::vector<IdentityCheck> verify_rho() {
  const auto a = to_automorphism(standard_pure_word(1, 2, 3));
  const auto b = to_automorphism(standard_pure_word(1, 3, 3));
  const auto c = to_automorphism(standard_pure_word(2, 3, 3));
  // a, d -> a; b, e -> b; c, f -> c.
  return check_planar_relations({a, b, c, a, b, c}, "rho image of ");
}

std::vector<IdentityCheck> identity_suite(const PlanarWords& words, unsigned long long seed) {
  std::vector<IdentityCheck> checks;
  checks.push_back({"composition is left-to-right (s1 then s2 != s2 then s1)",
                    composition_is_left_to_right()});
  checks.push_back({"free reduction is confluent (500 random word pairs)",
                    reduction_is_confluent(seed)});
  for (int n = 2; n <= 6; ++n) {
    checks.push_back({"Artin relations in B_" + std::to_string(n), artin_relations_hold(n)});
  }
  for (int n = 2; n <= 6; ++n) {
    checks.push_back({"A_ij words are pure in B_" + std::to_string(n), standard_words_are_pure(n)});
  }
  for (int n = 2; n <= 6; ++n) {
    checks.push_back({"A_ij commute <=> chords do not cross, n = " + std::to_string(n),
                      pair_commutation_matches_predicate(n)});
  }
  checks.push_back({"S123 = S12 S13 S23 = S13 S23 S12 = S23 S12 S13 (and shifted, n <= 5)",
                    verify_swing_factorizations()});
  checks.push_back({"P3: abc = bca = cab, abc central", verify_p3_relation()});
  for (auto& c : verify_rho()) checks.push_back(std::move(c));
  for (auto& c : verify_planar_presentation(words)) checks.push_back(std::move(c));
  return checks;
}

}  // namespace bns
