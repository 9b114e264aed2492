#include "bns/circles.hpp"

#include <algorithm>
#include <stdexcept>

#include "bns/chi_graph.hpp"
#include "bns/errors.hpp"

namespace bns {
namespace {

std::size_t expected_size(CircleKind kind) { return kind == CircleKind::P3 ? 3 : 4; }

void subsets_of_size(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> current;
  auto recurse = [&](auto&& self, int next) -> void {
    if (static_cast<int>(current.size()) == k) {
      out.push_back(current);
      return;
    }
    for (int i = next; i <= n; ++i) {
      current.push_back(i);
      self(self, i + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 1);
}

bool supported_within(const Character& chi, const SwingSet& support) {
  for (int i = 1; i <= chi.n(); ++i) {
    for (int j = i + 1; j <= chi.n(); ++j) {
      if (!chi.weight(i, j).is_zero() && !(support.contains(i) && support.contains(j))) return false;
    }
  }
  return true;
}

void require_nonzero(const Character& chi) {
  if (chi.is_zero()) throw ZeroCharacter();
}

}  // namespace

CircleId::CircleId(CircleKind k, SwingSet s) : kind(k), support(std::move(s)) {
  if (support.size() != expected_size(kind)) {
    throw SizeMismatch(kind == CircleKind::P3 ? "P3 circles are indexed by 3-sets"
                                              : "P4 circles are indexed by 4-sets");
  }
}

std::vector<CircleId> enumerate_circles(int n) {
  std::vector<CircleId> circles;
  for (const auto& [kind, k] : {std::pair{CircleKind::P3, 3}, std::pair{CircleKind::P4, 4}}) {
    std::vector<std::vector<int>> subsets;
    subsets_of_size(n, k, subsets);
    for (auto& s : subsets) circles.emplace_back(kind, SwingSet(std::move(s)));
  }
  return circles;
}

bool on_p3_circle(const Character& chi, const CircleId& id) {
  require_nonzero(chi);
  if (id.kind != CircleKind::P3) throw Error("on_p3_circle expects a P3 circle");
  id.support.check_range(chi.n());
  return supported_within(chi, id.support) && swing_value(chi, id.support).is_zero();
}

bool on_p4_circle(const Character& chi, const CircleId& id) {
  require_nonzero(chi);
  if (id.kind != CircleKind::P4) throw Error("on_p4_circle expects a P4 circle");
  id.support.check_range(chi.n());
  if (!supported_within(chi, id.support)) return false;
  const auto& m = id.support.members();
  const int i = m[0], j = m[1], k = m[2], l = m[3];
  const Rat& x = chi.weight(i, j);
  const Rat& y = chi.weight(i, k);
  const Rat& z = chi.weight(i, l);
  return chi.weight(k, l) == x && chi.weight(j, l) == y && chi.weight(j, k) == z &&
         (x + y + z).is_zero();
}

bool on_circle(const Character& chi, const CircleId& id) {
  return id.kind == CircleKind::P3 ? on_p3_circle(chi, id) : on_p4_circle(chi, id);
}

std::optional<CircleId> locate_circle(const Character& chi) {
  require_nonzero(chi);
  const auto support = support_vertices(build_kchi(chi));
  if (support.size() > 4) return std::nullopt;

  // Supersets of the support of size 3 and 4.
  std::vector<int> outside;
  for (int v = 1; v <= chi.n(); ++v) {
    if (!std::binary_search(support.begin(), support.end(), v)) outside.push_back(v);
  }
  std::optional<CircleId> found;
  for (const auto& [kind, k] : {std::pair{CircleKind::P3, 3}, std::pair{CircleKind::P4, 4}}) {
    const int missing = k - static_cast<int>(support.size());
    if (missing < 0 || missing > static_cast<int>(outside.size())) continue;
    std::vector<std::vector<int>> picks;
    subsets_of_size(static_cast<int>(outside.size()), missing, picks);
    for (const auto& pick : picks) {
      std::vector<int> members = support;
      for (int p : pick) members.push_back(outside[static_cast<std::size_t>(p - 1)]);
      CircleId candidate(kind, SwingSet(std::move(members)));
      if (!on_circle(chi, candidate)) continue;
      if (found) throw std::logic_error("character lies on two complement circles");
      found = std::move(candidate);
    }
  }
  return found;
}

Character sample_circle(const CircleId& id, const Rat& t1, const Rat& t2, int n) {
  if (t1.is_zero() && t2.is_zero()) throw ZeroCharacter();
  id.support.check_range(n);
  const Rat t3 = -t1 - t2;
  const auto& m = id.support.members();
  Character chi(n);
  if (id.kind == CircleKind::P3) {
    chi = chi.with_weight(m[0], m[1], t1).with_weight(m[0], m[2], t2).with_weight(m[1], m[2], t3);
  } else {
    const int i = m[0], j = m[1], k = m[2], l = m[3];
    chi = chi.with_weight(i, j, t1).with_weight(k, l, t1)
              .with_weight(i, k, t2).with_weight(j, l, t2)
              .with_weight(i, l, t3).with_weight(j, k, t3);
  }
  return chi;
}

CircleId permute(const CircleId& id, const Permutation& perm) {
  std::vector<int> members;
  for (int v : id.support.members()) members.push_back(perm(v));
  return CircleId(id.kind, SwingSet(std::move(members)));
}

}  // namespace bns
