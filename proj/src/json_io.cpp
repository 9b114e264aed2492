#include "bns/json_io.hpp"

#include <set>

#include "bns/errors.hpp"

namespace bns {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string pair_key(int i, int j) { return std::to_string(i) + "-" + std::to_string(j); }

Json edge_json(const Edge& e) { return Json::array({e.u, e.v}); }

Json set_json(const SwingSet& s) { return Json(s.members()); }

Json permutation_json(const Permutation& p) { return Json(p.images()); }

const Json& require(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("", "expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(key, "missing key");
  return *it;
}

Rat weight_from_json(const Json& value, const std::string& key) {
  try {
    if (value.is_string()) return parse_rat(value.get<std::string>());
    if (value.is_number_integer()) return Rat(value.get<long long>());
  } catch (const ParseError& e) {
    throw ParseError(key, e.what());
  }
  throw ParseError(key, "weight must be a string \"p\" or \"p/q\" or an integer");
}

}  // namespace

Character character_from_json(const Json& j) {
  const Json& n_json = require(j, "n");
  if (!n_json.is_number_integer()) throw ParseError("n", "must be an integer");
  const auto n = n_json.get<long long>();
  if (n < 2 || n > 64) throw ParseError("n", "must be between 2 and 64");
  for (const auto& [key, value] : j.items()) {
    if (key != "n" && key != "weights") throw ParseError(key, "unknown key");
  }

  const Json& weights_json = require(j, "weights");
  if (!weights_json.is_object()) throw ParseError("weights", "must be an object");
  const int strands = static_cast<int>(n);
  std::vector<Rat> weights(pair_count(strands));
  std::set<std::size_t> seen;
  for (const auto& [key, value] : weights_json.items()) {
    const auto dash = key.find('-');
    int i = 0, j2 = 0;
    try {
      if (dash == std::string::npos) throw std::invalid_argument(key);
      std::size_t used_i = 0, used_j = 0;
      i = std::stoi(key.substr(0, dash), &used_i);
      j2 = std::stoi(key.substr(dash + 1), &used_j);
      if (used_i != dash || used_j != key.size() - dash - 1) throw std::invalid_argument(key);
    } catch (const std::logic_error&) {
      throw ParseError(key, "weight keys look like \"i-j\"");
    }
    if (i < 1 || j2 > strands || i >= j2) {
      throw ParseError(key, "pair must satisfy 1 <= i < j <= n");
    }
    const auto index = pair_index(strands, i, j2);
    seen.insert(index);
    weights[index] = weight_from_json(value, key);
  }
  for (int i = 1; i <= strands; ++i) {
    for (int k = i + 1; k <= strands; ++k) {
      if (!seen.contains(pair_index(strands, i, k))) throw ParseError(pair_key(i, k), "missing weight");
    }
  }
  return Character(strands, std::move(weights));
}

Json to_json(const Character& chi) {
  Json weights = Json::object();
  for (int i = 1; i <= chi.n(); ++i) {
    for (int j = i + 1; j <= chi.n(); ++j) weights[pair_key(i, j)] = to_string(chi.weight(i, j));
  }
  return Json{{"n", chi.n()}, {"weights", std::move(weights)}};
}

CircleId circle_from_json(const Json& j) {
  const Json& kind = require(j, "kind");
  const Json& support = require(j, "support");
  if (!kind.is_string() || (kind != "P3" && kind != "P4")) throw ParseError("kind", "must be P3 or P4");
  if (!support.is_array()) throw ParseError("support", "must be an array of labels");
  std::vector<int> members;
  for (const auto& v : support) {
    if (!v.is_number_integer()) throw ParseError("support", "labels must be integers");
    members.push_back(v.get<int>());
  }
  try {
    return CircleId(kind == "P3" ? CircleKind::P3 : CircleKind::P4, SwingSet(std::move(members)));
  } catch (const Error& e) {
    throw ParseError("support", e.what());
  }
}

Json to_json(const CircleId& id) {
  return Json{{"kind", id.kind == CircleKind::P3 ? "P3" : "P4"}, {"support", set_json(id.support)}};
}

Json to_json(const Certificate& certificate) {
  Json out{{"kind", std::string(kind_name(certificate))}};
  std::visit(overloaded{
                 [&](const cert::CircleMembership& c) { out["id"] = to_json(c.id); },
                 [&](const cert::ZeroSum& c) { out["delta"] = to_string(c.delta); },
                 [&](const cert::DisjointTriple& c) {
                   out["edges"] = Json::array();
                   for (const auto& e : c.edges) out["edges"].push_back(edge_json(e));
                   out["permutation"] = permutation_json(c.permutation);
                 },
                 [&](const cert::DisjointPair& c) {
                   out["edge"] = edge_json(c.edge);
                   out["pair"] = Json::array({edge_json(c.pair[0]), edge_json(c.pair[1])});
                   out["permutation"] = permutation_json(c.permutation);
                 },
                 [&](const cert::Star& c) {
                   out["center"] = c.center;
                   out["leaves"] = c.leaves;
                   out["permutation"] = permutation_json(c.permutation);
                 },
                 [&](const cert::DisjointLeaves& c) {
                   out["leaves"] = Json::array({c.leaves[0], c.leaves[1]});
                   out["edges"] = Json::array({edge_json(c.edges[0]), edge_json(c.edges[1])});
                   out["permutation"] = permutation_json(c.permutation);
                 },
                 [&](const cert::Triangle& c) {
                   out["edges"] = Json::array({edge_json(c.edges[0]), edge_json(c.edges[1])});
                   out["triangle"] = set_json(c.triangle);
                   out["value"] = to_string(c.value);
                   out["permutation"] = permutation_json(c.permutation);
                 },
             },
             certificate);
  return out;
}

Json to_json(const Classification& classification) {
  return Json{
      {"verdict", classification.verdict == Verdict::InSigma1 ? "sigma1" : "complement"},
      {"certificate", to_json(classification.certificate)}};
}

Json to_json(const WitnessPackage& pkg) {
  Json out{{"lemma", pkg.lemma}, {"permutation", permutation_json(pkg.permutation)}};
  out["J"] = Json::array();
  for (const auto& s : pkg.J) out["J"].push_back(set_json(s));
  out["I"] = Json::array();
  for (const auto& s : pkg.I) out["I"].push_back(set_json(s));
  out["factorizations"] = Json::array();
  for (const auto& f : pkg.factorizations) {
    Json product = Json::array();
    for (const auto& e : f.product) product.push_back(edge_json(e));
    out["factorizations"].push_back(
        Json{{"removed", edge_json(f.removed)}, {"swing", set_json(f.swing)}, {"product", product}});
  }
  return out;
}

}  // namespace bns
