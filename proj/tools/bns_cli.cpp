// bns: classify characters of pure braid groups and check the supporting
// identities.
//
//   bns classify --in chi.json [--witness]
//   bns circles --n 5
//   bns graph --in chi.json [--dot out.dot]
//   bns verify [--words data/planar_p4_words.txt] [--seed 1]
//   bns oracle [--max-vertices 7]
//
// --in takes a path, "-" for stdin, or inline JSON. Exit status: 0 success,
// 1 a verification failed, 2 bad input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "bns/braid.hpp"
#include "bns/chi_graph.hpp"
#include "bns/circles.hpp"
#include "bns/classifier.hpp"
#include "bns/errors.hpp"
#include "bns/json_io.hpp"
#include "bns/witness.hpp"

namespace {

using namespace bns;

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& source) {
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (source[first] == '{' || source[first] == '[')) return source;
  if (source == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(source);
  if (!in) throw InputError("cannot read " + source);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Json parse_json(const std::string& source) {
  try {
    return Json::parse(read_input(source));
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

/// A single character object or an array of them.
std::vector<Character> read_characters(const Json& doc) {
  std::vector<Character> out;
  if (!doc.is_array()) {
    out.push_back(character_from_json(doc));
    return out;
  }
  for (std::size_t k = 0; k < doc.size(); ++k) {
    try {
      out.push_back(character_from_json(doc[k]));
    } catch (const ParseError& e) {
      throw ParseError("[" + std::to_string(k) + "]." + e.key(), e.what());
    }
  }
  return out;
}

Json report_json(const WitnessReport& r) {
  Json out{{"ok", r.ok()},
           {"survives", r.survives},
           {"connected", r.connected},
           {"dominated", r.dominated},
           {"spans", r.spans},
           {"factorizations_abelian", r.factorizations_abelian}};
  out["factorizations_exact"] = r.exact_checked ? Json(r.factorizations_exact) : Json(nullptr);
  out["failures"] = r.failures;
  return out;
}

int run_classify(const std::string& source, bool witness) {
  const Json doc = parse_json(source);
  const auto characters = read_characters(doc);
  const bool batch = doc.is_array();
  Json results = Json::array();
  bool all_verified = true;
  for (const auto& chi : characters) {
    const auto classification = classify(chi);
    Json entry = to_json(classification);
    if (witness && classification.verdict == Verdict::InSigma1) {
      const auto pkg = build_witness(classification.certificate, chi);
      const auto report = verify_witness(pkg, chi);
      entry["witness"] = to_json(pkg);
      entry["witness"]["check"] = report_json(report);
      all_verified = all_verified && report.ok();
    }
    results.push_back(std::move(entry));
  }
  std::cout << (batch ? results : results.front()).dump(2) << '\n';
  return all_verified ? kOk : kVerificationFailed;
}

int run_circles(int n) {
  if (n < 2 || n > 64) throw InputError("--n must be between 2 and 64");
  Json out = Json::array();
  for (const auto& id : enumerate_circles(n)) out.push_back(to_json(id));
  std::cout << out.dump(2) << '\n';
  return kOk;
}

int run_graph(const std::string& source, const std::string& dot_path) {
  const Json doc = parse_json(source);
  if (doc.is_array()) throw InputError("graph takes a single character");
  const auto dot = to_dot(build_kchi(character_from_json(doc)));
  if (dot_path.empty() || dot_path == "-") {
    std::cout << dot;
    return kOk;
  }
  std::ofstream out(dot_path);
  if (!out) throw InputError("cannot write " + dot_path);
  out << dot;
  return kOk;
}

int run_verify(const std::string& words_path, unsigned long long seed) {
  const auto checks = identity_suite(load_planar_words(words_path), seed);
  bool ok = true;
  for (const auto& c : checks) {
    std::cout << (c.holds ? "pass  " : "FAIL  ") << c.name << '\n';
    ok = ok && c.holds;
  }
  std::cout << (ok ? "all " + std::to_string(checks.size()) + " checks pass" : "some checks FAILED")
            << '\n';
  return ok ? kOk : kVerificationFailed;
}

Json edges_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const auto& e : edges) out.push_back(Json::array({e.u, e.v}));
  return out;
}

int run_oracle(int max_vertices) {
  const auto report = oracle_star_or_small(max_vertices, std::min(max_vertices, 6));
  Json out{{"max_vertices", report.max_vertices},
           {"graphs_checked", report.graphs_checked},
           {"with_disjoint_from_two", report.with_disjoint_from_two},
           {"shape_classify_cross_checked_up_to", std::min(max_vertices, 6)}};
  out["counterexamples"] = Json::array();
  for (const auto& g : report.counterexamples) out["counterexamples"].push_back(edges_json(g));
  out["classifier_disagreements"] = Json::array();
  for (const auto& g : report.classifier_disagreements) {
    out["classifier_disagreements"].push_back(edges_json(g));
  }
  out["ok"] = report.ok();
  std::cout << out.dump(2) << '\n';
  return report.ok() ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classification of characters of pure braid groups"};
  app.require_subcommand(1);

  std::string input;
  bool witness = false;
  int n = 0;
  std::string dot_path;
  std::string words_path = BNS_PLANAR_WORDS_PATH;
  unsigned long long seed = 1;
  int max_vertices = 7;

  auto* classify_cmd = app.add_subcommand("classify", "Classify characters given as JSON");
  classify_cmd->add_option("--in", input, "JSON file, '-' for stdin, or inline JSON")->required();
  classify_cmd->add_flag("--witness", witness, "Build and check the witness for Sigma^1 verdicts");

  auto* circles_cmd = app.add_subcommand("circles", "List the circles of the complement");
  circles_cmd->add_option("--n", n, "Number of strands")->required();

  auto* graph_cmd = app.add_subcommand("graph", "Export K_chi as Graphviz DOT");
  graph_cmd->add_option("--in", input, "JSON file, '-' for stdin, or inline JSON")->required();
  graph_cmd->add_option("--dot", dot_path, "Output path (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Run the braid identity suite");
  verify_cmd->add_option("--words", words_path, "Planar generator word list");
  verify_cmd->add_option("--seed", seed, "Seed for the randomized checks");

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive check of the star-or-small lemma");
  oracle_cmd->add_option("--max-vertices", max_vertices, "Largest complete graph to enumerate")
      ->check(CLI::Range(2, 8));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*classify_cmd) return run_classify(input, witness);
    if (*circles_cmd) return run_circles(n);
    if (*graph_cmd) return run_graph(input, dot_path);
    if (*verify_cmd) return run_verify(words_path, seed);
    if (*oracle_cmd) return run_oracle(max_vertices);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
