#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orbsnake/lift.hpp"
#include "orbsnake/mpath.hpp"
#include "orbsnake/snake.hpp"
#include "orbsnake/suites.hpp"

using namespace orbsnake;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kFailed = 1, kInput = 2, kInternal = 3;

struct RunConfig {
  std::string input;
  std::string triangulation;
  std::string format = "canonical";
  bool poset = false;
  int universal = 0;
  std::string suite;
  SuiteOptions suites;
  std::vector<int> indices;
};

json poly_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json mono = json::array();
    for (const auto& [v, e] : m) mono.push_back({v.str(), e});
    terms.push_back({{"monomial", mono}, {"coefficient", c.str()}, {"value", c.eval()}});
  }
  return {{"canonical", p.fraction_str()}, {"terms", terms}};
}

std::string chain_dot(const ChainGraph& g) {
  std::ostringstream os;
  os << "graph chain {\n";
  for (int k = 0; k <= g.labels().n; ++k) os << "  L" << k << ";\n  R" << k << ";\n";
  auto name = [](int v) { return (v % 2 ? "R" : "L") + std::to_string(v / 2); };
  for (const auto& e : g.edges()) os << "  " << name(e.u) << " -- " << name(e.v) << " [label=\"" << e.label.str() << "\"];\n";
  os << "}\n";
  return os.str();
}

SnakeGraph universal_graph(int n) {
  SnakeGraph g{build_ug(UniversalLabels::generic(n)), {}, {}, false, Glue::None, 0, 1, {}};
  g.matchings = enumerate_matchings(g);
  return g;
}

int cmd_expand(const RunConfig& c) {
  std::optional<SnakeGraph> g;
  std::optional<CurveFile> file;
  LaurentPoly x;
  if (c.universal > 0) {
    g = universal_graph(c.universal);
    x = expansion_of(*g);
  } else {
    file = load_curve_file(c.input, c.triangulation);
    x = cluster_expansion(file->curve, file->triangulation);
    if (!file->curve.word.empty()) g = build_snake_graph(file->curve, file->triangulation);
  }
  if (c.format == "canonical") {
    std::cout << x.fraction_str() << "\n";
  } else if (c.format == "latex") {
    std::cout << x.latex() << "\n";
  } else if (c.format == "dot") {
    if (!g) throw Error(ErrorKind::Input, "curve has no snake graph to draw");
    std::cout << (c.poset ? to_dot(matching_poset(*g)) : chain_dot(g->chain));
  } else {
    json j{{"schema_version", kSchemaVersion}, {"expansion", poly_json(x)}};
    if (g) j["matchings"] = g->matchings.size();
    if (file) j["chi"] = poly_json(chi(file->curve, file->triangulation));
    std::cout << j.dump(2) << "\n";
  }
  return kOk;
}

int cmd_mpath(const RunConfig& c) {
  CurveFile f = load_curve_file(c.input, c.triangulation);
  MPath path = standard_mpath(f.curve, f.triangulation);
  Mat2 m = m_of(path);
  if (c.format == "json") {
    json steps = json::array();
    for (const auto& s : path) steps.push_back(s.str());
    std::cout << json{{"schema_version", kSchemaVersion},
                      {"steps", steps},
                      {"m", {{m.a11.str(), m.a12.str()}, {m.a21.str(), m.a22.str()}}},
                      {"chi", chi(f.curve, f.triangulation).str()}}
                     .dump(2)
              << "\n";
    return kOk;
  }
  for (const auto& s : path) std::cout << s.str() << "\n";
  std::cout << "m11 = " << m.a11 << "\nm12 = " << m.a12 << "\nm21 = " << m.a21 << "\nm22 = " << m.a22 << "\n";
  std::cout << "chi = " << chi(f.curve, f.triangulation) << "\n";
  return kOk;
}

int cmd_lift(const RunConfig& c) {
  CurveFile f = load_curve_file(c.input, c.triangulation);
  LiftedPolygon L = build_lift(f.curve, f.triangulation);
  json annotated = json::array();
  for (const auto& [sigma, p] : L.annotated) annotated.push_back({{"arc", sigma}, {"order", p}});
  json j{{"schema_version", kSchemaVersion},
         {"d", L.d},
         {"triangulation", to_json(L.polygon)},
         {"projection", std::vector<int>(L.projection.begin() + 1, L.projection.end())},
         {"annotated", annotated},
         {"lifted_arc", to_json(L.lifted_arc)},
         {"verified", verify_lift(f.curve, f.triangulation)}};
  std::cout << j.dump(2) << "\n";
  return j["verified"].get<bool>() ? kOk : kFailed;
}

int cmd_verify(const RunConfig& c) {
  std::vector<SuiteReport> reports;
  const std::string& s = c.suite;
  const bool all = s == "all";
  if (all || s == "arcsgraphs") {
    reports.push_back(suite_arcsgraphs(c.suites));
    reports.push_back(suite_positivity(c.suites));
  }
  if (all || s == "lift") reports.push_back(suite_lift(c.suites));
  if (all || s == "universal") {
    reports.push_back(suite_universal_poset(c.suites));
    reports.push_back(suite_universal_matrices(c.suites));
  }
  if (all || s == "skein") reports.push_back(suite_skein(c.suites));
  if (all || s == "mutation") reports.push_back(suite_mutation(c.suites));
  if (all || s == "chebyshev") reports.push_back(suite_chebyshev(c.suites));
  bool ok = true;
  for (const auto& r : reports) {
    std::cout << r.summary() << "\n";
    ok = ok && r.ok();
  }
  return ok ? kOk : kFailed;
}

int cmd_mutate(const RunConfig& c) {
  std::ifstream in(c.input);
  if (!in) throw Error(ErrorKind::Input, "cannot open " + c.input);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Input, c.input + ": " + e.what());
  }
  ExtendedBMatrix b = bmatrix_from_json(j.contains("before") ? j.at("before") : j);
  for (int k : c.indices) b = generalized_mutate(b, k);
  std::cout << to_json(b).dump(2) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Expansions of curves on orbifolds by snake graphs and matrix products"};
  app.require_subcommand(1);
  RunConfig c;
  c.suites.data_dir = ORBSNAKE_DATA_DIR;
  const std::vector<std::string> formats{"canonical", "latex", "dot", "json"};

  auto* expand = app.add_subcommand("expand", "Print the expansion of a curve");
  expand->add_option("input", c.input, "Curve JSON file");
  expand->add_option("--triangulation", c.triangulation, "Triangulation JSON when the curve file names none");
  expand->add_option("--universal", c.universal, "Use the universal snake graph with this many tiles");
  expand->add_option("--format", c.format)->check(CLI::IsMember(formats));
  expand->add_flag("--poset", c.poset, "With --format dot, draw the matching lattice");

  auto* mpath = app.add_subcommand("mpath", "Print the standard M-path and its matrix");
  mpath->add_option("input", c.input, "Curve JSON file")->required();
  mpath->add_option("--triangulation", c.triangulation);
  mpath->add_option("--format", c.format)->check(CLI::IsMember(formats));

  auto* lift = app.add_subcommand("lift", "Print the lifted polygon of an ordinary arc as JSON");
  lift->add_option("input", c.input, "Curve JSON file")->required();
  lift->add_option("--triangulation", c.triangulation);

  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("suite", c.suite)
      ->required()
      ->check(CLI::IsMember({"arcsgraphs", "lift", "universal", "skein", "mutation", "chebyshev", "all"}));
  verify->add_option("--fuzz", c.suites.fuzz, "Number of fuzzed descriptors")->capture_default_str();
  verify->add_option("--seed", c.suites.seed, "Fuzzing seed")->capture_default_str();
  verify->add_option("--tol", c.suites.tol, "Numeric tolerance")->capture_default_str();
  verify->add_option("--n", c.suites.n, "Largest universal graph")->capture_default_str();
  verify->add_option("--data", c.suites.data_dir, "Fixture directory")->capture_default_str();

  auto* mutate = app.add_subcommand("mutate", "Mutate an extended exchange matrix");
  mutate->add_option("input", c.input, "Matrix JSON file")->required();
  mutate->add_option("indices", c.indices, "1-based mutation indices, applied left to right");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }
  try {
    if (*expand) {
      if (c.input.empty() == (c.universal == 0)) throw Error(ErrorKind::Input, "give either an input file or --universal");
      return cmd_expand(c);
    }
    if (*mpath) return cmd_mpath(c);
    if (*lift) return cmd_lift(c);
    if (*verify) return cmd_verify(c);
    return cmd_mutate(c);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::Input ? kInput : kInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
