#include <cstdio>
#include <fstream>
#include <filesystem>
#include <functional>
#include <string>

#include "example_values.hpp"
#include "orbsnake/skein.hpp"
#include "orbsnake/snake.hpp"
#include "orbsnake/suites.hpp"

using namespace orbsnake;

namespace {

int failures = 0;

void report(int id, const std::string& title, const std::function<SuiteReport()>& run) {
  SuiteReport r;
  try {
    r = run();
  } catch (const std::exception& e) {
    r.check(false, e.what());
  }
  std::printf("%s %d %s (%d/%d checks)\n", r.ok() ? "PASS" : "FAIL", id, title.c_str(), r.checks - r.failed, r.checks);
  for (const auto& f : r.failures) std::printf("    %s\n", f.c_str());
  failures += !r.ok();
}

std::string data(const std::string& rel) { return std::string(ORBSNAKE_DATA_DIR) + "/" + rel; }

SuiteReport printed_examples() {
  SuiteReport r{"printed examples"};
  auto expand = [](const std::string& rel) {
    CurveFile f = load_curve_file(data(rel));
    return cluster_expansion(f.curve, f.triangulation);
  };
  LaurentPoly g1 = expand("curves/gamma1.json");
  r.check(g1 == example::gamma1(), "gamma1: " + g1.str());
  LaurentPoly renamed = g1.substitute([](Var v) { return v == yv(1) ? LaurentPoly::y(2) : LaurentPoly::var(v); });
  r.check(renamed == example::gamma1_printed(), "gamma1 with y1 written y2");
  LaurentPoly g2 = expand("curves/gamma2.json");
  r.check(g2 == example::gamma2(), "gamma2: " + g2.str());
  LaurentPoly numerator = g2 * LaurentPoly::x(1, 2) * LaurentPoly::x(2);
  std::size_t printed_terms = 0;
  for (const auto& [m, c] : numerator.terms()) printed_terms += c.terms().size();
  r.check(printed_terms == 10, "gamma2 numerator has " + std::to_string(printed_terms) + " terms");
  LaurentPoly g3 = expand("curves/gamma3.json");
  r.check(g3 == example::gamma3(), "gamma3: " + g3.str());
  LaurentPoly g4 = expand("curves/gamma4.json");
  r.check(g4 == example::gamma4(), "gamma4: " + g4.str());
  return r;
}

SuiteReport skein_with_families(const SuiteOptions& o) {
  SuiteReport r = suite_skein(o);
  bool order_two = false, exchange = false;
  int files = 0;
  for (const auto& e : std::filesystem::directory_iterator(data("skein"))) {
    if (e.path().extension() != ".json") continue;
    ++files;
    std::ifstream in(e.path());
    SkeinFixture f = skein_fixture_from_json(nlohmann::json::parse(in), ORBSNAKE_DATA_DIR);
    if (f.relation != SkeinRelation::ThreeTerm) continue;
    order_two = order_two || f.order == 2;
    exchange = exchange || (f.order >= 3 && f.gamma2.arc.has_value());
  }
  r.check(files >= 9, "only " + std::to_string(files) + " skein fixtures");
  r.check(order_two, "no order-2 three-term fixture");
  r.check(exchange, "no exchange-relation fixture with an arc of T");
  return r;
}

}  // namespace

int main() {
  SuiteOptions o;
  o.data_dir = ORBSNAKE_DATA_DIR;
  o.fuzz = 500;
  o.seed = 7;
  o.tol = 1e-9;

  report(1, "printed expansions of the four example curves", printed_examples);
  report(2, "chi equals the matching expansion on fixtures and 500 fuzzed descriptors", [&] { return suite_arcsgraphs(o); });
  report(3, "universal snake graphs have 2^n matchings forming B_n, n <= 10", [&] {
    SuiteOptions u = o;
    u.n = 10;
    return suite_universal_poset(u);
  });
  report(4, "universal transfer matrices agree with enumeration, n <= 7, three glue modes", [&] {
    SuiteOptions u = o;
    u.n = 7;
    return suite_universal_matrices(u);
  });
  report(5, "lift verifies on ordinary-arc fixtures and 200 fuzzed arcs", [&] {
    SuiteOptions l = o;
    l.fuzz = 200;
    return suite_lift(l);
  });
  report(6, "pending flip matrices and mutation involution", [&] { return suite_mutation(o); });
  report(7, "Chebyshev identities", [&] { return suite_chebyshev(o); });
  report(8, "coefficients of fuzzed expansions are nonnegative at lambda_p", [&] { return suite_positivity(o); });
  report(9, "skein identities and regenerated Y monomials", [&] { return skein_with_families(o); });
  return failures == 0 ? 0 : 1;
}
