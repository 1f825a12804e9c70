#include "orbsnake/suites.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "orbsnake/lift.hpp"
#include "orbsnake/skein.hpp"
#include "orbsnake/snake.hpp"

namespace orbsnake {

using nlohmann::json;

namespace {

constexpr std::size_t kKeptFailures = 5;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Input, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Input, path + ": " + e.what());
  }
}

std::vector<std::filesystem::path> json_files(const std::string& dir) {
  std::vector<std::filesystem::path> r;
  if (!std::filesystem::is_directory(dir)) throw Error(ErrorKind::Input, "missing directory " + dir);
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".json") r.push_back(e.path());
  std::sort(r.begin(), r.end());
  return r;
}

std::string describe(const FuzzCase& c) { return to_json(c.curve).dump() + " on " + to_json(c.triangulation).dump(); }

bool windings_in_range(const FuzzCase& c) {
  auto fits = [&](int arc, int w) {
    if (!w) return true;
    const Arc& a = c.triangulation.arc(arc);
    return a.kind == ArcKind::Pending && w >= 0 && w <= a.order - 2;
  };
  const auto& word = c.curve.word;
  for (const auto& tok : word)
    if (!fits(tok.arc, tok.winding)) return false;
  if (word.empty()) return true;
  return fits(word.front().arc, c.curve.ends.start_winding) && fits(word.back().arc, c.curve.ends.end_winding);
}

bool ordinary_for_lift(const CurveDescriptor& d) {
  if (d.kind != CurveKind::OrdinaryArc || d.ends.start_winding || d.ends.end_winding) return false;
  return std::all_of(d.word.begin(), d.word.end(), [](const CrossingToken& t) { return t.winding == 0; });
}

std::vector<CurveDescriptor> skein_descriptors(const SkeinFixture& f) {
  std::vector<CurveDescriptor> ds = f.curves;
  if (f.relation == SkeinRelation::ThreeTerm) ds = {f.gamma1, f.gamma2, f.beta1, f.beta2};
  for (const auto& t : f.terms) ds.insert(ds.end(), t.curves.begin(), t.curves.end());
  return ds;
}

}  // namespace

void SuiteReport::check(bool pass, const std::string& what) {
  ++checks;
  if (pass) return;
  ++failed;
  if (failures.size() < kKeptFailures) failures.push_back(what);
}

std::string SuiteReport::summary() const {
  std::ostringstream os;
  os << name << ": " << (ok() ? "pass" : "FAIL") << " (" << checks - failed << "/" << checks << " checks)";
  for (const auto& f : failures) os << "\n  " << f;
  if (failed > static_cast<int>(failures.size())) os << "\n  ... " << failed - failures.size() << " more";
  return os.str();
}

std::vector<FuzzCase> fuzz_cases(int count, std::uint64_t seed) {
  Fuzzer f(seed);
  DiskOptions disk;
  std::vector<FuzzCase> out;
  for (int i = 0; i < count; ++i) {
    CurveOptions opt;
    const int r = i % 5;
    opt.kind = r < 2 ? CurveKind::OrdinaryArc : r < 4 ? CurveKind::GeneralizedArc : CurveKind::ClosedCurve;
    disk.triangles = f.uniform(opt.kind == CurveKind::ClosedCurve ? 3 : 1, 7);
    out.push_back(f.next(disk, opt));
  }
  return out;
}

std::vector<FuzzCase> curve_fixtures(const std::string& data_dir) {
  std::vector<FuzzCase> out;
  for (const auto& path : json_files(data_dir + "/curves")) {
    CurveFile f = load_curve_file(path.string());
    out.push_back({std::move(f.triangulation), std::move(f.curve)});
  }
  return out;
}

double min_coefficient(const LaurentPoly& p) {
  double lo = INFINITY;
  for (const auto& [m, c] : p.terms()) lo = std::min(lo, c.eval());
  return lo;
}

SuiteReport suite_arcsgraphs(const SuiteOptions& o) {
  SuiteReport r{"arcsgraphs"};
  std::vector<FuzzCase> cases = curve_fixtures(o.data_dir);
  auto fuzzed = fuzz_cases(o.fuzz, o.seed);
  cases.insert(cases.end(), fuzzed.begin(), fuzzed.end());
  std::set<int> orders;
  for (const auto& c : fuzzed) {
    for (const auto& a : c.triangulation.arcs())
      if (a.kind == ArcKind::Pending) orders.insert(a.order);
    r.check(windings_in_range(c), "winding out of range: " + describe(c));
  }
  for (const auto& c : cases) {
    r.guard(describe(c), [&] {
      SnakeGraph g = build_snake_graph(c.curve, c.triangulation);
      r.check(g.chain.n() <= 8, "more than 8 tiles: " + describe(c));
      r.check(chi(c.curve, c.triangulation) == expansion_of(g), "chi differs from expansion: " + describe(c));
    });
  }
  for (const auto& path : json_files(o.data_dir + "/skein")) {
    const std::string name = path.filename().string();
    r.guard(name, [&] {
      SkeinFixture f = skein_fixture_from_json(load_json(path.string()), o.data_dir);
      for (const auto& d : skein_descriptors(f))
        r.check(chi(d, f.triangulation) == cluster_expansion(d, f.triangulation),
                name + ": chi differs from expansion for " + to_json(d).dump());
    });
  }
  if (o.fuzz >= 100) r.check(orders == std::set<int>{2, 3, 4, 5, 6}, "fuzzed orders do not cover 2..6");
  return r;
}

SuiteReport suite_positivity(const SuiteOptions& o) {
  SuiteReport r{"positivity"};
  std::vector<FuzzCase> cases = curve_fixtures(o.data_dir);
  auto fuzzed = fuzz_cases(o.fuzz, o.seed);
  cases.insert(cases.end(), fuzzed.begin(), fuzzed.end());
  for (const auto& c : cases) {
    r.guard(describe(c), [&] {
      LaurentPoly x = cluster_expansion(c.curve, c.triangulation);
      r.check(min_coefficient(x) >= -o.tol, "negative coefficient in " + x.str() + ": " + describe(c));
    });
  }
  return r;
}

SuiteReport suite_universal_poset(const SuiteOptions& o) {
  SuiteReport r{"universal poset"};
  for (int n = 1; n <= o.n; ++n) {
    const std::string at = "n=" + std::to_string(n);
    SnakeGraph g{build_ug(UniversalLabels::generic(n)), {}, {}, false, Glue::None, 0, 1, {}};
    g.matchings = enumerate_matchings(g);
    r.check(g.matchings.size() == std::size_t{1} << n, at + ": matching count is not 2^n");
    MatchingPoset p = matching_poset(g);
    std::vector<unsigned> mask;
    for (const auto& m : p.nodes) {
      unsigned s = 0;
      for (int j : g.chain.enclosed_tiles(m)) s |= 1u << (j - 1);
      mask.push_back(s);
    }
    r.check(std::set<unsigned>(mask.begin(), mask.end()).size() == p.nodes.size(), at + ": subset map is not injective");
    r.check(mask[static_cast<std::size_t>(p.minimum)] == 0, at + ": minimum is not the empty set");
    r.check(p.covers.size() == static_cast<std::size_t>(n) << (n - 1), at + ": cover count is not n 2^(n-1)");
    bool covers_add_one = true;
    for (const auto& e : p.covers) {
      unsigned lo = mask[static_cast<std::size_t>(e.from)], hi = mask[static_cast<std::size_t>(e.to)];
      unsigned added = hi & ~lo;
      bool single = (lo & ~hi) == 0 && added && !(added & (added - 1));
      const auto tile = static_cast<std::size_t>(std::countr_zero(added) + 1);
      covers_add_one = covers_add_one && single && e.label == g.chain.labels().y[tile];
    }
    r.check(covers_add_one, at + ": a cover does not add exactly one tile");
  }
  return r;
}

SuiteReport suite_universal_matrices(const SuiteOptions& o) {
  SuiteReport r{"universal matrices"};
  const LaurentPoly c = LaurentPoly::x(9);
  for (int n = 1; n <= std::min(o.n, 7); ++n) {
    const std::string at = "n=" + std::to_string(n);
    UniversalLabels u = UniversalLabels::generic(n);
    ChainGraph g = build_ug(u);
    PartitionedSums s = partitioned_sums(g);
    Mat2 m = mg_matrix(u);
    r.check(s.A == m.a11 && s.B == m.a12 && s.C == m.a21 && s.D == m.a22, at + ": partitioned sums differ from MG_n");
    r.check(weighted_sum_via_matrices(u, Glue::None) == matching_sum(g, Glue::None), at + ": upper-right formula");
    for (Glue glue : {Glue::AZ, Glue::BW}) {
      UniversalLabels b = band_labels(u, glue, c);
      r.check(weighted_sum_via_matrices(b, glue) == matching_sum(build_ug(b), glue),
              at + (glue == Glue::AZ ? ": a-z" : ": b-w") + " trace formula");
    }
  }
  return r;
}

SuiteReport suite_lift(const SuiteOptions& o) {
  SuiteReport r{"lift"};
  std::vector<FuzzCase> cases;
  for (auto& c : curve_fixtures(o.data_dir))
    if (ordinary_for_lift(c.curve)) cases.push_back(std::move(c));
  for (const auto& path : json_files(o.data_dir + "/skein")) {
    SkeinFixture f = skein_fixture_from_json(load_json(path.string()), o.data_dir);
    for (const auto& d : skein_descriptors(f))
      if (ordinary_for_lift(d) && !d.word.empty()) cases.push_back({f.triangulation, d});
  }
  const int fixtures = static_cast<int>(cases.size());
  r.check(fixtures > 0, "no ordinary-arc fixtures");
  Fuzzer f(o.seed);
  DiskOptions disk;
  CurveOptions opt;
  for (int i = 0; i < std::max(o.fuzz, 200); ++i) {
    disk.triangles = f.uniform(1, 7);
    cases.push_back(f.next(disk, opt));
  }
  for (const auto& c : cases) {
    r.guard(describe(c), [&] {
      LiftedPolygon L = build_lift(c.curve, c.triangulation);
      r.check(static_cast<int>(L.polygon.arcs().size()) == 2 * L.d + 3, "lift is not a (d+3)-gon: " + describe(c));
      r.check(verify_lift(c.curve, c.triangulation), "verify_lift false: " + describe(c));
    });
  }
  return r;
}

SuiteReport suite_mutation(const SuiteOptions& o) {
  SuiteReport r{"mutation"};
  r.guard("figure matrices", [&] {
    json fig = load_json(o.data_dir + "/mutation/lam_flip_pending.json");
    ExtendedBMatrix before = bmatrix_from_json(fig.at("before")), after = bmatrix_from_json(fig.at("after"));
    const int k = fig.at("index").get<int>();
    r.check(generalized_mutate(before, k) == after, "figure: mutation of the left matrix is not the right one");
    r.check(generalized_mutate(after, k) == before, "figure: mutation of the right matrix is not the left one");
  });
  std::mt19937_64 rng(o.seed);
  auto entry = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int trial = 0; trial < 200; ++trial) {
    const int n = entry(1, 6), m = entry(0, 6);
    std::vector<std::vector<int>> top(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (std::size_t i = 0; i < top.size(); ++i)
      for (std::size_t j = i + 1; j < top.size(); ++j) {
        top[i][j] = entry(-3, 3);
        top[j][i] = -top[i][j];
      }
    std::vector<bool> pending(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < pending.size(); ++i) pending[i] = entry(0, 2) == 0;
    ExtendedBMatrix b = principal_extend(top, pending);
    for (int row = 0; row < m; ++row) {
      std::vector<int> v(static_cast<std::size_t>(n));
      for (int& x : v) x = entry(-3, 3);
      b.rows.push_back(v);
    }
    for (int k = 1; k <= n; ++k)
      r.check(generalized_mutate(generalized_mutate(b, k), k) == b,
              "involution fails at k=" + std::to_string(k) + ": " + to_json(b).dump());
  }
  return r;
}

SuiteReport suite_chebyshev(const SuiteOptions& o) {
  SuiteReport r{"chebyshev"};
  for (int p = 2; p <= 12; ++p) {
    const std::string at = " p=" + std::to_string(p);
    for (int k = 0; k <= 30; ++k) {
      auto m = cheb_matrix_power(k, p, 9);
      r.check(m.product == m.closed_form && m.clockwise_product == m.clockwise_closed_form,
              "matrix closed form k=" + std::to_string(k) + at);
    }
    for (int k = 0; k <= 40; ++k)
      r.check(std::abs(cheb_u(k + p, p).eval() + cheb_u(k, p).eval()) <= o.tol, "U_{k+p} = -U_k at k=" + std::to_string(k) + at);
    for (int m = -3; m <= 3; ++m)
      for (int k = std::max(0, -m * p); k <= std::max(0, -m * p) + p; ++k)
        r.check(winding_reduction_check(k, m, p, o.tol),
                "winding reduction k=" + std::to_string(k) + " m=" + std::to_string(m) + at);
  }
  for (int k = 0; k <= 40; ++k) {
    const std::string at = " k=" + std::to_string(k);
    r.check(cheb_u(k, 3).eval_at_integer(2) == BigInt(k + 1), "U_k(2) = k+1" + at);
    if (k >= 2) r.check(cheb_t(k, 7) == cheb_u(k, 7) - cheb_u(k - 2, 7), "T_k = U_k - U_{k-2}" + at);
    LaurentPoly sum;
    for (int i = 0; i <= k; ++i) sum += LaurentPoly::y(0, i);
    LaurentPoly v = cheb_u_y(k).substitute(
        [](Var x) { return x == xv(0) ? LaurentPoly(1) + LaurentPoly::y(0) : LaurentPoly::var(x); });
    r.check(v == sum, "U^Y_k(1+Y) = 1 + ... + Y^k" + at);
  }
  return r;
}

SuiteReport suite_skein(const SuiteOptions& o) {
  SuiteReport r{"skein"};
  auto files = json_files(o.data_dir + "/skein");
  r.check(!files.empty(), "no skein fixtures");
  for (const auto& path : files) {
    const std::string name = path.filename().string();
    r.guard(name, [&] {
      SkeinFixture f = skein_fixture_from_json(load_json(path.string()), o.data_dir);
      r.check(verify_skein(f), name + ": identity fails with stored Y's");
      auto [lhs, basis] = skein_system(f);
      auto ys = solve_y_monomials(lhs, basis);
      std::vector<LaurentPoly> stored = f.y;
      if (f.relation == SkeinRelation::TwoTerm)
        for (const auto& t : f.terms) stored.push_back(t.y);
      r.check(ys.has_value() && *ys == stored, name + ": solver does not regenerate the stored Y's");
    });
  }
  return r;
}

}  // namespace orbsnake
