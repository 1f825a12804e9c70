#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orbsnake/lift.hpp"
#include "orbsnake/mpath.hpp"
#include "orbsnake/snake.hpp"
#include "orbsnake/suites.hpp"

namespace py = pybind11;
using namespace orbsnake;
using nlohmann::json;

namespace {

json parse(const std::string& s) {
  try {
    return json::parse(s);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Input, e.what());
  }
}

CurveFile load(const std::string& curve, const std::string& triangulation) {
  CurveFile f{triangulation_from_json(parse(triangulation)), curve_from_json(parse(curve))};
  validate(f.curve, f.triangulation);
  return f;
}

std::string render(const LaurentPoly& p, const std::string& format) {
  if (format == "canonical") return p.fraction_str();
  if (format == "latex") return p.latex();
  if (format == "terms") return p.str();
  throw Error(ErrorKind::Input, "unknown format " + format);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Expansions of curves on orbifolds by snake graphs and matrix products";
  static py::exception<Error> input_error(m, "InputError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Input)
        PyErr_SetString(input_error.ptr(), e.what());
      else
        PyErr_SetString(PyExc_RuntimeError, e.what());
    }
  });
  m.attr("DATA_DIR") = ORBSNAKE_DATA_DIR;

  m.def(
      "expand",
      [](const std::string& curve, const std::string& triangulation, const std::string& format) {
        CurveFile f = load(curve, triangulation);
        return render(cluster_expansion(f.curve, f.triangulation), format);
      },
      py::arg("curve"), py::arg("triangulation"), py::arg("format") = "canonical");
  m.def(
      "expand_file",
      [](const std::string& path, const std::string& format) {
        CurveFile f = load_curve_file(path);
        return render(cluster_expansion(f.curve, f.triangulation), format);
      },
      py::arg("path"), py::arg("format") = "canonical");
  m.def(
      "chi",
      [](const std::string& curve, const std::string& triangulation, const std::string& format) {
        CurveFile f = load(curve, triangulation);
        return render(chi(f.curve, f.triangulation), format);
      },
      py::arg("curve"), py::arg("triangulation"), py::arg("format") = "canonical");
  m.def(
      "matching_count",
      [](const std::string& curve, const std::string& triangulation) {
        CurveFile f = load(curve, triangulation);
        return build_snake_graph(f.curve, f.triangulation).matchings.size();
      },
      py::arg("curve"), py::arg("triangulation"));
  m.def(
      "universal_poset_dot",
      [](int n) {
        SnakeGraph g{build_ug(UniversalLabels::generic(n)), {}, {}, false, Glue::None, 0, 1, {}};
        g.matchings = enumerate_matchings(g);
        return to_dot(matching_poset(g));
      },
      py::arg("n"));
  m.def(
      "lift",
      [](const std::string& curve, const std::string& triangulation) {
        CurveFile f = load(curve, triangulation);
        LiftedPolygon L = build_lift(f.curve, f.triangulation);
        json j{{"d", L.d},
               {"triangulation", to_json(L.polygon)},
               {"projection", std::vector<int>(L.projection.begin() + 1, L.projection.end())},
               {"lifted_arc", to_json(L.lifted_arc)},
               {"verified", verify_lift(f.curve, f.triangulation)}};
        return j.dump();
      },
      py::arg("curve"), py::arg("triangulation"));
  m.def(
      "mutate",
      [](const std::string& matrix, const std::vector<int>& indices) {
        ExtendedBMatrix b = bmatrix_from_json(parse(matrix));
        for (int k : indices) b = generalized_mutate(b, k);
        return to_json(b).dump();
      },
      py::arg("matrix"), py::arg("indices"));
  m.def(
      "verify",
      [](const std::string& suite, int fuzz, std::uint64_t seed, double tol, int n, const std::string& data_dir) {
        SuiteOptions o{data_dir, fuzz, seed, tol, n};
        SuiteReport r;
        if (suite == "arcsgraphs") r = suite_arcsgraphs(o);
        else if (suite == "positivity") r = suite_positivity(o);
        else if (suite == "universal_poset") r = suite_universal_poset(o);
        else if (suite == "universal_matrices") r = suite_universal_matrices(o);
        else if (suite == "lift") r = suite_lift(o);
        else if (suite == "mutation") r = suite_mutation(o);
        else if (suite == "chebyshev") r = suite_chebyshev(o);
        else if (suite == "skein") r = suite_skein(o);
        else throw Error(ErrorKind::Input, "unknown suite " + suite);
        return py::make_tuple(r.ok(), r.summary());
      },
      py::arg("suite"), py::arg("fuzz") = 500, py::arg("seed") = 7, py::arg("tol") = 1e-9, py::arg("n") = 7,
      py::arg("data_dir") = ORBSNAKE_DATA_DIR);
  m.def(
      "cheb_u", [](int k, int p) { return cheb_u(k, p).str(); }, py::arg("k"), py::arg("p"));
  m.def(
      "cheb_u_value", [](int k, int p) { return cheb_u(k, p).eval(); }, py::arg("k"), py::arg("p"));
}
