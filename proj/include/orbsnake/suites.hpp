#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orbsnake/fuzz.hpp"

namespace orbsnake {

struct SuiteOptions {
  std::string data_dir;
  int fuzz = 500;
  std::uint64_t seed = 7;
  double tol = 1e-9;
  int n = 7;
};

struct SuiteReport {
  std::string name;
  int checks = 0;
  int failed = 0;
  std::vector<std::string> failures;  // first few only

  bool ok() const { return failed == 0 && checks > 0; }
  void check(bool pass, const std::string& what);
  // Runs f, counting an Error or std::exception as a failure of what.
  template <class F>
  void guard(const std::string& what, F&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      check(false, what + ": " + e.what());
    }
  }
  std::string summary() const;
};

// Deterministic mix of ordinary arcs, generalized arcs and closed curves on random disks with p in 2..6.
std::vector<FuzzCase> fuzz_cases(int count, std::uint64_t seed);

// Every curve fixture under data_dir/curves with its triangulation.
std::vector<FuzzCase> curve_fixtures(const std::string& data_dir);

SuiteReport suite_arcsgraphs(const SuiteOptions& o);
SuiteReport suite_positivity(const SuiteOptions& o);
SuiteReport suite_universal_poset(const SuiteOptions& o);
SuiteReport suite_universal_matrices(const SuiteOptions& o);
SuiteReport suite_lift(const SuiteOptions& o);
SuiteReport suite_mutation(const SuiteOptions& o);
SuiteReport suite_chebyshev(const SuiteOptions& o);
SuiteReport suite_skein(const SuiteOptions& o);

// Lowest positive-point value of any coefficient of p, with every lambda at 2cos(pi/order).
double min_coefficient(const LaurentPoly& p);

}  // namespace orbsnake
