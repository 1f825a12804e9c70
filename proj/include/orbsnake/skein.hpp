#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbsnake/mpath.hpp"

namespace orbsnake {

using Multicurve = std::vector<CurveDescriptor>;

struct SkeinTerm {
  int sign = 1;
  LaurentPoly y = 1;  // y-monomial
  Multicurve curves;
};

enum class SkeinRelation { TwoTerm, ThreeTerm };

struct SkeinFixture {
  std::string name;
  SkeinRelation relation = SkeinRelation::TwoTerm;
  Triangulation triangulation;
  // Two-term: chi(curves) = sign1 Y1 chi(C1) + sign2 Y2 chi(C2).
  Multicurve curves;
  std::vector<SkeinTerm> terms;
  // Three-term: chi(g1) chi(g2) = Y0 chi(b1)^2 + Y1 L{p} chi(b1) chi(b2) + Y2 chi(b2)^2.
  CurveDescriptor gamma1, gamma2, beta1, beta2;
  int order = 0;
  std::vector<LaurentPoly> y;  // Y0, Y1, Y2
};

// Product of chi over the components.
LaurentPoly chi(const Multicurve& c, const Triangulation& t);

bool verify_two_term(const SkeinFixture& f);
bool verify_three_term(const SkeinFixture& f);
bool verify_skein(const SkeinFixture& f);

// Y-monomials (or 0) with lhs = sum Y_i basis_i, by leading-term division; nullopt when none exist.
std::optional<std::vector<LaurentPoly>> solve_y_monomials(const LaurentPoly& lhs, const std::vector<LaurentPoly>& basis);

// Left-hand side and basis of the fixture's relation, signs and L{p} included.
std::pair<LaurentPoly, std::vector<LaurentPoly>> skein_system(const SkeinFixture& f);

SkeinFixture skein_fixture_from_json(const nlohmann::json& j, const std::string& data_dir = "");
nlohmann::json to_json(const SkeinFixture& f);

}  // namespace orbsnake
