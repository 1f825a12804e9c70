#pragma once

#include <string>
#include <vector>

#include "orbsnake/orbifold.hpp"

namespace orbsnake {

enum class StepType { Type1, Type2, Type3, Pending1, Pending3 };

// Type1: arc = tau, arc2 = tau', third = sigma, sign of the lower-left entry.
// Type2: crossing arc; sign +1 goes from v- to v+.
// Type3 / Pending3: followed arc; sign +1 sees it on the right.
// Pending1: pending arc of given order; sign +1 travels clockwise.
struct ElementaryStep {
  StepType type = StepType::Type1;
  int arc = 0;
  int arc2 = 0;
  int third = 0;
  int sign = 1;
  int order = 0;

  std::string str() const;
};

using MPath = std::vector<ElementaryStep>;

Mat2 step_matrix(const ElementaryStep& s);
Mat2 m_of(const MPath& path);  // eta_n ... eta_1

MPath standard_mpath(const CurveDescriptor& d, const Triangulation& t);

// |ur| or |tr| with the sign fixed by the all-ones evaluation.
LaurentPoly chi(const CurveDescriptor& d, const Triangulation& t);

struct ChebMatrixPower {
  Mat2 product;      // explicit k-fold product
  Mat2 closed_form;  // [[-U_{k-2}, U_{k-1} x], [-U_{k-1}/x, U_k]]
  Mat2 clockwise_product;
  Mat2 clockwise_closed_form;
};
// Uses x_rho for the given variable id.
ChebMatrixPower cheb_matrix_power(int k, int p, int rho = 0);

bool winding_reduction_check(int k, int m, int p, double tol = 1e-9);

// Numeric 2x2 helpers for tolerance-based checks.
struct NumMat2 {
  double a11 = 1, a12 = 0, a21 = 0, a22 = 1;
  NumMat2 operator*(const NumMat2& o) const;
};
NumMat2 eval_numeric(const Mat2& m, const std::function<double(Var)>& f);

}  // namespace orbsnake
