#pragma once

#include "orbsnake/ring.hpp"

// Printed Laurent expansions for the two-orbifold-point example. tau1 = 1 (order 3), tau2 = 2 (order 4), a = 3.
namespace example {

using orbsnake::CoefPoly;
using orbsnake::LaurentPoly;

inline LaurentPoly X(int i, int e = 1) { return LaurentPoly::x(i, e); }
inline LaurentPoly Y(int i, int e = 1) { return LaurentPoly::y(i, e); }
inline LaurentPoly mu() { return CoefPoly::lambda(3); }
inline LaurentPoly lam() { return CoefPoly::lambda(4); }

// As printed, with y2 where the mutation computation gives y1.
inline LaurentPoly gamma1_printed() {
  return (X(3, 2) + mu() * Y(2) * X(2) * X(3) + Y(2, 2) * X(2, 2)) * X(1, -1);
}

inline LaurentPoly gamma1() { return (X(3, 2) + mu() * Y(1) * X(2) * X(3) + Y(1, 2) * X(2, 2)) * X(1, -1); }

inline LaurentPoly gamma2() {
  LaurentPoly xa = X(3), x1 = X(1), x2 = X(2), y1 = Y(1), y2 = Y(2);
  LaurentPoly num = xa.pow(2) * x1.pow(2) * y1.pow(4) * y2.pow(2) + mu() * lam() * xa.pow(2) * x1 * x2 * y1.pow(3) * y2 +
                    lam() * xa * x1 * x2.pow(2) * y1.pow(2) * y2 + lam() * xa.pow(3) * x1 * y1.pow(4) * y2 +
                    mu() * mu() * xa.pow(2) * x2.pow(2) * y1.pow(2) + 2 * mu() * xa * x2.pow(3) * y1 +
                    2 * mu() * xa.pow(3) * x2 * y1.pow(3) + x2.pow(4) + 2 * xa.pow(2) * x2.pow(2) * y1.pow(2) +
                    xa.pow(4) * y1.pow(4);
  return num * (x1.pow(2) * x2).inverse_monomial();
}

inline LaurentPoly gamma3() {
  LaurentPoly xa = X(3), x1 = X(1), x2 = X(2), y1 = Y(1), y2 = Y(2);
  LaurentPoly num = xa * x1.pow(2) + lam() * y2 * xa.pow(2) * x1 + y2.pow(2) * xa.pow(3) +
                    mu() * y1 * y2.pow(2) * xa.pow(2) * x2 + y1.pow(2) * y2.pow(2) * xa * x2.pow(2);
  return num * (x1 * x2).inverse_monomial();
}

inline LaurentPoly gamma4() {
  LaurentPoly xa = X(3), x1 = X(1), x2 = X(2), y1 = Y(1), y2 = Y(2);
  LaurentPoly num = x1.pow(2) + lam() * y2 * xa * x1 + y2.pow(2) * xa.pow(2) + mu() * y1 * y2.pow(2) * xa * x2 +
                    y1.pow(2) * y2.pow(2) * x2.pow(2);
  return num * (x1 * x2).inverse_monomial();
}

}  // namespace example
