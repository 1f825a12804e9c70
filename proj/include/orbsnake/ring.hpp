#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orbsnake {

enum class ErrorKind { Input, Internal, Arithmetic };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

using BigInt = mpz_class;

// Exponent vector over lambda symbols: (order p, exponent), p ascending, exponents > 0.
using LamMono = std::vector<std::pair<int, int>>;

struct LamOrder {
  bool operator()(const LamMono& a, const LamMono& b) const;
};

double lambda_value(int p);

// Integer polynomial in the formal symbols L{p} = 2cos(pi/p).
// L2 is identically zero and is folded away on construction.
class CoefPoly {
 public:
  CoefPoly() = default;
  CoefPoly(long c);  // NOLINT
  CoefPoly(const BigInt& c);  // NOLINT

  static CoefPoly lambda(int p);
  static CoefPoly monomial(const LamMono& m, const BigInt& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  BigInt constant_term() const;
  const std::map<LamMono, BigInt, LamOrder>& terms() const { return terms_; }

  CoefPoly operator-() const;
  CoefPoly& operator+=(const CoefPoly& o);
  CoefPoly& operator-=(const CoefPoly& o);
  friend CoefPoly operator+(CoefPoly a, const CoefPoly& b) { return a += b; }
  friend CoefPoly operator-(CoefPoly a, const CoefPoly& b) { return a -= b; }
  friend CoefPoly operator*(const CoefPoly& a, const CoefPoly& b);
  bool operator==(const CoefPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const CoefPoly& o) const { return !(*this == o); }
  bool operator<(const CoefPoly& o) const;

  double eval() const;
  // Substitute the integer value v for every lambda symbol.
  BigInt eval_at_integer(long v) const;
  std::vector<int> orders() const;

  std::string str() const;
  std::string latex() const;

 private:
  void add_term(const LamMono& m, const BigInt& c);
  std::map<LamMono, BigInt, LamOrder> terms_;
};

// Variable registry key: x-variables come first, then y-variables, each by id.
struct Var {
  bool is_y = false;
  int id = 0;
  bool operator<(const Var& o) const { return is_y != o.is_y ? !is_y : id < o.id; }
  bool operator==(const Var& o) const { return is_y == o.is_y && id == o.id; }
  bool operator!=(const Var& o) const { return !(*this == o); }
  std::string str() const { return (is_y ? "y" : "x") + std::to_string(id); }
};

inline Var xv(int id) { return Var{false, id}; }
inline Var yv(int id) { return Var{true, id}; }

using Monomial = std::vector<std::pair<Var, int>>;

struct MonoOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

int mono_degree(const Monomial& m);
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_inv(const Monomial& m);
int mono_exp(const Monomial& m, Var v);

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT
  LaurentPoly(const CoefPoly& c);  // NOLINT

  static LaurentPoly var(Var v, int e = 1);
  static LaurentPoly x(int id, int e = 1) { return var(xv(id), e); }
  static LaurentPoly y(int id, int e = 1) { return var(yv(id), e); }
  static LaurentPoly term(const Monomial& m, const CoefPoly& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  const std::map<Monomial, CoefPoly, MonoOrder>& terms() const { return terms_; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly pow(int e) const;
  // Exact division by a single term whose coefficient is +-1.
  LaurentPoly div_exact_monomial(const LaurentPoly& d) const;
  LaurentPoly inverse_monomial() const;

  // Exponentwise minimum over all terms (the largest monomial dividing every term).
  Monomial gcd_monomial() const;
  std::vector<Var> variables() const;
  int max_y_degree() const;

  LaurentPoly substitute(const std::function<LaurentPoly(Var)>& f) const;
  double eval(const std::function<double(Var)>& f) const;
  double eval(const std::map<Var, double>& vals) const;
  double eval_all_ones() const;

  std::string str() const;
  std::string latex() const;
  // Numerator over the exponentwise-minimal monomial denominator.
  std::string fraction_str() const;

 private:
  void add_term(const Monomial& m, const CoefPoly& c);
  std::map<Monomial, CoefPoly, MonoOrder> terms_;
};

std::string mono_str(const Monomial& m);

struct Mat2 {
  LaurentPoly a11 = 1, a12 = 0, a21 = 0, a22 = 1;

  static Mat2 identity() { return Mat2{}; }
  Mat2 operator*(const Mat2& o) const;
  Mat2 operator-() const { return Mat2{-a11, -a12, -a21, -a22}; }
  bool operator==(const Mat2& o) const {
    return a11 == o.a11 && a12 == o.a12 && a21 == o.a21 && a22 == o.a22;
  }
  bool operator!=(const Mat2& o) const { return !(*this == o); }
  LaurentPoly trace() const { return a11 + a22; }
  LaurentPoly det() const { return a11 * a22 - a12 * a21; }
  LaurentPoly ur() const { return a12; }
  std::string str() const;
};

CoefPoly cheb_u(int k, int p);
CoefPoly cheb_t(int k, int p);
// Bivariate U_k^Y with x = x0 and Y = y0.
LaurentPoly cheb_u_y(int k);

inline std::ostream& operator<<(std::ostream& os, const CoefPoly& c) { return os << c.str(); }
inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }
inline std::ostream& operator<<(std::ostream& os, const Mat2& m) { return os << m.str(); }

}  // namespace orbsnake
