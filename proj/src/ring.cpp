#include "orbsnake/ring.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

namespace orbsnake {

namespace {

int lam_degree(const LamMono& m) {
  int d = 0;
  for (const auto& [p, e] : m) d += e;
  return d;
}

// Lexicographic comparison on dense exponent vectors; smaller orders are more significant.
int lam_lex_cmp(const LamMono& a, const LamMono& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) return 1;
    if (i == a.size() || b[j].first < a[i].first) return -1;
    if (a[i].second != b[j].second) return a[i].second > b[j].second ? 1 : -1;
    ++i;
    ++j;
  }
  return 0;
}

LamMono lam_mul(const LamMono& a, const LamMono& b) {
  LamMono r;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back(b[j++]);
    } else {
      r.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}

std::string lam_mono_str(const LamMono& m, bool latex) {
  std::string s;
  for (const auto& [p, e] : m) {
    if (!s.empty()) s += latex ? " " : "*";
    s += latex ? "\\lambda_{" + std::to_string(p) + "}" : "L" + std::to_string(p);
    if (e != 1) s += latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
  }
  return s;
}

std::string coef_poly_str(const CoefPoly& c, bool latex) {
  if (c.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, v] : c.terms()) {
    BigInt a = abs(v);
    bool neg = v < 0;
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    std::string ms = lam_mono_str(m, latex);
    if (ms.empty()) {
      s += a.get_str();
    } else if (a == 1) {
      s += ms;
    } else {
      s += a.get_str() + (latex ? " " : "*") + ms;
    }
  }
  return s;
}

}  // namespace

bool LamOrder::operator()(const LamMono& a, const LamMono& b) const {
  int da = lam_degree(a), db = lam_degree(b);
  if (da != db) return da > db;
  return lam_lex_cmp(a, b) > 0;
}

double lambda_value(int p) { return 2.0 * std::cos(std::numbers::pi / p); }

CoefPoly::CoefPoly(long c) {
  if (c != 0) terms_[{}] = c;
}

CoefPoly::CoefPoly(const BigInt& c) {
  if (c != 0) terms_[{}] = c;
}

CoefPoly CoefPoly::lambda(int p) {
  if (p < 2) throw Error(ErrorKind::Input, "orbifold order must be at least 2");
  CoefPoly r;
  if (p == 2) return r;
  r.terms_[{{p, 1}}] = 1;
  return r;
}

CoefPoly CoefPoly::monomial(const LamMono& m, const BigInt& c) {
  CoefPoly r;
  r.add_term(m, c);
  return r;
}

void CoefPoly::add_term(const LamMono& m, const BigInt& c) {
  if (c == 0) return;
  for (const auto& [p, e] : m)
    if (p == 2) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool CoefPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

BigInt CoefPoly::constant_term() const {
  auto it = terms_.find({});
  return it == terms_.end() ? BigInt(0) : it->second;
}

CoefPoly CoefPoly::operator-() const {
  CoefPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

CoefPoly& CoefPoly::operator+=(const CoefPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CoefPoly& CoefPoly::operator-=(const CoefPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

CoefPoly operator*(const CoefPoly& a, const CoefPoly& b) {
  CoefPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(lam_mul(ma, mb), ca * cb);
  return r;
}

bool CoefPoly::operator<(const CoefPoly& o) const {
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  for (; i != terms_.end() && j != o.terms_.end(); ++i, ++j) {
    if (i->first != j->first) return LamOrder{}(i->first, j->first);
    if (i->second != j->second) return i->second > j->second;
  }
  return i == terms_.end() && j != o.terms_.end();
}

double CoefPoly::eval() const {
  constexpr mpfr_prec_t prec = 256;
  mpfr_t s, t, lam, pi;
  mpfr_inits2(prec, s, t, lam, pi, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_zero(s, 1);
  mpfr_const_pi(pi, MPFR_RNDN);
  for (const auto& [m, c] : terms_) {
    mpfr_set_z(t, c.get_mpz_t(), MPFR_RNDN);
    for (const auto& [p, e] : m) {
      mpfr_div_ui(lam, pi, static_cast<unsigned long>(p), MPFR_RNDN);
      mpfr_cos(lam, lam, MPFR_RNDN);
      mpfr_mul_2ui(lam, lam, 1, MPFR_RNDN);
      mpfr_pow_ui(lam, lam, static_cast<unsigned long>(e), MPFR_RNDN);
      mpfr_mul(t, t, lam, MPFR_RNDN);
    }
    mpfr_add(s, s, t, MPFR_RNDN);
  }
  double r = mpfr_get_d(s, MPFR_RNDN);
  mpfr_clears(s, t, lam, pi, static_cast<mpfr_ptr>(nullptr));
  return r;
}

BigInt CoefPoly::eval_at_integer(long v) const {
  BigInt s = 0;
  for (const auto& [m, c] : terms_) {
    BigInt t = c;
    for (const auto& [p, e] : m) {
      BigInt pw;
      mpz_pow_ui(pw.get_mpz_t(), BigInt(v).get_mpz_t(), static_cast<unsigned long>(e));
      t *= pw;
    }
    s += t;
  }
  return s;
}

std::vector<int> CoefPoly::orders() const {
  std::set<int> s;
  for (const auto& [m, c] : terms_)
    for (const auto& [p, e] : m) s.insert(p);
  return {s.begin(), s.end()};
}

std::string CoefPoly::str() const { return coef_poly_str(*this, false); }
std::string CoefPoly::latex() const { return coef_poly_str(*this, true); }

bool MonoOrder::operator()(const Monomial& a, const Monomial& b) const {
  int da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da > db;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    // A missing variable has exponent 0.
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) return a[i].second > 0;
    if (i == a.size() || b[j].first < a[i].first) return b[j].second < 0;
    if (a[i].second != b[j].second) return a[i].second > b[j].second;
    ++i;
    ++j;
  }
  return false;
}

int mono_degree(const Monomial& m) {
  int d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back(b[j++]);
    } else {
      int e = a[i].second + b[j].second;
      if (e != 0) r.emplace_back(a[i].first, e);
      ++i;
      ++j;
    }
  }
  return r;
}

Monomial mono_inv(const Monomial& m) {
  Monomial r = m;
  for (auto& [v, e] : r) e = -e;
  return r;
}

int mono_exp(const Monomial& m, Var v) {
  for (const auto& [w, e] : m)
    if (w == v) return e;
  return 0;
}

std::string mono_str(const Monomial& m) {
  std::string s;
  for (const auto& [v, e] : m) {
    if (!s.empty()) s += "*";
    s += v.str();
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_[{}] = CoefPoly(c);
}

LaurentPoly::LaurentPoly(const CoefPoly& c) {
  if (!c.is_zero()) terms_[{}] = c;
}

LaurentPoly LaurentPoly::var(Var v, int e) {
  if (v.is_y && e < 0) throw Error(ErrorKind::Arithmetic, "negative exponent on " + v.str());
  LaurentPoly r;
  if (e == 0) {
    r.terms_[{}] = CoefPoly(1);
  } else {
    r.terms_[{{v, e}}] = CoefPoly(1);
  }
  return r;
}

LaurentPoly LaurentPoly::term(const Monomial& m, const CoefPoly& c) {
  LaurentPoly r;
  r.add_term(m, c);
  return r;
}

void LaurentPoly::add_term(const Monomial& m, const CoefPoly& c) {
  if (c.is_zero()) return;
  for (const auto& [v, e] : m)
    if (v.is_y && e < 0) throw Error(ErrorKind::Arithmetic, "negative exponent on " + v.str());
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
  return r;
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) return inverse_monomial().pow(-e);
  LaurentPoly r = 1, base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

LaurentPoly LaurentPoly::inverse_monomial() const {
  if (terms_.size() != 1) throw Error(ErrorKind::Arithmetic, "inverse of a non-monomial");
  const auto& [m, c] = *terms_.begin();
  if (!c.is_constant() || abs(c.constant_term()) != 1)
    throw Error(ErrorKind::Arithmetic, "inverse of a monomial with non-unit coefficient");
  return term(mono_inv(m), c);
}

LaurentPoly LaurentPoly::div_exact_monomial(const LaurentPoly& d) const {
  if (d.is_zero()) throw Error(ErrorKind::Arithmetic, "division by zero");
  if (d.terms_.size() != 1) throw Error(ErrorKind::Arithmetic, "division by a non-monomial");
  const auto& [dm, dc] = *d.terms_.begin();
  if (!dc.is_constant() || abs(dc.constant_term()) != 1)
    throw Error(ErrorKind::Arithmetic, "division by a monomial with non-unit coefficient");
  Monomial inv = mono_inv(dm);
  LaurentPoly r;
  for (const auto& [m, c] : terms_) r.add_term(mono_mul(m, inv), dc.constant_term() < 0 ? -c : c);
  return r;
}

Monomial LaurentPoly::gcd_monomial() const {
  if (terms_.empty()) return {};
  std::map<Var, int> mn;
  for (const auto& v : variables()) mn[v] = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    for (auto& [v, e] : mn) {
      int x = mono_exp(m, v);
      e = first ? x : std::min(e, x);
    }
    first = false;
  }
  Monomial r;
  for (const auto& [v, e] : mn)
    if (e != 0) r.emplace_back(v, e);
  return r;
}

std::vector<Var> LaurentPoly::variables() const {
  std::set<Var> s;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m) s.insert(v);
  return {s.begin(), s.end()};
}

int LaurentPoly::max_y_degree() const {
  int best = 0;
  for (const auto& [m, c] : terms_) {
    int d = 0;
    for (const auto& [v, e] : m)
      if (v.is_y) d += e;
    best = std::max(best, d);
  }
  return best;
}

LaurentPoly LaurentPoly::substitute(const std::function<LaurentPoly(Var)>& f) const {
  std::map<Var, LaurentPoly> cache;
  LaurentPoly r;
  for (const auto& [m, c] : terms_) {
    LaurentPoly t = LaurentPoly(c);
    for (const auto& [v, e] : m) {
      auto it = cache.find(v);
      if (it == cache.end()) it = cache.emplace(v, f(v)).first;
      t *= it->second.pow(e);
    }
    r += t;
  }
  return r;
}

double LaurentPoly::eval(const std::function<double(Var)>& f) const {
  double s = 0;
  for (const auto& [m, c] : terms_) {
    double t = c.eval();
    for (const auto& [v, e] : m) t *= std::pow(f(v), e);
    s += t;
  }
  return s;
}

double LaurentPoly::eval(const std::map<Var, double>& vals) const {
  return eval([&](Var v) {
    auto it = vals.find(v);
    if (it == vals.end()) throw Error(ErrorKind::Input, "no value assigned to " + v.str());
    if (it->second == 0.0) throw Error(ErrorKind::Input, "zero value assigned to " + v.str());
    return it->second;
  });
}

double LaurentPoly::eval_all_ones() const {
  return eval([](Var) { return 1.0; });
}

namespace {

std::string term_body(const Monomial& m, const CoefPoly& c, bool& neg, bool latex) {
  std::string ms;
  if (latex) {
    for (const auto& [v, e] : m) {
      if (!ms.empty()) ms += " ";
      ms += std::string(v.is_y ? "y" : "x") + "_{" + std::to_string(v.id) + "}";
      if (e != 1) ms += "^{" + std::to_string(e) + "}";
    }
  } else {
    ms = mono_str(m);
  }
  std::string sep = latex ? " " : "*";
  neg = false;
  std::string cs;
  if (c.terms().size() == 1) {
    const auto& [lm, v] = *c.terms().begin();
    neg = v < 0;
    BigInt a = abs(v);
    std::string ls = lam_mono_str(lm, latex);
    if (a != 1 || (ls.empty() && ms.empty())) cs = a.get_str();
    if (!ls.empty()) cs += (cs.empty() ? "" : sep) + ls;
  } else {
    cs = (latex ? "\\left(" : "(") + coef_poly_str(c, latex) + (latex ? "\\right)" : ")");
  }
  if (cs.empty()) return ms;
  if (ms.empty()) return cs;
  return cs + sep + ms;
}

std::string poly_str(const std::map<Monomial, CoefPoly, MonoOrder>& terms, bool latex) {
  if (terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms) {
    bool neg;
    std::string body = term_body(m, c, neg, latex);
    if (first) {
      s += neg ? "-" : "";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    s += body;
  }
  return s;
}

}  // namespace

std::string LaurentPoly::str() const { return poly_str(terms_, false); }

std::string LaurentPoly::latex() const {
  Monomial g = gcd_monomial();
  Monomial den;
  for (const auto& [v, e] : g)
    if (e < 0) den.emplace_back(v, -e);
  if (den.empty()) return poly_str(terms_, true);
  LaurentPoly num = *this * term(den, 1);
  return "\\frac{" + poly_str(num.terms_, true) + "}{" + poly_str(term(den, 1).terms_, true) + "}";
}

std::string LaurentPoly::fraction_str() const {
  Monomial g = gcd_monomial();
  Monomial den;
  for (const auto& [v, e] : g)
    if (e < 0) den.emplace_back(v, -e);
  if (den.empty()) return str();
  LaurentPoly num = *this * term(den, 1);
  return "(" + num.str() + ")/(" + mono_str(den) + ")";
}

Mat2 Mat2::operator*(const Mat2& o) const {
  return Mat2{a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22, a21 * o.a11 + a22 * o.a21,
              a21 * o.a12 + a22 * o.a22};
}

std::string Mat2::str() const {
  return "[[" + a11.str() + ", " + a12.str() + "], [" + a21.str() + ", " + a22.str() + "]]";
}

CoefPoly cheb_u(int k, int p) {
  if (k < -2) throw Error(ErrorKind::Input, "cheb_u index below -2");
  if (k == -2) return CoefPoly(-1);
  if (k == -1) return CoefPoly(0);
  CoefPoly lam = CoefPoly::lambda(p);
  CoefPoly prev = 0, cur = 1;
  for (int i = 0; i < k; ++i) {
    CoefPoly next = lam * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

CoefPoly cheb_t(int k, int p) {
  if (k < 0) throw Error(ErrorKind::Input, "cheb_t index below 0");
  CoefPoly lam = CoefPoly::lambda(p);
  CoefPoly prev = 2, cur = lam;
  if (k == 0) return prev;
  for (int i = 1; i < k; ++i) {
    CoefPoly next = lam * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

LaurentPoly cheb_u_y(int k) {
  if (k < -1) throw Error(ErrorKind::Input, "cheb_u_y index below -1");
  if (k == -1) return 0;
  LaurentPoly x = LaurentPoly::x(0), y = LaurentPoly::y(0);
  LaurentPoly prev = 0, cur = 1;
  for (int i = 0; i < k; ++i) {
    LaurentPoly next = x * cur - y * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace orbsnake
