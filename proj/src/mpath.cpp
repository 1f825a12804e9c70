#include "orbsnake/mpath.hpp"

#include <cmath>

namespace orbsnake {

namespace {

LaurentPoly X(int id) { return LaurentPoly::x(id); }

struct Crossing {
  int arc;
};

enum class Compound { Right, Left, WindRight, WindLeft };

struct Between {
  Compound kind;
  int glue = 0;
  int winding = 0;
};

void push_type2(MPath& p, int arc) { p.push_back({StepType::Type2, arc, 0, 0, 1, 0}); }

void push_wind(MPath& p, int rho, int order, int reps) {
  for (int r = 0; r < reps; ++r) {
    p.push_back({StepType::Pending3, rho, 0, 0, 1, order});
    p.push_back({StepType::Pending1, rho, 0, 0, 1, order});
  }
}

}  // namespace

std::string ElementaryStep::str() const {
  const char* s = sign > 0 ? "+" : "-";
  switch (type) {
    case StepType::Type1:
      return std::string("type1(") + s + "x" + std::to_string(third) + "/(x" + std::to_string(arc) + "*x" +
             std::to_string(arc2) + "))";
    case StepType::Type2: return std::string("type2(") + s + std::to_string(arc) + ")";
    case StepType::Type3: return std::string("type3(") + (sign > 0 ? "right " : "left ") + std::to_string(arc) + ")";
    case StepType::Pending1: return std::string("pending1(") + (sign > 0 ? "cw " : "ccw ") + std::to_string(arc) + ")";
    case StepType::Pending3:
      return std::string("pending3(") + (sign > 0 ? "right " : "left ") + std::to_string(arc) + ")";
  }
  return "?";
}

Mat2 step_matrix(const ElementaryStep& s) {
  switch (s.type) {
    case StepType::Type1: {
      LaurentPoly e = X(s.third) * (X(s.arc) * X(s.arc2)).inverse_monomial();
      return Mat2{1, 0, s.sign > 0 ? e : -e, 1};
    }
    case StepType::Type2:
      if (s.sign > 0) return Mat2{1, 0, 0, LaurentPoly::y(s.arc)};
      return Mat2{LaurentPoly::y(s.arc), 0, 0, 1};
    case StepType::Type3:
    case StepType::Pending3: {
      LaurentPoly x = X(s.arc);
      if (s.sign > 0) return Mat2{0, x, -x.inverse_monomial(), 0};
      return Mat2{0, -x, x.inverse_monomial(), 0};
    }
    case StepType::Pending1: {
      LaurentPoly e = LaurentPoly(CoefPoly::lambda(s.order)) * X(s.arc).inverse_monomial();
      return Mat2{1, 0, s.sign > 0 ? e : -e, 1};
    }
  }
  return Mat2::identity();
}

Mat2 m_of(const MPath& path) {
  Mat2 m = Mat2::identity();
  for (const auto& s : path) m = step_matrix(s) * m;
  return m;
}

MPath standard_mpath(const CurveDescriptor& d, const Triangulation& t) {
  validate(d, t);
  if (d.word.empty()) throw Error(ErrorKind::Input, "curve kind " + kind_name(d.kind) + " has no standard M-path");
  const bool closed = d.kind == CurveKind::ClosedCurve;
  const std::size_t m = d.word.size();
  std::vector<int> cross;
  std::vector<Between> between;
  for (std::size_t k = 0; k < m; ++k) {
    const auto& tok = d.word[k];
    const Arc& arc = t.arc(tok.arc);
    bool single = (k == 0 && d.ends.start_winding > 0) || (k + 1 == m && d.ends.end_winding > 0);
    cross.push_back(tok.arc);
    if (arc.kind == ArcKind::Pending && !single) {
      cross.push_back(tok.arc);
      Turn base = pending_base(d, t, k);
      between.push_back({base == Turn::Right ? Compound::WindRight : Compound::WindLeft, 0, tok.winding});
    }
    if (k + 1 < m || closed)
      between.push_back({*tok.turn == Turn::Right ? Compound::Right : Compound::Left, *tok.glue, 0});
  }
  const std::size_t n = cross.size();
  MPath path;
  if (!closed) {
    if (d.ends.start_winding > 0) {
      push_wind(path, cross.front(), t.arc(cross.front()).order, d.ends.start_winding);
    } else {
      path.push_back({StepType::Type3, *d.ends.a, 0, 0, 1, 0});
      path.push_back({StepType::Type1, *d.ends.a, cross.front(), *d.ends.b, 1, 0});
    }
  }
  for (std::size_t j = 0; j < between.size(); ++j) {
    const int i = cross[j], ip = cross[(j + 1) % n];
    const Between& b = between[j];
    push_type2(path, i);
    switch (b.kind) {
      case Compound::Right: path.push_back({StepType::Type1, i, ip, b.glue, 1, 0}); break;
      case Compound::Left:
        path.push_back({StepType::Type1, i, b.glue, ip, 1, 0});
        path.push_back({StepType::Type3, b.glue, 0, 0, 1, 0});
        path.push_back({StepType::Type1, b.glue, ip, i, 1, 0});
        break;
      case Compound::WindRight: {
        int p = t.arc(i).order;
        path.push_back({StepType::Pending1, i, 0, 0, 1, p});
        push_wind(path, i, p, b.winding);
        break;
      }
      case Compound::WindLeft: {
        int p = t.arc(i).order;
        for (int r = 0; r <= b.winding; ++r) {
          path.push_back({StepType::Pending3, i, 0, 0, -1, p});
          path.push_back({StepType::Pending1, i, 0, 0, -1, p});
        }
        path.push_back({StepType::Pending3, i, 0, 0, 1, p});
        break;
      }
    }
  }
  if (!closed) {
    push_type2(path, cross.back());
    if (d.ends.end_winding > 0) {
      int rho = cross.back(), p = t.arc(rho).order;
      for (int r = 0; r < d.ends.end_winding; ++r) {
        path.push_back({StepType::Pending1, rho, 0, 0, 1, p});
        path.push_back({StepType::Pending3, rho, 0, 0, 1, p});
      }
    } else {
      path.push_back({StepType::Type1, cross.back(), *d.ends.z, *d.ends.w, 1, 0});
      path.push_back({StepType::Type3, *d.ends.z, 0, 0, 1, 0});
    }
  }
  return path;
}

namespace {

LaurentPoly sign_normalize(const LaurentPoly& v) {
  double at1 = v.eval_all_ones();
  if (std::fabs(at1) < 1e-12) throw Error(ErrorKind::Arithmetic, "sign-undecidable: positive-point evaluation vanishes");
  return at1 < 0 ? -v : v;
}

}  // namespace

LaurentPoly chi(const CurveDescriptor& d, const Triangulation& t) {
  validate(d, t);
  switch (d.kind) {
    case CurveKind::ContractibleLoop: return -2;
    case CurveKind::OrbifoldLoop: {
      return cheb_matrix_power(d.self_intersections + 1, d.order).product.trace();
    }
    case CurveKind::Kinked: {
      LaurentPoly inner = chi(*d.inner, t);
      return d.kinks % 2 ? -inner : inner;
    }
    default: break;
  }
  if (d.arc) return LaurentPoly::x(*d.arc);
  Mat2 m = m_of(standard_mpath(d, t));
  return sign_normalize(d.kind == CurveKind::ClosedCurve ? m.trace() : m.ur());
}

ChebMatrixPower cheb_matrix_power(int k, int p, int rho) {
  if (k < 0) throw Error(ErrorKind::Input, "matrix power needs k >= 0");
  ElementaryStep t3{StepType::Pending3, rho, 0, 0, 1, p}, p1{StepType::Pending1, rho, 0, 0, 1, p};
  ElementaryStep t3l{StepType::Pending3, rho, 0, 0, -1, p}, p1c{StepType::Pending1, rho, 0, 0, -1, p};
  Mat2 f = step_matrix(p1) * step_matrix(t3);
  Mat2 g = step_matrix(t3l) * step_matrix(p1c);
  ChebMatrixPower r;
  for (int i = 0; i < k; ++i) {
    r.product = f * r.product;
    r.clockwise_product = g * r.clockwise_product;
  }
  LaurentPoly x = X(rho), xi = x.inverse_monomial();
  auto U = [&](int j) { return LaurentPoly(cheb_u(j, p)); };
  r.closed_form = Mat2{-U(k - 2), U(k - 1) * x, -U(k - 1) * xi, U(k)};
  r.clockwise_closed_form = Mat2{U(k), -U(k - 1) * x, U(k - 1) * xi, -U(k - 2)};
  return r;
}

NumMat2 NumMat2::operator*(const NumMat2& o) const {
  return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22, a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
}

NumMat2 eval_numeric(const Mat2& m, const std::function<double(Var)>& f) {
  return {m.a11.eval(f), m.a12.eval(f), m.a21.eval(f), m.a22.eval(f)};
}

bool winding_reduction_check(int k, int m, int p, double tol) {
  if (k < 0 || k + m * p < 0) throw Error(ErrorKind::Input, "winding counts must stay non-negative");
  auto f = [](Var) { return 1.7; };
  ElementaryStep t3{StepType::Pending3, 0, 0, 0, 1, p}, p1{StepType::Pending1, 0, 0, 0, 1, p};
  NumMat2 step = eval_numeric(step_matrix(p1) * step_matrix(t3), f);
  auto power = [&](int e) {
    NumMat2 r;
    for (int i = 0; i < e; ++i) r = step * r;
    return r;
  };
  NumMat2 lhs = power(k + m * p), rhs = power(k);
  double s = m % 2 == 0 ? 1.0 : -1.0;
  return std::fabs(lhs.a11 - s * rhs.a11) < tol && std::fabs(lhs.a12 - s * rhs.a12) < tol &&
         std::fabs(lhs.a21 - s * rhs.a21) < tol && std::fabs(lhs.a22 - s * rhs.a22) < tol;
}

}  // namespace orbsnake
