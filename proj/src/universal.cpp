#include "orbsnake/universal.hpp"

namespace orbsnake {

ChainGraph build_ug(const UniversalLabels& labels) { return ChainGraph(labels); }

LaurentPoly tile_product(const UniversalLabels& u, int from, int to) {
  LaurentPoly p = 1;
  for (int j = from; j <= to; ++j) p *= u.i[j];
  return p;
}

Mat2 step_matrix_m(const UniversalLabels& u, int j) {
  LaurentPoly inv_i = u.i[j].inverse_monomial();
  LaurentPoly inv_i1 = u.i[j + 1].inverse_monomial();
  if (j % 2 == 1) {
    return Mat2{u.lj[j] * inv_i, u.y[j] * u.bj[j], u.aj[j] * inv_i * inv_i1, u.y[j] * u.rj[j] * inv_i1};
  }
  return Mat2{u.rj[j] * inv_i, u.y[j] * u.aj[j], u.bj[j] * inv_i * inv_i1, u.y[j] * u.lj[j] * inv_i1};
}

Mat2 mg_matrix(const UniversalLabels& u) {
  Mat2 m = Mat2::identity();
  for (int j = 1; j < u.n; ++j) m = step_matrix_m(u, j) * m;
  return m;
}

PartitionedSums partitioned_sums(const ChainGraph& g) {
  const UniversalLabels& u = g.labels();
  const int n = u.n;
  LaurentPoly sa, sb, sc, sd;
  for (const auto& m : g.matchings_dp()) {
    LaurentPoly t = g.weight(m) * g.height(m);
    bool a = g.uses(m, Slot::A), b = g.uses(m, Slot::B);
    bool w = g.uses(m, g.w_slot()), z = g.uses(m, g.z_slot());
    if (a && w) sa += t;
    if (b && w) sb += t;
    if (a && z) sc += t;
    if (b && z) sd += t;
  }
  PartitionedSums r;
  r.A = sa.div_exact_monomial(tile_product(u, 1, n - 1) * u.a * u.w);
  r.B = sb.div_exact_monomial(tile_product(u, 2, n - 1) * u.b * u.w);
  r.C = sc.div_exact_monomial(tile_product(u, 1, n) * u.a * u.z * u.y[n]);
  r.D = sd.div_exact_monomial(tile_product(u, 2, n) * u.b * u.z * u.y[n]);
  return r;
}

LaurentPoly matching_sum(const ChainGraph& g, Glue glue) {
  LaurentPoly s;
  for (const auto& m : g.matchings_dp()) {
    bool keep = true;
    if (glue == Glue::AZ) keep = g.uses(m, Slot::A) || g.uses(m, g.z_slot());
    if (glue == Glue::BW) keep = g.uses(m, Slot::B) || g.uses(m, g.w_slot());
    if (keep) s += g.weight(m) * g.height(m);
  }
  if (glue == Glue::AZ) return s.div_exact_monomial(g.labels().a);
  if (glue == Glue::BW) return s.div_exact_monomial(g.labels().b);
  return s;
}

LaurentPoly weighted_sum_via_matrices(const UniversalLabels& u, Glue glue) {
  const int n = u.n;
  Mat2 mg = mg_matrix(u);
  LaurentPoly cross = tile_product(u, 1, n);
  LaurentPoly i1 = u.i[1], in = u.i[n];
  if (glue == Glue::None) {
    // ur(suffix * MG * prefix); only the second prefix column and first suffix row contribute.
    LaurentPoly c1 = mg.a11 * u.a + mg.a12 * u.b * i1.inverse_monomial();
    LaurentPoly c2 = mg.a21 * u.a + mg.a22 * u.b * i1.inverse_monomial();
    return cross * (u.w * in.inverse_monomial() * c1 + u.z * u.y[n] * c2);
  }
  Mat2 boundary;
  if (glue == Glue::AZ) {
    boundary = Mat2{i1 * in.inverse_monomial(), u.a * u.y[n], 0, u.y[n] * in * i1.inverse_monomial()};
  } else {
    boundary = Mat2{1, 0, u.b * i1.inverse_monomial() * in.inverse_monomial(), u.y[n]};
  }
  return cross * (boundary * mg).trace();
}

UniversalLabels band_labels(const UniversalLabels& u, Glue glue, const LaurentPoly& c) {
  UniversalLabels r = u;
  if (glue == Glue::AZ) {
    r.b = u.i[u.n];
    r.w = u.i[1];
    r.a = c;
    r.z = c;
  } else if (glue == Glue::BW) {
    r.a = u.i[u.n];
    r.z = u.i[1];
    r.b = c;
    r.w = c;
  }
  return r;
}

Mat2 printed_bw_boundary(const UniversalLabels& u) {
  LaurentPoly i1 = u.i[1], in = u.i[u.n];
  return Mat2{i1 * in.inverse_monomial(), 0, u.b * i1.inverse_monomial() * in.inverse_monomial(),
              u.y[u.n] * in * i1.inverse_monomial()};
}

}  // namespace orbsnake
