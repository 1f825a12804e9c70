#include "orbsnake/lift.hpp"

namespace orbsnake {

namespace {

struct Point {
  long x = 0, y = 0;
};

// Crossing sequence of an ordinary arc with pending pairs unfolded.
struct Unfolded {
  std::vector<int> cross;
  std::vector<Turn> sides;
  std::vector<int> third;  // projection of the third side of each step triangle
  std::vector<int> order;  // > 0 when the step triangle closes a pending pair
};

Unfolded unfold(const CurveDescriptor& d, const Triangulation& t) {
  Unfolded u;
  for (std::size_t k = 0; k < d.word.size(); ++k) {
    const auto& tok = d.word[k];
    const Arc& arc = t.arc(tok.arc);
    u.cross.push_back(tok.arc);
    if (arc.kind == ArcKind::Pending) {
      if (tok.winding != 0) throw Error(ErrorKind::Input, "lift needs an ordinary arc: pending token winds");
      u.cross.push_back(tok.arc);
      u.sides.push_back(pending_base(d, t, k));
      u.third.push_back(tok.arc);
      u.order.push_back(arc.order);
    }
    if (k + 1 < d.word.size()) {
      u.sides.push_back(*tok.turn);
      u.third.push_back(*tok.glue);
      u.order.push_back(0);
    }
  }
  return u;
}

}  // namespace

LiftedPolygon build_lift(const CurveDescriptor& d, const Triangulation& t) {
  validate(d, t);
  if (d.kind != CurveKind::OrdinaryArc) throw Error(ErrorKind::Input, "lift is defined for ordinary arcs only");
  if (d.word.empty()) throw Error(ErrorKind::Input, "arc of the triangulation has no lift");
  if (d.ends.start_winding || d.ends.end_winding)
    throw Error(ErrorKind::Input, "lift needs an ordinary arc: endpoint winds");
  Unfolded u = unfold(d, t);
  const int n = static_cast<int>(u.cross.size());

  LiftedPolygon L;
  L.d = n;
  L.projection.assign(static_cast<std::size_t>(2 * n + 4), 0);
  L.ends.assign(static_cast<std::size_t>(n + 1), {0, 0});
  L.sides = u.sides;

  // Left of the lifted arc is the upper half plane; the arc runs from S at x = 0 to E at x = n + 1.
  std::vector<Point> pts{{0, 0}};
  auto add_vertex = [&](long x, long y) {
    pts.push_back({x, y});
    return static_cast<int>(pts.size()) - 1;
  };
  int top = add_vertex(1, 1), bottom = add_vertex(1, -1);
  L.ends[1] = {top, bottom};
  for (int j = 1; j < n; ++j) {
    if (u.sides[static_cast<std::size_t>(j - 1)] == Turn::Left) {
      L.shared.push_back(top);
      bottom = add_vertex(j + 1, -1);
    } else {
      L.shared.push_back(bottom);
      top = add_vertex(j + 1, 1);
    }
    L.ends[static_cast<std::size_t>(j + 1)] = {top, bottom};
  }
  const int E = add_vertex(n + 1, 0);

  std::map<std::pair<int, int>, int> edge_id;
  int next_boundary = n + 1;
  auto key = [](int p, int q) { return std::make_pair(std::min(p, q), std::max(p, q)); };
  for (int j = 1; j <= n; ++j) edge_id[key(L.ends[j][0], L.ends[j][1])] = j;
  auto boundary = [&](int p, int q, int proj) {
    auto [it, fresh] = edge_id.emplace(key(p, q), next_boundary);
    if (fresh) {
      L.projection[static_cast<std::size_t>(next_boundary)] = proj;
      ++next_boundary;
    }
    return it->second;
  };

  std::vector<std::array<int, 3>> tris;
  // Sides of the triangle PQR listed clockwise.
  auto clockwise_sides = [&](int P, int Q, int R) {
    const Point& p = pts[P];
    const Point& q = pts[Q];
    const Point& r = pts[R];
    long cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    if (cross > 0) std::swap(Q, R);
    return std::array<int, 3>{edge_id.at(key(P, Q)), edge_id.at(key(Q, R)), edge_id.at(key(R, P))};
  };
  // Rotation of a clockwise side list that ends with the given side.
  auto ending_with = [](std::array<int, 3> s, int last) {
    while (s[2] != last) s = {s[2], s[0], s[1]};
    return s;
  };

  {
    auto [tp, bt] = L.ends[1];
    boundary(0, tp, 0);
    boundary(0, bt, 0);
    auto s = ending_with(clockwise_sides(0, tp, bt), 1);
    L.projection[static_cast<std::size_t>(s[0])] = *d.ends.a;
    L.projection[static_cast<std::size_t>(s[1])] = *d.ends.b;
    tris.push_back(s);
  }
  for (int j = 1; j < n; ++j) {
    auto prev = L.ends[static_cast<std::size_t>(j)];
    auto cur = L.ends[static_cast<std::size_t>(j + 1)];
    const std::size_t sj = static_cast<std::size_t>(j - 1);
    const bool top_shared = u.sides[sj] == Turn::Left;
    int p = top_shared ? prev[1] : prev[0], q = top_shared ? cur[1] : cur[0];
    int e = boundary(p, q, u.third[sj]);
    if (u.order[sj] > 0) L.annotated[e] = u.order[sj];
    tris.push_back(clockwise_sides(top_shared ? cur[0] : cur[1], p, q));
  }
  {
    auto [tp, bt] = L.ends[static_cast<std::size_t>(n)];
    boundary(tp, E, 0);
    boundary(bt, E, 0);
    auto s = ending_with(clockwise_sides(tp, bt, E), n);
    L.projection[static_cast<std::size_t>(s[0])] = *d.ends.w;
    L.projection[static_cast<std::size_t>(s[1])] = *d.ends.z;
    tris.push_back(s);
  }
  for (int j = 1; j <= n; ++j) L.projection[static_cast<std::size_t>(j)] = u.cross[static_cast<std::size_t>(j - 1)];

  std::vector<Arc> arcs;
  for (int id = 1; id < next_boundary; ++id) {
    Arc a{id, id <= n ? ArcKind::Standard : ArcKind::Boundary, 0, ""};
    arcs.push_back(a);
  }
  L.polygon = Triangulation(std::move(arcs), std::move(tris));

  CurveDescriptor& g = L.lifted_arc;
  g.kind = CurveKind::OrdinaryArc;
  for (int j = 1; j <= n; ++j) {
    CrossingToken tok;
    tok.arc = j;
    if (j < n) {
      for (int ti : L.polygon.triangles_with(j, j + 1))
        for (int s : L.polygon.triangles()[static_cast<std::size_t>(ti)])
          if (s != j && s != j + 1) tok.glue = s;
      tok.turn = L.polygon.turn(j, j + 1, *tok.glue);
      if (!tok.turn || *tok.turn != u.sides[static_cast<std::size_t>(j - 1)])
        throw Error(ErrorKind::Internal, "lifted turn disagrees at step " + std::to_string(j));
    }
    g.word.push_back(tok);
  }
  auto first = ending_with(L.polygon.triangles().front(), 1);
  auto last = ending_with(L.polygon.triangles().back(), n);
  g.ends.a = first[0], g.ends.b = first[1], g.ends.w = last[0], g.ends.z = last[1];
  validate(g, L.polygon);
  return L;
}

LaurentPoly phi_specialize(const LaurentPoly& poly, const LiftedPolygon& lift) {
  const int count = static_cast<int>(lift.projection.size()) - 1;
  return poly.substitute([&](Var v) {
    if (v.id < 1 || v.id > count || (v.is_y && v.id > lift.d))
      throw Error(ErrorKind::Input, "unknown variable " + v.str() + " in lifted polygon");
    int tau = lift.projection[static_cast<std::size_t>(v.id)];
    if (v.is_y) return LaurentPoly::y(tau);
    auto it = lift.annotated.find(v.id);
    if (it != lift.annotated.end()) return LaurentPoly(CoefPoly::lambda(it->second)) * LaurentPoly::x(tau);
    return LaurentPoly::x(tau);
  });
}

bool same_shape(const SnakeGraph& lifted, const SnakeGraph& direct, const LiftedPolygon& lift) {
  if (lifted.chain.n() != direct.chain.n()) return false;
  const auto& a = lifted.chain.labels();
  const auto& b = direct.chain.labels();
  for (int j = 1; j < a.n; ++j) {
    if (a.lj[j].is_zero() != b.lj[j].is_zero() || a.rj[j].is_zero() != b.rj[j].is_zero()) return false;
    bool match = a.aj[j].is_zero() == b.aj[j].is_zero() && a.bj[j].is_zero() == b.bj[j].is_zero();
    if (match) continue;
    // An order-2 pending pair: the lifted glue edge specialises to L2 = 0.
    auto it = lift.annotated.find(*lift.lifted_arc.word[static_cast<std::size_t>(j - 1)].glue);
    if (it == lift.annotated.end() || it->second != 2 || !b.aj[j].is_zero() || !b.bj[j].is_zero()) return false;
  }
  return true;
}

bool verify_lift(const CurveDescriptor& d, const Triangulation& t) {
  if (d.kind == CurveKind::OrdinaryArc && d.arc) return cluster_expansion(d, t) == LaurentPoly::x(*d.arc);
  LiftedPolygon L = build_lift(d, t);
  SnakeGraph lifted = build_snake_graph(L.lifted_arc, L.polygon);
  SnakeGraph direct = build_snake_graph(d, t);
  if (!same_shape(lifted, direct, L)) return false;
  return phi_specialize(expansion_of(lifted), L) == expansion_of(direct);
}

}  // namespace orbsnake
