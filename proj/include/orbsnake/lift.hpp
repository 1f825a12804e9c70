#pragma once

#include <array>
#include <map>
#include <vector>

#include "orbsnake/orbifold.hpp"
#include "orbsnake/snake.hpp"

namespace orbsnake {

// Triangulated (d+3)-gon covering the triangles crossed by an ordinary arc.
// Arc ids: 1..d internal (sigma_j crossed j-th), d+1..2d+3 boundary.
struct LiftedPolygon {
  int d = 0;
  Triangulation polygon;
  std::vector<int> projection;          // indexed by sigma id; entry 0 unused
  std::map<int, int> annotated;         // boundary sigma id -> order p, projected with factor L{p}
  std::vector<std::array<int, 2>> ends;  // polygon vertices of each sigma (index 0 unused)
  std::vector<int> shared;              // s_j: vertex shared by sigma_j and sigma_{j+1}, j = 1..d-1
  std::vector<Turn> sides;              // side of s_j relative to the lifted arc
  CurveDescriptor lifted_arc;
};

LiftedPolygon build_lift(const CurveDescriptor& d, const Triangulation& t);

// Substitution x_sigma -> x_pi(sigma) (times L{p} on annotated arcs), y_sigma -> y_pi(sigma).
LaurentPoly phi_specialize(const LaurentPoly& poly, const LiftedPolygon& lift);

// True when the lift's snake graph has the same tile count and glue slots as the direct one.
bool same_shape(const SnakeGraph& lifted, const SnakeGraph& direct, const LiftedPolygon& lift);

bool verify_lift(const CurveDescriptor& d, const Triangulation& t);

}  // namespace orbsnake
