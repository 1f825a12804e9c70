#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "orbsnake/ring.hpp"

namespace orbsnake {

inline constexpr int kSchemaVersion = 1;

enum class ArcKind { Standard, Pending, Boundary };

struct Arc {
  int id = 0;
  ArcKind kind = ArcKind::Standard;
  int order = 0;  // pending arcs only
  std::string name;

  bool internal() const { return kind != ArcKind::Boundary; }
};

enum class Turn { Left, Right };

inline Turn opposite(Turn t) { return t == Turn::Left ? Turn::Right : Turn::Left; }

class Triangulation {
 public:
  Triangulation() = default;
  Triangulation(std::vector<Arc> arcs, std::vector<std::array<int, 3>> triangles);

  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }
  bool has(int id) const;
  const Arc& arc(int id) const;
  std::vector<int> internal_ids() const;

  // Indices of triangles in which the given arcs appear as distinct sides.
  std::vector<int> triangles_with(int s, int t) const;
  // Turn when crossing s then t inside the triangle whose third side is c.
  std::optional<Turn> turn(int s, int t, int c) const;
  // True if (a, b, t) is a clockwise triangle.
  bool clockwise(int a, int b, int t) const;
  // For a pending arc: the two other sides of its triangle.
  std::pair<int, int> enclosing_sides(int rho) const;

 private:
  std::vector<Arc> arcs_;
  std::vector<std::array<int, 3>> triangles_;
};

struct CrossingToken {
  int arc = 0;
  std::optional<Turn> turn;  // transition to the next token
  std::optional<int> glue;
  int winding = 0;  // pending pairs only
  std::optional<int> alpha, beta;
  std::optional<Turn> base;  // pending pairs only; derived when absent
};

enum class CurveKind { OrdinaryArc, GeneralizedArc, ClosedCurve, ContractibleLoop, OrbifoldLoop, Kinked };

struct Endpoints {
  std::optional<int> a, b, w, z;
  int start_winding = 0;  // >0: the curve starts at the base of its first (pending) arc
  int end_winding = 0;
};

struct CurveDescriptor {
  CurveKind kind = CurveKind::OrdinaryArc;
  std::vector<CrossingToken> word;
  Endpoints ends;
  std::optional<int> arc;  // an arc of the triangulation itself (empty word)
  int order = 0;           // orbifold loops
  int self_intersections = 0;
  int kinks = 0;
  std::shared_ptr<CurveDescriptor> inner;  // kinked curves

  bool open() const { return kind == CurveKind::OrdinaryArc || kind == CurveKind::GeneralizedArc; }
};

// Throws Error(ErrorKind::Input) with a diagnostic on the first violation found.
void validate(const CurveDescriptor& d, const Triangulation& t);

// Base side of the pending token at position k, after validation.
Turn pending_base(const CurveDescriptor& d, const Triangulation& t, std::size_t k);

struct ExtendedBMatrix {
  int n = 0;
  std::vector<std::vector<int>> rows;  // (n + m) x n
  std::vector<bool> pending;

  bool operator==(const ExtendedBMatrix& o) const {
    return n == o.n && rows == o.rows && pending == o.pending;
  }
};

ExtendedBMatrix principal_extend(const std::vector<std::vector<int>>& b, const std::vector<bool>& pending);
ExtendedBMatrix generalized_mutate(const ExtendedBMatrix& b, int k);  // k is 1-based

nlohmann::json to_json(const Triangulation& t);
Triangulation triangulation_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CurveDescriptor& d);
CurveDescriptor curve_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ExtendedBMatrix& b);
ExtendedBMatrix bmatrix_from_json(const nlohmann::json& j);

std::string kind_name(CurveKind k);

struct CurveFile {
  Triangulation triangulation;
  CurveDescriptor curve;
};
// A curve JSON file with its triangulation, given inline as "triangulation" or by a "triangulation_file" path
// relative to the curve file; fallback is used when neither is present.
CurveFile load_curve_file(const std::string& path, const std::string& fallback = "");

}  // namespace orbsnake
