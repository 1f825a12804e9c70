#pragma once

#include <string>
#include <vector>

#include "orbsnake/ring.hpp"

namespace orbsnake {

// Labels of the universal chain with n tiles. Index 0 of the per-step vectors is unused.
struct UniversalLabels {
  int n = 1;
  LaurentPoly a, b, w, z;
  std::vector<LaurentPoly> aj, bj, lj, rj;  // steps 1..n-1
  std::vector<LaurentPoly> i;               // tile markers 1..n (monomials)
  std::vector<LaurentPoly> y;               // tile y-variables 1..n

  explicit UniversalLabels(int n_ = 1);
  static UniversalLabels generic(int n);
};

enum class Slot { A, B, Wp, Zp, Aj, Bj, Lj, Rj };

struct Edge {
  Slot slot;
  int j = 0;
  int u = 0, v = 0;  // vertex ids: L_k = 2k, R_k = 2k + 1
  LaurentPoly label;
  std::string name() const;
};

using Matching = std::vector<int>;  // sorted edge indices

class ChainGraph {
 public:
  // Steps with a_j = b_j = 0 only arise from order-2 pending pairs and are rejected unless allowed.
  explicit ChainGraph(UniversalLabels labels, bool allow_degenerate = false);

  int n() const { return labels_.n; }
  int vertex_count() const { return 2 * (labels_.n + 1); }
  const UniversalLabels& labels() const { return labels_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int find(Slot s, int j = 0) const;  // -1 when the edge is absent
  // Slots carrying the w and z labels (w' = w, z' = z iff n is even).
  Slot w_slot() const { return labels_.n % 2 == 0 ? Slot::Wp : Slot::Zp; }
  Slot z_slot() const { return labels_.n % 2 == 0 ? Slot::Zp : Slot::Wp; }
  bool uses(const Matching& m, Slot s, int j = 0) const;

  Matching minimal() const;
  std::vector<Matching> matchings_dp() const;
  std::vector<Matching> matchings_bfs() const;
  // Single-tile twists available from m: (tile, resulting matching). A step with a_j = b_j = 0 joins
  // tiles j and j + 1 into one hexagonal twist reported at tile j.
  std::vector<std::pair<int, Matching>> twists(const Matching& m) const;

  std::vector<int> enclosed_tiles(const Matching& m) const;
  LaurentPoly weight(const Matching& m) const;
  LaurentPoly height(const Matching& m) const;

 private:
  UniversalLabels labels_;
  std::vector<Edge> edges_;
};

bool is_perfect(const ChainGraph& g, const Matching& m);

}  // namespace orbsnake
