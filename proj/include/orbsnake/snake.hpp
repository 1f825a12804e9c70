#pragma once

#include <string>
#include <vector>

#include "orbsnake/orbifold.hpp"
#include "orbsnake/universal.hpp"

namespace orbsnake {

struct Tile {
  bool hexagon = false;
  int arc = 0;
  int order = 0;    // hexagons and Chebyshev endpoint tiles
  int winding = 0;  // hexagons: l; endpoint tiles: the endpoint winding
  int first = 1;    // first chain tile covered (hexagons cover first and first + 1)
};

struct SnakeGraph {
  ChainGraph chain;
  std::vector<int> crossings;  // arc id of each chain tile
  std::vector<Tile> tiles;
  bool band = false;
  Glue glue = Glue::None;
  int glue_arc = 0;
  LaurentPoly cross;  // crossing monomial
  // Matchings in canonical order: perfect matchings, or good matchings of a band graph.
  std::vector<Matching> matchings;
};

// Chain labels for a validated open or closed descriptor with a nonempty word.
struct ChainSpec {
  UniversalLabels labels;
  std::vector<int> crossings;
  std::vector<Tile> tiles;
  Glue glue = Glue::None;
  int glue_arc = 0;
};
ChainSpec chain_spec(const CurveDescriptor& d, const Triangulation& t);

SnakeGraph build_snake_graph(const CurveDescriptor& d, const Triangulation& t);

bool is_good(const SnakeGraph& g, const Matching& m);

// DP and twist-closure results; throws Error(ErrorKind::Internal) when they disagree.
std::vector<Matching> enumerate_matchings(const SnakeGraph& g);

std::pair<Matching, Matching> minimal_maximal(const SnakeGraph& g);

// Edges shared by two tiles: the glue edge of a square step, both rungs inside a hexagon.
std::vector<int> interior_edges(const SnakeGraph& g);

struct WeightHeight {
  LaurentPoly x, y;
};
WeightHeight weight_height(const SnakeGraph& g, const Matching& m);

LaurentPoly expansion_of(const SnakeGraph& g);
LaurentPoly cluster_expansion(const CurveDescriptor& d, const Triangulation& t);

struct PosetEdge {
  int from = 0, to = 0;  // indices into nodes
  LaurentPoly label;     // height ratio
};

struct MatchingPoset {
  std::vector<Matching> nodes;
  std::vector<LaurentPoly> heights;
  std::vector<int> rank;
  std::vector<PosetEdge> covers;
  int minimum = 0;
};

MatchingPoset matching_poset(const SnakeGraph& g);
std::string to_dot(const MatchingPoset& p);

std::string matching_str(const ChainGraph& g, const Matching& m);

}  // namespace orbsnake
