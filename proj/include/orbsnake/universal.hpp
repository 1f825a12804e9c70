#pragma once

#include <array>

#include "orbsnake/chain.hpp"

namespace orbsnake {

enum class Glue { None, AZ, BW };

ChainGraph build_ug(const UniversalLabels& labels);

// Parity-dependent step matrix m_j.
Mat2 step_matrix_m(const UniversalLabels& u, int j);
// MG_n = m_{n-1} ... m_1.
Mat2 mg_matrix(const UniversalLabels& u);

struct PartitionedSums {
  LaurentPoly A, B, C, D;
};

// Matching sums over S_A, S_B, S_C, S_D divided by their denominators.
PartitionedSums partitioned_sums(const ChainGraph& g);

// Sum of x(P)h(P) over perfect matchings (Glue::None) or over cut-graph matchings using a glued edge,
// divided once by the glue label (Glue::AZ, Glue::BW).
LaurentPoly matching_sum(const ChainGraph& g, Glue glue);

// The same quantities from transfer matrices: x_{i1}...x_{in} times ur or tr of the boundary sandwich.
LaurentPoly weighted_sum_via_matrices(const UniversalLabels& u, Glue glue);

// Band specialisations of generic labels with a fresh glue variable c.
UniversalLabels band_labels(const UniversalLabels& u, Glue glue, const LaurentPoly& c);

// The boundary matrix printed for the b-w glue, kept for comparison in tests.
Mat2 printed_bw_boundary(const UniversalLabels& u);

LaurentPoly tile_product(const UniversalLabels& u, int from, int to);

}  // namespace orbsnake
