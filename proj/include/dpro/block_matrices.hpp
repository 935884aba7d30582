#pragma once

#include "dpro/grid.hpp"

namespace dpro {

// Dense block matrices assembled from an attribute grid; they carry the
// whole linear algebra of the segment encoding and its dual forms.
// All blocks are laid out attribute by attribute with the grid's offsets.
struct BlockMatrices {
  Matrix slope_diff;    // (I-M) x I, rows 1/w_i, -1/w_{i+1}; v concave iff slope_diff*v >= 0
  Matrix drop_last;     // (I-1) x I selector of the first I-1 coordinates
  Matrix seg_scale;     // I x I diagonal of inverse segment widths
  Matrix seg_offset;    // I x I upper-triangular per block
  Matrix prefix_sum;    // I x I block lower-triangular of ones
  Matrix upper_breaks;  // I x M column of t_{m,1..I_m} per block
  Matrix block_ones;    // I x M block indicator (ones per attribute block)
  Matrix lower_edge;    // I x I diagonal of t_{m,i-1}
  Matrix upper_edge;    // I x I diagonal of t_{m,i}
};

BlockMatrices assemble_block_matrices(const AttributeGrid& grid);

}  // namespace dpro
