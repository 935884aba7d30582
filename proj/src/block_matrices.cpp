#include "dpro/block_matrices.hpp"

namespace dpro {

BlockMatrices assemble_block_matrices(const AttributeGrid& grid) {
  const int kI = grid.total_segments();
  const int kM = grid.attribute_count();

  BlockMatrices b;
  b.slope_diff = Matrix::Zero(kI - kM, kI);
  b.drop_last = Matrix::Zero(kI - 1, kI);
  b.seg_scale = Matrix::Zero(kI, kI);
  b.seg_offset = Matrix::Zero(kI, kI);
  b.prefix_sum = Matrix::Zero(kI, kI);
  b.upper_breaks = Matrix::Zero(kI, kM);
  b.block_ones = Matrix::Zero(kI, kM);
  b.lower_edge = Matrix::Zero(kI, kI);
  b.upper_edge = Matrix::Zero(kI, kI);

  b.drop_last.leftCols(kI - 1).setIdentity();

  int slope_row = 0;
  for (int m = 0; m < kM; ++m) {
    const int off = grid.block_offset(m);
    const int n = grid.segment_count(m);
    for (int i = 1; i <= n; ++i) {
      const int k = off + i - 1;
      const double w = grid.segment_width(m, i);
      b.seg_scale(k, k) = 1.0 / w;
      b.seg_offset(k, k) = -grid.breakpoint(m, i - 1) / w;
      for (int j = i + 1; j <= n; ++j) b.seg_offset(k, off + j - 1) = 1.0;
      for (int j = 1; j <= i; ++j) b.prefix_sum(k, off + j - 1) = 1.0;
      b.upper_breaks(k, m) = grid.breakpoint(m, i);
      b.block_ones(k, m) = 1.0;
      b.lower_edge(k, k) = grid.breakpoint(m, i - 1);
      b.upper_edge(k, k) = grid.breakpoint(m, i);
      if (i < n) {
        b.slope_diff(slope_row, k) = 1.0 / w;
        b.slope_diff(slope_row, k + 1) = -1.0 / grid.segment_width(m, i + 1);
        ++slope_row;
      }
    }
  }
  return b;
}

}  // namespace dpro
