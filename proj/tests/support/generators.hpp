#pragma once

#include <vector>

#include "dpro/grid.hpp"
#include "dpro/rng.hpp"

namespace dpro::testing {

inline AttributeGrid random_grid(Rng& rng, int max_attrs = 4, int max_segments = 6) {
  const int m = 1 + rng.uniform_int(max_attrs);
  std::vector<std::vector<double>> bp(m);
  int total = 0;
  for (int a = 0; a < m; ++a) {
    int segs = 1 + rng.uniform_int(max_segments);
    if (a == m - 1 && total + segs < 2) segs = 2;
    const double lo = -2.0 + 4.0 * rng.uniform();
    double t = lo;
    bp[a].push_back(t);
    for (int i = 0; i < segs; ++i) {
      t += 0.05 + rng.uniform();
      bp[a].push_back(t);
    }
    total += segs;
  }
  return AttributeGrid(bp);
}

inline Vector random_simplex(Rng& rng, int dim) {
  return rng.dirichlet(Vector::Constant(dim, 1.0));
}

// increments with nonincreasing slopes inside every attribute block
inline Vector random_concave_increments(Rng& rng, const AttributeGrid& grid) {
  Vector v(grid.total_segments());
  for (int m = 0; m < grid.attribute_count(); ++m) {
    double slope = 0.5 + rng.uniform();
    for (int i = 1; i <= grid.segment_count(m); ++i) {
      v[grid.block_offset(m) + i - 1] = slope * grid.segment_width(m, i);
      slope *= 0.3 + 0.7 * rng.uniform();
    }
  }
  return v / v.sum();
}

inline Vector random_point_in_box(Rng& rng, const AttributeGrid& grid) {
  Vector x(grid.attribute_count());
  for (int m = 0; m < grid.attribute_count(); ++m) {
    x[m] = grid.lower(m) + rng.uniform() * (grid.upper(m) - grid.lower(m));
  }
  return x;
}

}  // namespace dpro::testing
