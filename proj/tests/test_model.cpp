#include <doctest.h>

#include "dpro/block_matrices.hpp"
#include "dpro/grid.hpp"
#include "support/generators.hpp"

using namespace dpro;

namespace {

AttributeGrid half_grid() { return AttributeGrid({{0.0, 0.5, 1.0}}); }

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

}  // namespace

TEST_CASE("grid construction validates shape") {
  CHECK_THROWS_AS(AttributeGrid({{0.0, 1.0}}), ModelError);  // single segment in total
  CHECK_THROWS_AS(AttributeGrid({{0.0, 0.0, 1.0}}), ModelError);
  CHECK_THROWS_AS(AttributeGrid({{1.0, 0.5}, {0.0, 1.0}}), ModelError);
  CHECK_THROWS_AS(AttributeGrid({}), ModelError);
  AttributeGrid g({{0.0, 0.5, 1.0}, {-1.0, 2.0}});
  CHECK(g.total_segments() == 3);
  CHECK(g.block_offset(1) == 2);
}

TEST_CASE("utility at box corners") {
  Rng rng(7);
  for (int rep = 0; rep < 50; ++rep) {
    AttributeGrid g = testing::random_grid(rng);
    Vector v = testing::random_simplex(rng, g.total_segments());
    Vector a(g.attribute_count());
    Vector b(g.attribute_count());
    for (int m = 0; m < g.attribute_count(); ++m) {
      a[m] = g.lower(m);
      b[m] = g.upper(m);
    }
    CHECK(eval_utility(g, v, a) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(eval_utility(g, v, b) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(feature_map(g, a).norm() == 0.0);
    CHECK((feature_map(g, b) - Vector::Ones(g.total_segments())).lpNorm<Eigen::Infinity>() <=
          1e-12);
  }
}

TEST_CASE("hand-evaluated single attribute utility") {
  AttributeGrid g = half_grid();
  Vector v = vec({0.4, 0.6});
  CHECK(eval_utility(g, v, vec({0.25})) == doctest::Approx(0.2).epsilon(1e-14));
  Vector f = feature_map(g, vec({0.75}));
  CHECK(f[0] == doctest::Approx(1.0));
  CHECK(f[1] == doctest::Approx(0.5));
}

TEST_CASE("domain and invariant errors") {
  AttributeGrid g = half_grid();
  CHECK_THROWS_AS(eval_utility(g, vec({0.4, 0.6}), vec({1.5})), DomainError);
  CHECK_THROWS_AS(eval_utility(g, vec({0.7, 0.6}), vec({0.5})), InvariantError);
  CHECK_THROWS_AS(eval_utility(g, vec({-0.1, 1.1}), vec({0.5})), InvariantError);
  CHECK_THROWS_AS(feature_map(g, vec({-0.1})), DomainError);
}

TEST_CASE("block matrices on the worked example") {
  AttributeGrid g = half_grid();
  BlockMatrices b = assemble_block_matrices(g);
  CHECK(b.seg_scale(0, 0) == doctest::Approx(2.0));
  CHECK(b.seg_scale(1, 1) == doctest::Approx(2.0));
  CHECK(b.seg_scale(0, 1) == 0.0);
  CHECK(b.seg_offset(0, 0) == doctest::Approx(0.0));
  CHECK(b.seg_offset(0, 1) == doctest::Approx(1.0));
  CHECK(b.seg_offset(1, 0) == 0.0);
  CHECK(b.seg_offset(1, 1) == doctest::Approx(-1.0));
  CHECK(b.drop_last.rows() == 1);
  CHECK(b.drop_last(0, 0) == 1.0);
  CHECK(b.drop_last(0, 1) == 0.0);
}

TEST_CASE("block matrix dimensions and structure") {
  AttributeGrid g({{0.0, 1.0, 2.0}, {0.0, 3.0, 7.0}});
  BlockMatrices b = assemble_block_matrices(g);
  const int total = g.total_segments();
  CHECK(b.slope_diff.rows() == total - 2);
  CHECK(b.slope_diff.cols() == total);
  CHECK(b.drop_last.rows() == total - 1);
  CHECK(b.block_ones.rows() == total);
  CHECK(b.block_ones.cols() == 2);
  // stacked per-attribute ones
  CHECK(b.block_ones.col(0).sum() == 2.0);
  CHECK(b.block_ones.col(1).sum() == 2.0);
  CHECK(b.block_ones(0, 1) == 0.0);
  CHECK(b.block_ones(2, 0) == 0.0);
  // diagonal interpolation scale is positive
  CHECK(b.seg_scale.diagonal().minCoeff() > 0.0);
  // prefix-sum block lower triangular of ones
  CHECK(b.prefix_sum(1, 0) == 1.0);
  CHECK(b.prefix_sum(1, 1) == 1.0);
  CHECK(b.prefix_sum(0, 1) == 0.0);
  CHECK(b.prefix_sum(2, 1) == 0.0);
  CHECK(b.upper_breaks(0, 0) == 1.0);
  CHECK(b.upper_breaks(1, 0) == 2.0);
  CHECK(b.lower_edge(3, 3) == 3.0);
  CHECK(b.upper_edge(3, 3) == 7.0);
}

TEST_CASE("segment selection worked example and conventions") {
  AttributeGrid g = half_grid();
  BlockMatrices b = assemble_block_matrices(g);
  SegmentSelection sel = encode_segment_selection(g, vec({0.75}));
  CHECK(sel.z[0] == 0.0);
  CHECK(sel.z[1] == 1.0);
  CHECK(sel.y[1] == doctest::Approx(0.75));
  Vector lhs = b.seg_scale * sel.y + b.seg_offset * sel.z;
  CHECK(lhs[0] == doctest::Approx(1.0));
  CHECK(lhs[1] == doctest::Approx(0.5));

  // interior breakpoint resolves to the left-closed segment
  SegmentSelection tie = encode_segment_selection(g, vec({0.5}));
  CHECK(tie.z[0] == 1.0);
  CHECK(tie.z[1] == 0.0);

  // left endpoint maps to segment 1 carrying the endpoint value
  SegmentSelection left = encode_segment_selection(g, vec({0.0}));
  CHECK(left.z[0] == 1.0);
  CHECK(left.y[0] == 0.0);
}

TEST_CASE("representation and encoding identities on random instances") {
  Rng rng(2024);
  for (int rep = 0; rep < 10000; ++rep) {
    AttributeGrid g = testing::random_grid(rng);
    Vector v = testing::random_simplex(rng, g.total_segments());
    Vector x = testing::random_point_in_box(rng, g);
    Vector f = feature_map(g, x);
    CHECK(std::abs(eval_utility(g, v, x) - v.dot(f)) <= 1e-12);

    BlockMatrices b = assemble_block_matrices(g);
    SegmentSelection sel = encode_segment_selection(g, x);
    Vector rep_f = b.seg_scale * sel.y + b.seg_offset * sel.z;
    for (int k = 0; k < g.total_segments(); ++k) CHECK(rep_f[k] == f[k]);

    // selection satisfies the coupling rows
    CHECK((b.block_ones.transpose() * sel.z - Vector::Ones(g.attribute_count()))
              .lpNorm<Eigen::Infinity>() == 0.0);
    CHECK((b.block_ones.transpose() * sel.y - x).lpNorm<Eigen::Infinity>() <= 1e-15);
    CHECK(((b.lower_edge * sel.z - sel.y).array() <= 1e-12).all());
    CHECK(((b.upper_edge * sel.z - sel.y).array() >= -1e-12).all());
  }
}

TEST_CASE("monotonicity in x for simplex increments") {
  Rng rng(11);
  for (int rep = 0; rep < 300; ++rep) {
    AttributeGrid g = testing::random_grid(rng);
    Vector v = testing::random_simplex(rng, g.total_segments());
    Vector x = testing::random_point_in_box(rng, g);
    Vector x2 = x;
    for (int m = 0; m < g.attribute_count(); ++m) {
      x2[m] = std::min(x2[m] + rng.uniform() * (g.upper(m) - x2[m]), g.upper(m));
    }
    CHECK(eval_utility(g, v, x) <= eval_utility(g, v, x2) + 1e-12);
  }
}

TEST_CASE("concave increments give midpoint-concave marginals") {
  Rng rng(13);
  for (int rep = 0; rep < 300; ++rep) {
    AttributeGrid g = testing::random_grid(rng);
    Vector v = testing::random_concave_increments(rng, g);
    REQUIRE(satisfies_concavity(g, v));
    for (int m = 0; m < g.attribute_count(); ++m) {
      const double lo = g.lower(m);
      const double hi = g.upper(m);
      const double x1 = lo + rng.uniform() * (hi - lo);
      const double x2 = lo + rng.uniform() * (hi - lo);
      const Vector vm = v.segment(g.block_offset(m), g.segment_count(m));
      const double mid = eval_marginal(g, m, vm, 0.5 * (x1 + x2));
      const double avg = 0.5 * (eval_marginal(g, m, vm, x1) + eval_marginal(g, m, vm, x2));
      CHECK(mid >= avg - 1e-12);
    }
  }
}

TEST_CASE("feature map components stay in range and nonincreasing per block") {
  Rng rng(17);
  for (int rep = 0; rep < 500; ++rep) {
    AttributeGrid g = testing::random_grid(rng);
    Vector f = feature_map(g, testing::random_point_in_box(rng, g));
    for (int m = 0; m < g.attribute_count(); ++m) {
      const int off = g.block_offset(m);
      for (int i = 0; i < g.segment_count(m); ++i) {
        CHECK(f[off + i] >= -1e-12);
        CHECK(f[off + i] <= 1.0 + 1e-12);
        if (i > 0) CHECK(f[off + i] <= f[off + i - 1] + 1e-12);
      }
    }
  }
}
