#include <doctest.h>

#include "dpro/linalg.hpp"
#include "dpro/rng.hpp"
#include "dpro/sample_set.hpp"

using namespace dpro;

TEST_CASE("rng streams are deterministic and substreams independent") {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  Rng s1 = Rng::substream(42, 1);
  Rng s2 = Rng::substream(42, 2);
  CHECK(s1.next_u64() != s2.next_u64());
}

TEST_CASE("dirichlet draws live on the simplex") {
  Rng rng(5);
  Vector conc = Vector::Constant(6, 0.5);
  for (int i = 0; i < 200; ++i) {
    Vector d = rng.dirichlet(conc);
    CHECK(d.minCoeff() >= 0.0);
    CHECK(d.sum() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("gamma sampler matches moments roughly") {
  Rng rng(9);
  const double shape = 2.5;
  double sum = 0.0;
  double sq = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double g = rng.gamma(shape);
    sum += g;
    sq += g * g;
  }
  const double mean = sum / n;
  const double var = sq / n - mean * mean;
  CHECK(mean == doctest::Approx(shape).epsilon(0.02));
  CHECK(var == doctest::Approx(shape).epsilon(0.05));
}

TEST_CASE("symmetric root factors and inverts") {
  Rng rng(3);
  for (int rep = 0; rep < 50; ++rep) {
    const int n = 2 + rng.uniform_int(6);
    Matrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = rng.normal();
    Matrix s = a * a.transpose() + 0.1 * Matrix::Identity(n, n);
    SymmetricRoot r = symmetric_root(s, 0.0, 0.0);
    CHECK((r.root * r.root - s).lpNorm<Eigen::Infinity>() <= 1e-10 * s.norm());
    CHECK((r.root.transpose() * r.root - s).lpNorm<Eigen::Infinity>() <= 1e-10 * s.norm());
    CHECK((r.root * r.inverse - Matrix::Identity(n, n)).lpNorm<Eigen::Infinity>() <= 1e-8);
  }
}

TEST_CASE("singular matrix hits the ridge or degeneracy error") {
  Matrix s = Matrix::Zero(3, 3);
  CHECK_THROWS_AS(symmetric_root(s, 0.0, 0.0), DegeneracyError);
  Matrix rank1 = Vector::Ones(3) * Vector::Ones(3).transpose();
  SymmetricRoot r = symmetric_root(rank1, 1e-6, 1e-2);
  CHECK(r.ridge > 0.0);
}

TEST_CASE("simplex projection is idempotent and distance minimizing") {
  Rng rng(21);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 2 + rng.uniform_int(8);
    Vector v(n);
    for (int i = 0; i < n; ++i) v[i] = 3.0 * rng.normal();
    Vector p = project_to_simplex(v);
    CHECK(p.minCoeff() >= 0.0);
    CHECK(p.sum() == doctest::Approx(1.0).epsilon(1e-10));
    Vector pp = project_to_simplex(p);
    CHECK((pp - p).lpNorm<Eigen::Infinity>() <= 1e-12);
    // no random simplex point is closer than the projection
    const double d = (v - p).norm();
    for (int k = 0; k < 20; ++k) {
      Vector q = rng.dirichlet(Vector::Constant(n, 1.0));
      CHECK((v - q).norm() >= d - 1e-9);
    }
  }
}

TEST_CASE("nnls solves nonnegative least squares") {
  Rng rng(33);
  for (int rep = 0; rep < 100; ++rep) {
    const int m = 6 + rng.uniform_int(10);
    const int n = 2 + rng.uniform_int(5);
    Matrix a(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = rng.normal();
    Vector xtrue(n);
    for (int j = 0; j < n; ++j) xtrue[j] = std::max(0.0, rng.normal());
    Vector b = a * xtrue;
    Vector x = nnls(a, b);
    CHECK((a * x - b).norm() <= 1e-8 * (1.0 + b.norm()));
    CHECK(x.minCoeff() >= 0.0);
  }
}

TEST_CASE("sample csv round trip") {
  Rng rng(55);
  Matrix rows(5, 4);
  for (int i = 0; i < 5; ++i) rows.row(i) = rng.dirichlet(Vector::Constant(4, 1.0)).transpose();
  SampleSet s(rows);
  s.save_csv("sample_roundtrip_test.csv");
  SampleSet back = SampleSet::load_csv("sample_roundtrip_test.csv");
  CHECK((back.rows() - rows).lpNorm<Eigen::Infinity>() <= 1e-15);
}
