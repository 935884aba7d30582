#include "dpro/rng.hpp"

#include <cmath>

namespace dpro {

std::uint64_t Rng::mix(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

int Rng::uniform_int(int n) {
  // rejection sampling to stay unbiased
  const std::uint64_t bound = UINT64_MAX - UINT64_MAX % static_cast<std::uint64_t>(n);
  std::uint64_t x;
  do {
    x = gen_();
  } while (x >= bound);
  return static_cast<int>(x % static_cast<std::uint64_t>(n));
}

double Rng::normal() {
  // Box-Muller, one value per call
  double u1;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

double Rng::gamma(double shape) {
  if (shape < 1.0) {
    const double u = std::max(uniform(), 1e-300);
    return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

Vector Rng::dirichlet(const Vector& concentration) {
  Vector g(concentration.size());
  for (Eigen::Index i = 0; i < g.size(); ++i) g[i] = std::max(gamma(concentration[i]), 1e-300);
  return g / g.sum();
}

Vector Rng::unit_direction(int dim) {
  Vector u(dim);
  double norm2;
  do {
    for (int i = 0; i < dim; ++i) u[i] = normal();
    norm2 = u.squaredNorm();
  } while (norm2 < 1e-24);
  return u / std::sqrt(norm2);
}

}  // namespace dpro
