#pragma once

#include <cstdint>
#include <random>

#include "dpro/grid.hpp"

namespace dpro {

// Deterministic random source. All samplers are spelled out here instead of
// using std distributions so that streams are identical across platforms and
// standard libraries. Substreams are derived by counter-based mixing, which
// keeps parallel resampling reproducible regardless of scheduling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(mix(seed)) {}

  static Rng substream(std::uint64_t seed, std::uint64_t stream) {
    return Rng(mix(seed) ^ mix(stream * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL));
  }

  std::uint64_t next_u64() { return gen_(); }

  // uniform on [0, 1)
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // uniform integer in [0, n)
  int uniform_int(int n);

  double normal();

  // Marsaglia-Tsang for shape >= 1 with the usual boost below 1; unit scale.
  double gamma(double shape);

  Vector dirichlet(const Vector& concentration);

  // uniformly distributed unit vector
  Vector unit_direction(int dim);

 private:
  static std::uint64_t mix(std::uint64_t x);
  std::mt19937_64 gen_;
};

}  // namespace dpro
