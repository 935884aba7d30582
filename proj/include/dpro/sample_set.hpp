#pragma once

#include <string>

#include "dpro/grid.hpp"
#include "dpro/rng.hpp"

namespace dpro {

// An i.i.d. sample of increment vectors, one per row. Every row lives on the
// simplex; construction validates that.
class SampleSet {
 public:
  explicit SampleSet(Matrix rows);

  int size() const { return static_cast<int>(rows_.rows()); }
  int dimension() const { return static_cast<int>(rows_.cols()); }
  const Matrix& rows() const { return rows_; }
  Vector row(int i) const { return rows_.row(i).transpose(); }
  Vector mean() const { return rows_.colwise().mean().transpose(); }

  static SampleSet dirichlet(const Vector& concentration, int n, std::uint64_t seed);

  // Matrix CSV (one sample per row) or long CSV with columns
  // sample,m,i,value; the format is sniffed from the header.
  static SampleSet load_csv(const std::string& path);
  void save_csv(const std::string& path) const;

 private:
  Matrix rows_;
};

}  // namespace dpro
