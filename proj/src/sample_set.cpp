#include "dpro/sample_set.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <vector>

#include "dpro/errors.hpp"

namespace dpro {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

SampleSet::SampleSet(Matrix rows) : rows_(std::move(rows)) {
  if (rows_.rows() < 2) throw InvariantError("sample set needs at least two rows");
  for (Eigen::Index i = 0; i < rows_.rows(); ++i) {
    std::string why;
    if (!is_valid_increment_vector(rows_.row(i).transpose(), &why)) {
      throw InvariantError("sample row " + std::to_string(i + 1) + ": " + why);
    }
  }
}

SampleSet SampleSet::dirichlet(const Vector& concentration, int n, std::uint64_t seed) {
  Matrix rows(n, concentration.size());
  for (int i = 0; i < n; ++i) {
    Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(i));
    rows.row(i) = rng.dirichlet(concentration).transpose();
  }
  return SampleSet(std::move(rows));
}

SampleSet SampleSet::load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open sample file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw DataError("empty sample file: " + path);
  const auto header = split_csv_line(line);
  const bool long_form = header.size() == 4 && header[1] == "m" && header[2] == "i";

  if (long_form) {
    // columns: sample,m,i,value
    std::map<int, std::map<std::pair<int, int>, double>> cells;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const auto f = split_csv_line(line);
      if (f.size() != 4) throw DataError("malformed long-form sample row: " + line);
      cells[std::stoi(f[0])][{std::stoi(f[1]), std::stoi(f[2])}] = std::stod(f[3]);
    }
    if (cells.empty()) throw DataError("no samples in " + path);
    const std::size_t dim = cells.begin()->second.size();
    Matrix rows(cells.size(), dim);
    int r = 0;
    for (const auto& [id, row] : cells) {
      if (row.size() != dim) throw DataError("ragged long-form sample file: " + path);
      int c = 0;
      for (const auto& [key, value] : row) rows(r, c++) = value;
      ++r;
    }
    return SampleSet(std::move(rows));
  }

  std::vector<std::vector<double>> data;
  auto parse_row = [&](const std::string& l) {
    const auto f = split_csv_line(l);
    std::vector<double> row;
    row.reserve(f.size());
    for (const auto& c : f) row.push_back(std::stod(c));
    data.push_back(std::move(row));
  };
  // header may itself be numeric (matrix file without labels)
  bool numeric_header = true;
  try {
    std::size_t pos = 0;
    std::stod(header[0], &pos);
    numeric_header = pos == header[0].size();
  } catch (const std::exception&) {
    numeric_header = false;
  }
  if (numeric_header) parse_row(line);
  while (std::getline(in, line)) {
    if (!line.empty()) parse_row(line);
  }
  if (data.empty()) throw DataError("no samples in " + path);
  Matrix rows(data.size(), data.front().size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (data[i].size() != data.front().size()) throw DataError("ragged sample file: " + path);
    for (std::size_t j = 0; j < data[i].size(); ++j) rows(i, j) = data[i][j];
  }
  return SampleSet(std::move(rows));
}

void SampleSet::save_csv(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write sample file: " + path);
  out << std::setprecision(17);
  for (int j = 0; j < dimension(); ++j) out << (j ? "," : "") << "v" << (j + 1);
  out << "\n";
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < dimension(); ++j) out << (j ? "," : "") << rows_(i, j);
    out << "\n";
  }
}

}  // namespace dpro
