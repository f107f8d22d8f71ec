#include "poki/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "poki/errors.hpp"
#include "poki/rng.hpp"

namespace poki {

void Dataset::add(std::span<const double> x, double y) {
  if (x.size() != dim) throw std::invalid_argument("dataset: row dimension mismatch");
  inputs.insert(inputs.end(), x.begin(), x.end());
  outputs.push_back(y);
}

void validate(const Dataset& data) {
  if (data.dim == 0) throw std::invalid_argument("dataset: dimension must be positive");
  if (data.outputs.empty()) throw std::invalid_argument("dataset: empty");
  if (data.inputs.size() != data.outputs.size() * data.dim) {
    throw std::invalid_argument("dataset: inputs/outputs shape mismatch");
  }
  for (double v : data.inputs) {
    if (!std::isfinite(v)) throw std::invalid_argument("dataset: non-finite input");
  }
  for (double v : data.outputs) {
    if (!std::isfinite(v)) throw std::invalid_argument("dataset: non-finite output");
  }
}

namespace {

double draw_noise(const NoiseModel& noise, Rng& rng) {
  switch (noise.kind) {
    case NoiseModel::Kind::None: return 0.0;
    case NoiseModel::Kind::Gaussian: return rng.gaussian(noise.param);
    case NoiseModel::Kind::UniformSymmetric: return rng.uniform(-noise.param, noise.param);
  }
  throw std::logic_error("unreachable");
}

void check_noise(const NoiseModel& noise) {
  if (noise.param < 0.0) throw std::invalid_argument("noise parameter must be nonnegative");
}

}  // namespace

double target_artificial(std::span<const double> x) {
  return std::abs(-std::cos(2.0 * std::numbers::pi * x[0])) + x[0];
}

double target_periodic(double x) { return 2.0 + std::sin(4.0 * std::numbers::pi * x); }

double target_pendulum(std::span<const double> x) { return -9.81 * std::sin(x[0]); }

Dataset gen_artificial(std::size_t dim, std::size_t n, const NoiseModel& noise,
                       std::uint64_t seed) {
  if (dim == 0 || n == 0) throw std::invalid_argument("gen_artificial: dim and n must be positive");
  check_noise(noise);
  Rng in_rng(mix_seed(seed, 1));
  Rng noise_rng(mix_seed(noise.seed, 2));
  Dataset data;
  data.dim = dim;
  std::vector<double> x(dim);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& v : x) v = in_rng.uniform();
    data.add(x, target_artificial(x) + draw_noise(noise, noise_rng));
  }
  return data;
}

Dataset gen_periodic(std::size_t n, const NoiseModel& noise, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("gen_periodic: n must be positive");
  check_noise(noise);
  Rng in_rng(mix_seed(seed, 1));
  Rng noise_rng(mix_seed(noise.seed, 2));
  Dataset data;
  data.dim = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = in_rng.uniform();
    data.add({&x, 1}, target_periodic(x) + draw_noise(noise, noise_rng));
  }
  return data;
}

Dataset gen_pendulum(std::size_t n, const NoiseModel& noise, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("gen_pendulum: n must be positive");
  check_noise(noise);
  Rng in_rng(mix_seed(seed, 1));
  Rng noise_rng(mix_seed(noise.seed, 2));
  Dataset data;
  data.dim = 2;
  double x[2];
  for (std::size_t i = 0; i < n; ++i) {
    x[0] = in_rng.uniform(-std::numbers::pi, std::numbers::pi);
    x[1] = in_rng.uniform(-5.0, 5.0);
    data.add({x, 2}, target_pendulum({x, 2}) + draw_noise(noise, noise_rng));
  }
  return data;
}

Dataset sample_inputs_artificial(std::size_t dim, std::size_t n, std::uint64_t seed) {
  Rng rng(mix_seed(seed, 1));
  Dataset data;
  data.dim = dim;
  std::vector<double> x(dim);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& v : x) v = rng.uniform();
    data.add(x, 0.0);
  }
  return data;
}

Dataset sample_inputs_pendulum(std::size_t n, std::uint64_t seed) {
  Rng rng(mix_seed(seed, 1));
  Dataset data;
  data.dim = 2;
  double x[2];
  for (std::size_t i = 0; i < n; ++i) {
    x[0] = rng.uniform(-std::numbers::pi, std::numbers::pi);
    x[1] = rng.uniform(-5.0, 5.0);
    data.add({x, 2}, 0.0);
  }
  return data;
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

double parse_field(const std::string& field, std::size_t row, std::size_t col) {
  const char* first = field.data();
  const char* last = first + field.size();
  while (first != last && (*first == ' ' || *first == '\t')) ++first;
  while (last != first && (*(last - 1) == ' ' || *(last - 1) == '\t')) --last;
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw io_error("csv: non-numeric field at row " + std::to_string(row) + ", column " +
                   std::to_string(col));
  }
  return value;
}

}  // namespace

Dataset load_csv(const std::string& path, const std::vector<std::size_t>& input_columns,
                 std::size_t output_column, bool header) {
  if (input_columns.empty()) throw std::invalid_argument("load_csv: no input columns");
  std::ifstream in(path);
  if (!in) throw io_error("cannot open file: " + path);

  Dataset data;
  data.dim = input_columns.size();
  std::string line;
  std::size_t row = 0;
  std::vector<double> x(data.dim);
  while (std::getline(in, line)) {
    ++row;
    if (header && row == 1) continue;
    if (line.empty() || line == "\r") continue;
    const auto fields = split_fields(line);
    for (std::size_t col : input_columns) {
      if (col >= fields.size()) {
        throw io_error("csv: row " + std::to_string(row) + " has no column " + std::to_string(col));
      }
    }
    if (output_column >= fields.size()) {
      throw io_error("csv: row " + std::to_string(row) + " has no column " +
                     std::to_string(output_column));
    }
    for (std::size_t i = 0; i < input_columns.size(); ++i) {
      x[i] = parse_field(fields[input_columns[i]], row, input_columns[i]);
    }
    data.add(x, parse_field(fields[output_column], row, output_column));
  }
  if (data.rows() == 0) throw io_error("csv: no data rows in " + path);
  return data;
}

void save_csv(const Dataset& data, const std::string& path) {
  validate(data);
  std::ofstream out(path);
  if (!out) throw io_error("cannot write file: " + path);
  for (std::size_t i = 0; i < data.dim; ++i) out << 'x' << (i + 1) << ',';
  out << "y\n";
  std::ostringstream buf;
  buf.precision(17);
  for (std::size_t i = 0; i < data.rows(); ++i) {
    const auto x = data.input(i);
    for (double v : x) buf << v << ',';
    buf << data.outputs[i] << '\n';
  }
  out << buf.str();
  if (!out) throw io_error("write failed: " + path);
}

std::pair<Dataset, Dataset> train_test_split(const Dataset& data, double train_fraction,
                                             std::uint64_t seed) {
  validate(data);
  const std::size_t n = data.rows();
  if (n < 2) throw std::invalid_argument("split: need at least two points");
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw std::invalid_argument("split: fraction must be in (0,1)");
  }
  // round half up, clamped so both parts are nonempty
  auto k = static_cast<std::size_t>(std::floor(train_fraction * static_cast<double>(n) + 0.5));
  k = std::clamp<std::size_t>(k, 1, n - 1);

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  Rng rng(mix_seed(seed, 3));
  for (std::size_t i = n - 1; i > 0; --i) {
    std::swap(idx[i], idx[rng.index(i + 1)]);
  }

  Dataset train, test;
  train.dim = test.dim = data.dim;
  for (std::size_t i = 0; i < n; ++i) {
    auto& dst = i < k ? train : test;
    dst.add(data.input(idx[i]), data.outputs[idx[i]]);
  }
  return {std::move(train), std::move(test)};
}

}  // namespace poki
