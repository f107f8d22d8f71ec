#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace poki {

/// Finite sample of input vectors and scalar observed outputs.
struct Dataset {
  std::size_t dim = 0;
  std::vector<double> inputs;  // rows * dim, row-major
  std::vector<double> outputs;

  std::size_t rows() const { return outputs.size(); }
  std::span<const double> input(std::size_t i) const {
    return {inputs.data() + i * dim, dim};
  }
  void add(std::span<const double> x, double y);
};

/// Checks the Dataset invariants (nonempty, finite, consistent shape).
void validate(const Dataset& data);

struct NoiseModel {
  enum class Kind { None, Gaussian, UniformSymmetric };
  Kind kind = Kind::None;
  double param = 0.0;  // sd for Gaussian, halfwidth for UniformSymmetric
  std::uint64_t seed = 0;
};

// Ground-truth targets used by the synthetic generators.
double target_artificial(std::span<const double> x);  // |-cos(2 pi x1)| + x1 on [0,1]^d
double target_periodic(double x);                     // 2 + sin(4 pi x) on [0,1]
double target_pendulum(std::span<const double> x);    // -9.81 sin(x1), x = (angle, velocity)

Dataset gen_artificial(std::size_t dim, std::size_t n, const NoiseModel& noise,
                       std::uint64_t seed);
Dataset gen_periodic(std::size_t n, const NoiseModel& noise, std::uint64_t seed);
Dataset gen_pendulum(std::size_t n, const NoiseModel& noise, std::uint64_t seed);

// Uniform query-input samplers over each generator's input domain.
Dataset sample_inputs_artificial(std::size_t dim, std::size_t n, std::uint64_t seed);
Dataset sample_inputs_pendulum(std::size_t n, std::uint64_t seed);

/// Reads a comma-separated file; `input_columns` and `output_column` are
/// zero-based column indices. Rows with non-numeric fields are rejected with
/// a row-indexed error.
Dataset load_csv(const std::string& path, const std::vector<std::size_t>& input_columns,
                 std::size_t output_column, bool header);

/// Writes the dataset as CSV with header x1,...,xd,y.
void save_csv(const Dataset& data, const std::string& path);

/// Seeded random split into (train, test) with |train| = round(fraction * N),
/// round half up, clamped to [1, N-1]. Disjoint and exhaustive.
std::pair<Dataset, Dataset> train_test_split(const Dataset& data, double train_fraction,
                                             std::uint64_t seed);

}  // namespace poki
