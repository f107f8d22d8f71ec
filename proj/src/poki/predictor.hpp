#pragma once

#include <span>
#include <vector>

#include "poki/dataset.hpp"
#include "poki/metric.hpp"

namespace poki {

/// Kinky Inference rule: dataset + pseudo-metric + fixed parameter vector.
/// Immutable after construction; concurrent queries are safe.
struct Predictor {
  Dataset data;
  ParamMetric metric;
  std::vector<double> theta;
};

Predictor make_predictor(Dataset data, ParamMetric metric, std::vector<double> theta);

/// Tightest upper envelope: min_i ( f_i + d(x, s_i; theta) ).
double ceiling(const Predictor& p, std::span<const double> x);

/// Tightest lower envelope: max_i ( f_i - d(x, s_i; theta) ).
double floor(const Predictor& p, std::span<const double> x);

/// Midpoint of ceiling and floor.
double predict(const Predictor& p, std::span<const double> x);

/// max(0, floor - ceiling); positive only when the data is inconsistent
/// with the assumed metric parameters. Diagnostic for tests.
double consistency_gap(const Predictor& p, std::span<const double> x);

/// Elementwise predict over the rows of a row-major matrix.
std::vector<double> predict_batch(const Predictor& p, std::span<const double> xs,
                                  std::size_t rows, std::size_t dim);

}  // namespace poki
