#include "poki/predictor.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace poki {

Predictor make_predictor(Dataset data, ParamMetric metric, std::vector<double> theta) {
  validate(data);
  if (theta.size() != metric.theta_dim) {
    throw std::invalid_argument("predictor: theta dimension does not match metric");
  }
  for (double t : theta) {
    if (!(t >= 0.0)) throw std::invalid_argument("predictor: theta must be nonnegative");
  }
  return Predictor{std::move(data), metric, std::move(theta)};
}

double ceiling(const Predictor& p, std::span<const double> x) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < p.data.rows(); ++i) {
    m = std::min(m, p.data.outputs[i] + eval_metric(p.metric, p.theta, x, p.data.input(i)));
  }
  return m;
}

double floor(const Predictor& p, std::span<const double> x) {
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < p.data.rows(); ++i) {
    m = std::max(m, p.data.outputs[i] - eval_metric(p.metric, p.theta, x, p.data.input(i)));
  }
  return m;
}

double predict(const Predictor& p, std::span<const double> x) {
  // single pass over the data; ceiling/floor share the metric evaluations
  double up = std::numeric_limits<double>::infinity();
  double lo = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < p.data.rows(); ++i) {
    const double d = eval_metric(p.metric, p.theta, x, p.data.input(i));
    up = std::min(up, p.data.outputs[i] + d);
    lo = std::max(lo, p.data.outputs[i] - d);
  }
  return 0.5 * up + 0.5 * lo;
}

double consistency_gap(const Predictor& p, std::span<const double> x) {
  return std::max(0.0, floor(p, x) - ceiling(p, x));
}

std::vector<double> predict_batch(const Predictor& p, std::span<const double> xs,
                                  std::size_t rows, std::size_t dim) {
  if (dim != p.data.dim) throw std::invalid_argument("predict_batch: dimension mismatch");
  if (xs.size() != rows * dim) throw std::invalid_argument("predict_batch: shape mismatch");
  std::vector<double> out(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    out[i] = predict(p, xs.subspan(i * dim, dim));
  }
  return out;
}

}  // namespace poki
