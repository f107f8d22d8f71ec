#include "poki/baselines.hpp"

#include <Eigen/Dense>
#include <stdexcept>

#include "poki/tuning.hpp"

namespace poki {

LinearModel fit_linear(const Dataset& data) {
  validate(data);
  const auto n = static_cast<Eigen::Index>(data.rows());
  const auto d = static_cast<Eigen::Index>(data.dim);
  Eigen::MatrixXd design(n, d + 1);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto x = data.input(static_cast<std::size_t>(i));
    for (Eigen::Index j = 0; j < d; ++j) design(i, j) = x[static_cast<std::size_t>(j)];
    design(i, d) = 1.0;
    y(i) = data.outputs[static_cast<std::size_t>(i)];
  }
  // complete orthogonal decomposition gives the minimum-norm least-squares
  // solution on rank-deficient designs
  const Eigen::VectorXd beta = design.completeOrthogonalDecomposition().solve(y);
  LinearModel model;
  model.weights.assign(beta.data(), beta.data() + d);
  model.intercept = beta(d);
  return model;
}

double predict_linear(const LinearModel& model, std::span<const double> x) {
  if (x.size() != model.weights.size()) {
    throw std::invalid_argument("predict_linear: dimension mismatch");
  }
  double v = model.intercept;
  for (std::size_t i = 0; i < x.size(); ++i) v += model.weights[i] * x[i];
  return v;
}

Predictor lacki(const Dataset& data) {
  const double theta = strongin_estimate(data);
  return make_predictor(data, make_metric(MetricVariant::ScaledNorm, data.dim), {theta});
}

}  // namespace poki
