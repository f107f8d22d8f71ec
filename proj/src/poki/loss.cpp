#include "poki/loss.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace poki {

LossContext make_loss_context(Dataset cond, Dataset eval, ParamMetric metric) {
  validate(cond);
  validate(eval);
  if (cond.dim != eval.dim) {
    throw std::invalid_argument("loss context: conditioning/evaluation dimension mismatch");
  }
  return LossContext{std::move(cond), std::move(eval), metric};
}

double empirical_error(const Predictor& pred, const TruthFn& truth,
                       std::span<const double> xs, std::size_t rows, std::size_t dim) {
  if (rows == 0) throw std::invalid_argument("empirical_error: empty sample");
  if (xs.size() != rows * dim) throw std::invalid_argument("empirical_error: shape mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < rows; ++i) {
    const auto x = xs.subspan(i * dim, dim);
    sum += std::abs(predict(pred, x) - truth(x));
  }
  return sum / static_cast<double>(rows);
}

double sample_error(const Predictor& pred, const Dataset& test) {
  validate(test);
  double sum = 0.0;
  for (std::size_t i = 0; i < test.rows(); ++i) {
    sum += std::abs(predict(pred, test.input(i)) - test.outputs[i]);
  }
  return sum / static_cast<double>(test.rows());
}

double poki_loss(const LossContext& ctx, std::span<const double> theta) {
  if (theta.size() != ctx.metric.theta_dim) {
    throw std::invalid_argument("poki_loss: theta dimension mismatch");
  }
  const Predictor p = make_predictor(ctx.cond, ctx.metric,
                                     std::vector<double>(theta.begin(), theta.end()));
  return sample_error(p, ctx.eval);
}

namespace {

double pairwise_bound_max(const LossContext& ctx) {
  // max over all pairs drawn from cond + eval of the per-pair theta bound
  std::vector<std::span<const double>> points;
  points.reserve(ctx.cond.rows() + ctx.eval.rows());
  for (std::size_t i = 0; i < ctx.cond.rows(); ++i) points.push_back(ctx.cond.input(i));
  for (std::size_t i = 0; i < ctx.eval.rows(); ++i) points.push_back(ctx.eval.input(i));
  double b = 0.0;
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (std::size_t k = j + 1; k < points.size(); ++k) {
      b = std::max(b, theta_lipschitz_bound(ctx.metric, points[j], points[k]));
    }
  }
  return b;
}

}  // namespace

double loss_lipschitz_bound(const LossContext& ctx) { return pairwise_bound_max(ctx); }

double per_query_loss_lipschitz_bound(const LossContext& ctx) {
  double b = 0.0;
  for (std::size_t i = 0; i < ctx.eval.rows(); ++i) {
    double bi = 0.0;
    for (std::size_t k = 0; k < ctx.cond.rows(); ++k) {
      bi = std::max(bi, theta_lipschitz_bound(ctx.metric, ctx.eval.input(i), ctx.cond.input(k)));
    }
    b = std::max(b, bi);
  }
  return b;
}

}  // namespace poki
