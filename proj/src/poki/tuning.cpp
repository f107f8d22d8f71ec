#include "poki/tuning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "poki/errors.hpp"

namespace poki {

std::pair<Dataset, Dataset> split(const Dataset& data, double ratio, std::uint64_t seed) {
  return train_test_split(data, ratio, seed);
}

namespace {

double max_norm_diff(std::span<const double> x, std::span<const double> y) {
  double m = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

}  // namespace

double strongin_estimate(const Dataset& data) {
  validate(data);
  if (data.rows() < 2) throw std::invalid_argument("strongin_estimate: need at least two points");
  double est = 0.0;
  for (std::size_t i = 0; i < data.rows(); ++i) {
    for (std::size_t j = i + 1; j < data.rows(); ++j) {
      const double dx = max_norm_diff(data.input(i), data.input(j));
      const double dy = std::abs(data.outputs[i] - data.outputs[j]);
      if (dx == 0.0) {
        if (dy > 0.0) {
          throw estimate_undefined_error(
              "strongin_estimate: duplicate inputs with distinct outputs");
        }
        continue;
      }
      est = std::max(est, dy / dx);
    }
  }
  return est;
}

double strongin_estimate_noise_robust(const Dataset& data, double noise_bound) {
  validate(data);
  if (data.rows() < 2) throw std::invalid_argument("strongin_estimate: need at least two points");
  if (!(noise_bound >= 0.0)) throw std::invalid_argument("noise bound must be nonnegative");
  double est = 0.0;
  for (std::size_t i = 0; i < data.rows(); ++i) {
    for (std::size_t j = i + 1; j < data.rows(); ++j) {
      const double dx = max_norm_diff(data.input(i), data.input(j));
      if (dx == 0.0) continue;
      const double dy = std::abs(data.outputs[i] - data.outputs[j]) - 2.0 * noise_bound;
      est = std::max(est, dy / dx);
    }
  }
  return std::max(est, 0.0);
}

std::pair<std::vector<double>, std::vector<double>> default_theta_box(const Dataset& data,
                                                                      const ParamMetric& metric) {
  if (metric.variant == MetricVariant::PeriodicSine) {
    throw std::invalid_argument(
        "default_theta_box: periodic_sine needs a caller-supplied frequency range");
  }
  double hi;
  try {
    hi = 2.0 * strongin_estimate(data);
  } catch (const estimate_undefined_error&) {
    // duplicate inputs with distinct outputs: bound the slope by the output
    // range over the smallest positive input gap instead
    double min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < data.rows(); ++i) {
      for (std::size_t j = i + 1; j < data.rows(); ++j) {
        const double dx = max_norm_diff(data.input(i), data.input(j));
        if (dx > 0.0) min_gap = std::min(min_gap, dx);
      }
    }
    const auto [lo_it, hi_it] = std::minmax_element(data.outputs.begin(), data.outputs.end());
    if (!std::isfinite(min_gap)) {
      throw std::invalid_argument("default_theta_box: all inputs identical");
    }
    hi = (*hi_it - *lo_it) / min_gap;
  }
  if (hi <= 0.0) hi = 1.0;  // constant data: any slope interpolates, keep a nondegenerate box
  return {std::vector<double>(metric.theta_dim, 0.0), std::vector<double>(metric.theta_dim, hi)};
}

TrainOutcome train(const Dataset& data, const PokiConfig& cfg, const TraceFn& trace) {
  validate(data);
  if (data.rows() < 2) throw std::invalid_argument("train: need at least two points");
  const std::size_t k = cfg.metric.theta_dim;
  if (cfg.box_lo.size() != k || cfg.box_hi.size() != k) {
    throw std::invalid_argument("train: theta box does not match metric dimension");
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!(cfg.box_lo[i] >= 0.0) || !(cfg.box_lo[i] <= cfg.box_hi[i])) {
      throw std::invalid_argument("train: theta box must satisfy 0 <= lo <= hi");
    }
  }
  if (!(cfg.split_ratio > 0.0 && cfg.split_ratio < 1.0)) {
    throw std::invalid_argument("train: split ratio must be in (0,1)");
  }

  auto [cond, eval] = split(data, cfg.split_ratio, cfg.seed);
  const LossContext ctx = make_loss_context(std::move(cond), std::move(eval), cfg.metric);
  const HolderSpec spec{loss_lipschitz_bound(ctx), 1.0};

  OptResult opt = minimize([&ctx](std::span<const double> theta) { return poki_loss(ctx, theta); },
                           cfg.box_lo, cfg.box_hi, spec, cfg.budget, cfg.tol, trace);

  Predictor predictor = make_predictor(data, cfg.metric, opt.argmin);
  return TrainOutcome{std::move(predictor), std::move(opt)};
}

}  // namespace poki
