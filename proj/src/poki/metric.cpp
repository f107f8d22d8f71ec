#include "poki/metric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace poki {

namespace {

void check_dims(const ParamMetric& metric, std::span<const double> x,
                std::span<const double> y) {
  if (x.size() != y.size() || x.empty()) {
    throw std::invalid_argument("metric: input dimension mismatch");
  }
  if (metric.variant == MetricVariant::PeriodicSine && x.size() != 1) {
    throw std::invalid_argument("periodic_sine metric requires scalar inputs");
  }
  if (metric.variant == MetricVariant::ArdMax && metric.theta_dim != x.size()) {
    throw std::invalid_argument("ard_max metric: theta_dim does not match input dimension");
  }
}

double max_norm_diff(std::span<const double> x, std::span<const double> y) {
  double m = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

}  // namespace

ParamMetric make_metric(MetricVariant variant, std::size_t input_dim) {
  if (input_dim == 0) throw std::invalid_argument("metric: input dimension must be positive");
  if (variant == MetricVariant::PeriodicSine && input_dim != 1) {
    throw std::invalid_argument("periodic_sine metric requires one-dimensional inputs");
  }
  return ParamMetric{variant, variant == MetricVariant::ArdMax ? input_dim : 1};
}

double eval_metric(const ParamMetric& metric, std::span<const double> theta,
                   std::span<const double> x, std::span<const double> y) {
  check_dims(metric, x, y);
  if (theta.size() != metric.theta_dim) {
    throw std::invalid_argument("metric: theta dimension mismatch");
  }
  for (double t : theta) {
    if (!(t >= 0.0)) throw std::invalid_argument("metric: theta components must be nonnegative");
  }
  switch (metric.variant) {
    case MetricVariant::ScaledNorm:
      return theta[0] * max_norm_diff(x, y);
    case MetricVariant::ArdMax: {
      double m = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        m = std::max(m, theta[i] * std::abs(x[i] - y[i]));
      }
      return m;
    }
    case MetricVariant::PeriodicSine:
      return std::abs(std::sin(std::numbers::pi * theta[0] * std::abs(x[0] - y[0])));
  }
  throw std::logic_error("unreachable");
}

double theta_lipschitz_bound(const ParamMetric& metric, std::span<const double> x,
                             std::span<const double> y) {
  check_dims(metric, x, y);
  switch (metric.variant) {
    case MetricVariant::ScaledNorm:
    case MetricVariant::ArdMax:
      return max_norm_diff(x, y);
    case MetricVariant::PeriodicSine:
      return std::numbers::pi * std::abs(x[0] - y[0]);
  }
  throw std::logic_error("unreachable");
}

std::string to_string(MetricVariant variant) {
  switch (variant) {
    case MetricVariant::ScaledNorm: return "scaled_norm";
    case MetricVariant::ArdMax: return "ard_max";
    case MetricVariant::PeriodicSine: return "periodic_sine";
  }
  throw std::logic_error("unreachable");
}

MetricVariant metric_variant_from_string(const std::string& name) {
  if (name == "scaled_norm") return MetricVariant::ScaledNorm;
  if (name == "ard_max") return MetricVariant::ArdMax;
  if (name == "periodic_sine") return MetricVariant::PeriodicSine;
  throw std::invalid_argument("unknown metric variant: " + name);
}

}  // namespace poki
