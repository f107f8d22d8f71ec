#pragma once

#include <cstddef>
#include <span>
#include <string>

namespace poki {

enum class MetricVariant {
  ScaledNorm,    // d(x,y;theta) = theta * ||x-y||_inf, theta scalar
  ArdMax,        // d(x,y;theta) = max_i theta_i |x_i-y_i|, theta in R^d
  PeriodicSine,  // d(x,y;theta) = |sin(pi theta |x-y|)|, scalar inputs only
};

/// A parameterised pseudo-metric on input space. All members are symmetric,
/// nonnegative and vanish on identical points for any nonnegative theta.
struct ParamMetric {
  MetricVariant variant = MetricVariant::ScaledNorm;
  std::size_t theta_dim = 1;
};

/// Builds a metric for inputs of dimension `input_dim`, deriving theta_dim
/// from the variant (1 except for ArdMax, which uses one weight per axis).
ParamMetric make_metric(MetricVariant variant, std::size_t input_dim);

double eval_metric(const ParamMetric& metric, std::span<const double> theta,
                   std::span<const double> x, std::span<const double> y);

/// Lipschitz bound B of theta -> d(x,y;theta) w.r.t. the max-norm on theta:
/// |d(x,y;theta) - d(x,y;theta')| <= B ||theta - theta'||_inf.
double theta_lipschitz_bound(const ParamMetric& metric, std::span<const double> x,
                             std::span<const double> y);

std::string to_string(MetricVariant variant);
MetricVariant metric_variant_from_string(const std::string& name);

}  // namespace poki
