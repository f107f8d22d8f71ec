#pragma once

#include <functional>
#include <span>

#include "poki/dataset.hpp"
#include "poki/metric.hpp"
#include "poki/predictor.hpp"

namespace poki {

/// Conditioning data, evaluation data and metric family for the validation
/// loss. Disjointness of the two sets is the splitter's job, not enforced here.
struct LossContext {
  Dataset cond;
  Dataset eval;
  ParamMetric metric;
};

LossContext make_loss_context(Dataset cond, Dataset eval, ParamMetric metric);

using TruthFn = std::function<double(std::span<const double>)>;

/// Mean absolute deviation of the predictor from a known ground truth over
/// the rows of a query matrix.
double empirical_error(const Predictor& pred, const TruthFn& truth,
                       std::span<const double> xs, std::size_t rows, std::size_t dim);

/// Mean absolute deviation from observed outputs of a test set.
double sample_error(const Predictor& pred, const Dataset& test);

/// Validation loss: mean absolute deviation on eval of the cond-conditioned
/// predictor with the given theta.
double poki_loss(const LossContext& ctx, std::span<const double> theta);

/// Lipschitz bound B of theta -> poki_loss(theta) w.r.t. max-norm on theta,
/// taken as the pairwise max of theta_lipschitz_bound over cond + eval inputs.
double loss_lipschitz_bound(const LossContext& ctx);

/// Tighter per-query bound (max over eval points of the max bound against
/// conditioning inputs). Diagnostic only; the optimiser uses the bound above.
double per_query_loss_lipschitz_bound(const LossContext& ctx);

}  // namespace poki
