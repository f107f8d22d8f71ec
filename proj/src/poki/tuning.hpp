#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "poki/dataset.hpp"
#include "poki/loss.hpp"
#include "poki/metric.hpp"
#include "poki/optimizer.hpp"
#include "poki/predictor.hpp"

namespace poki {

struct PokiConfig {
  ParamMetric metric;
  std::vector<double> box_lo;  // parameter space, componentwise nonnegative
  std::vector<double> box_hi;
  double split_ratio = 0.5;
  std::uint64_t seed = 0;
  int budget = 2000;
  double tol = 1e-3;
};

/// Seeded random partition into (conditioning, evaluation) data with
/// |cond| = round(ratio * N); disjoint, exhaustive, deterministic per seed.
std::pair<Dataset, Dataset> split(const Dataset& data, double ratio, std::uint64_t seed);

/// Largest pairwise slope |f_i - f_j| / ||s_i - s_j||_inf certified by the
/// data. Throws estimate_undefined_error when duplicate inputs carry distinct
/// outputs (the noise-free estimator is unbounded there).
double strongin_estimate(const Dataset& data);

/// Noise-deflated variant: max of (|f_i - f_j| - 2*noise_bound) / ||s_i - s_j||_inf,
/// floored at zero.
double strongin_estimate_noise_robust(const Dataset& data, double noise_bound);

/// Default parameter box [0, 2*strongin] per axis for ScaledNorm and ArdMax.
/// Falls back to output range over the smallest positive input gap when the
/// Strongin estimate is undefined. PeriodicSine has no data-derived default;
/// the caller must supply a frequency range.
std::pair<std::vector<double>, std::vector<double>> default_theta_box(const Dataset& data,
                                                                      const ParamMetric& metric);

struct TrainOutcome {
  Predictor predictor;  // conditioned on the full data with the optimised theta
  OptResult opt;
};

/// The full pipeline: split, certified global minimisation of the validation
/// loss over the parameter box, predictor on the full data with the found theta.
TrainOutcome train(const Dataset& data, const PokiConfig& cfg, const TraceFn& trace = {});

}  // namespace poki
