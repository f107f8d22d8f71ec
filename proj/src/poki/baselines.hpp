#pragma once

#include <span>
#include <vector>

#include "poki/dataset.hpp"
#include "poki/predictor.hpp"

namespace poki {

struct LinearModel {
  std::vector<double> weights;
  double intercept = 0.0;
};

/// Least-squares fit of an intercept-augmented linear model; minimum-norm
/// solution on rank-deficient designs.
LinearModel fit_linear(const Dataset& data);

double predict_linear(const LinearModel& model, std::span<const double> x);

/// KI predictor with the max-norm scaled metric and theta set to the
/// Strongin slope estimate of the data.
Predictor lacki(const Dataset& data);

}  // namespace poki
