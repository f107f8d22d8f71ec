#pragma once

// Shared helpers for the test suites: random dataset construction and dense
// grid oracles kept independent of the optimiser implementation under test.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "poki/dataset.hpp"
#include "poki/rng.hpp"

namespace testsupport {

inline poki::Dataset random_dataset(poki::Rng& rng, std::size_t n, std::size_t dim,
                                    double input_scale = 1.0, double output_scale = 1.0) {
  poki::Dataset data;
  data.dim = dim;
  std::vector<double> x(dim);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& v : x) v = rng.uniform(-input_scale, input_scale);
    data.add(x, rng.uniform(-output_scale, output_scale));
  }
  return data;
}

inline std::vector<double> random_theta(poki::Rng& rng, std::size_t k, double hi) {
  std::vector<double> theta(k);
  for (auto& t : theta) t = rng.uniform(0.0, hi);
  return theta;
}

inline double max_norm_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

/// Dense-grid minimum of a 1-D function; independent oracle for the optimiser.
inline double grid_min_1d(const std::function<double(double)>& f, double lo, double hi,
                          std::size_t points) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
    best = std::min(best, f(x));
  }
  return best;
}

/// Dense-grid minimum of a 2-D function on a box, side x side points.
inline double grid_min_2d(const std::function<double(double, double)>& f, double lo0, double hi0,
                          double lo1, double hi1, std::size_t side) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < side; ++i) {
    const double x = lo0 + (hi0 - lo0) * static_cast<double>(i) / static_cast<double>(side - 1);
    for (std::size_t j = 0; j < side; ++j) {
      const double y = lo1 + (hi1 - lo1) * static_cast<double>(j) / static_cast<double>(side - 1);
      best = std::min(best, f(x, y));
    }
  }
  return best;
}

}  // namespace testsupport
