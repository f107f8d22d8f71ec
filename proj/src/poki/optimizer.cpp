#include "poki/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <utility>

#include "poki/errors.hpp"

namespace poki {

void validate(const HyperRect& rect) {
  const std::size_t k = rect.lo.size();
  if (k == 0 || rect.hi.size() != k || rect.anchor.size() != k) {
    throw std::invalid_argument("hyperrect: inconsistent dimensions");
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!(rect.lo[i] <= rect.anchor[i] && rect.anchor[i] <= rect.hi[i])) {
      throw std::invalid_argument("hyperrect: anchor outside box");
    }
  }
}

void validate(const HolderSpec& spec) {
  if (!(spec.constant >= 0.0)) throw std::invalid_argument("holder: constant must be >= 0");
  if (!(spec.exponent > 0.0 && spec.exponent <= 1.0)) {
    throw std::invalid_argument("holder: exponent must be in (0,1]");
  }
}

double rect_diameter(const HyperRect& rect) {
  validate(rect);
  double d = 0.0;
  for (std::size_t i = 0; i < rect.lo.size(); ++i) {
    d = std::max({d, rect.anchor[i] - rect.lo[i], rect.hi[i] - rect.anchor[i]});
  }
  return d;
}

std::pair<double, double> batch_bounds(std::span<const HyperRect> rects, const HolderSpec& spec) {
  validate(spec);
  if (rects.empty()) throw std::invalid_argument("batch_bounds: empty partition");
  double lower = std::numeric_limits<double>::infinity();
  double upper = -std::numeric_limits<double>::infinity();
  for (const auto& r : rects) {
    const double slack = spec.constant * std::pow(rect_diameter(r), spec.exponent);
    lower = std::min(lower, r.anchor_value - slack);
    upper = std::max(upper, r.anchor_value + slack);
  }
  return {lower, upper};
}

namespace {

double checked_eval(const Objective& objective, std::span<const double> x) {
  const double v = objective(x);
  if (!std::isfinite(v)) throw numeric_error("objective returned a non-finite value");
  return v;
}

}  // namespace

OptResult minimize(const Objective& objective, std::span<const double> lo,
                   std::span<const double> hi, const HolderSpec& spec, int budget, double tol,
                   const TraceFn& trace) {
  validate(spec);
  const std::size_t k = lo.size();
  if (k == 0 || hi.size() != k) throw std::invalid_argument("minimize: invalid box");
  for (std::size_t i = 0; i < k; ++i) {
    if (!(lo[i] <= hi[i]) || !std::isfinite(lo[i]) || !std::isfinite(hi[i])) {
      throw std::invalid_argument("minimize: invalid box");
    }
  }
  if (budget < 1) throw std::invalid_argument("minimize: budget must be >= 1");
  if (!(tol >= 0.0)) throw std::invalid_argument("minimize: tol must be >= 0");

  std::vector<HyperRect> rects;
  {
    HyperRect root{std::vector<double>(lo.begin(), lo.end()),
                   std::vector<double>(hi.begin(), hi.end()), {}, 0.0};
    root.anchor.resize(k);
    for (std::size_t i = 0; i < k; ++i) root.anchor[i] = 0.5 * (lo[i] + hi[i]);
    root.anchor_value = checked_eval(objective, root.anchor);
    rects.push_back(std::move(root));
  }

  OptResult result;
  result.evals = 1;
  result.argmin = rects[0].anchor;
  result.min_value = rects[0].anchor_value;
  // best certified bound so far; each per-iteration bound is valid, so the
  // running max stays valid and is monotone
  double best_lower = -std::numeric_limits<double>::infinity();

  // scores are fixed once computed and only change for the two rectangles
  // touched by a split, so a lazy-deletion min-heap keyed by (score, creation
  // order) gives both the certified bound and the refinement choice
  auto raw_diameter = [](const HyperRect& r) {
    double d = 0.0;
    for (std::size_t i = 0; i < r.lo.size(); ++i) {
      d = std::max({d, r.anchor[i] - r.lo[i], r.hi[i] - r.anchor[i]});
    }
    return d;
  };
  auto score_of = [&](const HyperRect& r) {
    return r.anchor_value - spec.constant * std::pow(raw_diameter(r), spec.exponent);
  };
  std::vector<double> scores{score_of(rects[0])};
  using Entry = std::pair<double, std::size_t>;  // (score, rect index)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  heap.emplace(scores[0], 0);

  for (int iteration = 0;; ++iteration) {
    while (!heap.empty() && heap.top().first != scores[heap.top().second]) heap.pop();
    if (heap.empty()) break;  // all rectangles degenerate
    const auto [lower, pick] = heap.top();

    best_lower = std::max(best_lower, lower);
    result.lower_bound = best_lower;
    result.gap = result.min_value - result.lower_bound;
    if (trace) trace({iteration, result.evals, result.min_value, result.lower_bound, result.gap});

    if (result.gap <= tol) {
      result.converged = true;
      break;
    }
    if (result.evals >= budget) break;

    // split the chosen rectangle at the midpoint of its longest side; the
    // half losing the anchor gets a fresh sample at its centroid
    HyperRect& chosen = rects[pick];
    std::size_t axis = 0;
    double width = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      const double w = chosen.hi[i] - chosen.lo[i];
      if (w > width) {
        width = w;
        axis = i;
      }
    }
    if (width <= 0.0) break;  // degenerate box, nothing left to refine

    const double mid = 0.5 * (chosen.lo[axis] + chosen.hi[axis]);
    HyperRect fresh = chosen;
    if (chosen.anchor[axis] <= mid) {
      chosen.hi[axis] = mid;
      fresh.lo[axis] = mid;
    } else {
      chosen.lo[axis] = mid;
      fresh.hi[axis] = mid;
    }
    for (std::size_t i = 0; i < k; ++i) fresh.anchor[i] = 0.5 * (fresh.lo[i] + fresh.hi[i]);
    fresh.anchor_value = checked_eval(objective, fresh.anchor);
    ++result.evals;
    if (fresh.anchor_value < result.min_value) {
      result.min_value = fresh.anchor_value;
      result.argmin = fresh.anchor;
    }

    scores[pick] = score_of(chosen);
    heap.emplace(scores[pick], pick);
    scores.push_back(score_of(fresh));
    heap.emplace(scores.back(), scores.size() - 1);
    rects.push_back(std::move(fresh));
  }
  return result;
}

OptResult shubert_minimize_1d(const Objective& objective, double lo, double hi,
                              double lipschitz_constant, int budget, double tol,
                              const TraceFn& trace) {
  if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("shubert: invalid interval");
  }
  if (!(lipschitz_constant >= 0.0)) throw std::invalid_argument("shubert: L must be >= 0");
  if (budget < 1) throw std::invalid_argument("shubert: budget must be >= 1");
  if (!(tol >= 0.0)) throw std::invalid_argument("shubert: tol must be >= 0");

  auto eval = [&](double x) { return checked_eval(objective, {&x, 1}); };

  OptResult result;
  const double f_lo = eval(lo);
  result.evals = 1;
  result.argmin = {lo};
  result.min_value = f_lo;

  if (hi == lo) {
    result.lower_bound = f_lo;
    result.converged = true;
    if (trace) trace({0, result.evals, f_lo, f_lo, 0.0});
    return result;
  }

  double f_hi = f_lo;
  if (budget >= 2) {
    f_hi = eval(hi);
    ++result.evals;
    if (f_hi < result.min_value) {
      result.min_value = f_hi;
      result.argmin = {hi};
    }
  }

  struct Segment {
    double xl, fl, xr, fr;
    // min of the two Lipschitz cones over the segment
    double bound(double l) const { return 0.5 * (fl + fr) - 0.5 * l * (xr - xl); }
  };
  std::vector<Segment> segs{{lo, f_lo, hi, f_hi}};
  const double l = lipschitz_constant;
  double best_lower = -std::numeric_limits<double>::infinity();

  for (int iteration = 0;; ++iteration) {
    double lower = std::numeric_limits<double>::infinity();
    std::size_t pick = 0;
    for (std::size_t j = 0; j < segs.size(); ++j) {
      const double b = segs[j].bound(l);
      if (b < lower) {
        lower = b;
        pick = j;
      }
    }
    // with budget 1 the right endpoint was never sampled; fall back to the
    // one-rectangle bound anchored at lo
    if (result.evals < 2) lower = f_lo - l * (hi - lo);
    best_lower = std::max(best_lower, lower);
    result.lower_bound = best_lower;
    result.gap = result.min_value - result.lower_bound;
    if (trace) trace({iteration, result.evals, result.min_value, result.lower_bound, result.gap});

    if (result.gap <= tol) {
      result.converged = true;
      break;
    }
    if (result.evals >= budget) break;

    Segment s = segs[pick];
    double t = l > 0.0 ? 0.5 * (s.xl + s.xr) + (s.fl - s.fr) / (2.0 * l)
                       : 0.5 * (s.xl + s.xr);
    t = std::clamp(t, s.xl, s.xr);
    if (t == s.xl || t == s.xr) break;  // no further refinement possible
    const double ft = eval(t);
    ++result.evals;
    if (ft < result.min_value) {
      result.min_value = ft;
      result.argmin = {t};
    }
    segs[pick] = {s.xl, s.fl, t, ft};
    segs.push_back({t, ft, s.xr, s.fr});
  }
  return result;
}

namespace holder {

namespace {
void check_nonneg(double l, const char* what) {
  if (!(l >= 0.0)) throw std::invalid_argument(std::string(what) + " must be nonnegative");
}
}  // namespace

double derive_abs(double l_f) {
  check_nonneg(l_f, "holder constant");
  return l_f;
}

double derive_compose(double l_f, double l_g, double p) {
  check_nonneg(l_f, "holder constant");
  check_nonneg(l_g, "holder constant");
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("holder exponent must be in (0,1]");
  return l_g * std::pow(l_f, p);
}

double derive_scale(double r, double l_f) {
  check_nonneg(l_f, "holder constant");
  return std::abs(r) * l_f;
}

double derive_sum(double l_f, double l_g) {
  check_nonneg(l_f, "holder constant");
  check_nonneg(l_g, "holder constant");
  return l_f + l_g;
}

double derive_product(double l_f, double l_g, double sup_f, double sup_g) {
  check_nonneg(l_f, "holder constant");
  check_nonneg(l_g, "holder constant");
  return sup_f * l_g + sup_g * l_f;
}

double derive_sup_family(std::span<const double> l_list) {
  if (l_list.empty()) throw std::invalid_argument("derive_sup_family: empty list");
  double m = 0.0;
  for (double l : l_list) {
    check_nonneg(l, "holder constant");
    m = std::max(m, l);
  }
  return m;
}

double derive_reciprocal(double l_f, double inf_abs_f) {
  check_nonneg(l_f, "holder constant");
  if (!(inf_abs_f > 0.0)) {
    throw std::invalid_argument("derive_reciprocal: inf |f| must be positive");
  }
  return l_f / (inf_abs_f * inf_abs_f);
}

double derive_square(double l_f, double sup_f) {
  check_nonneg(l_f, "holder constant");
  return 2.0 * l_f * sup_f;
}

}  // namespace holder

}  // namespace poki
