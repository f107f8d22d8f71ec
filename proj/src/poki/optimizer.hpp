#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace poki {

/// Axis-aligned box with an evaluated anchor point inside it; the unit of
/// partitioning in the certified optimiser.
struct HyperRect {
  std::vector<double> lo;
  std::vector<double> hi;
  std::vector<double> anchor;
  double anchor_value = 0.0;
};

/// Holder regularity assumption: |f(x)-f(x')| <= constant * ||x-x'||_inf^exponent.
/// exponent = 1 is the Lipschitz case.
struct HolderSpec {
  double constant = 0.0;
  double exponent = 1.0;
};

void validate(const HyperRect& rect);
void validate(const HolderSpec& spec);

/// Certified optimisation outcome.
struct OptResult {
  std::vector<double> argmin;
  double min_value = 0.0;    // incumbent objective value
  double lower_bound = 0.0;  // certified: lower_bound <= global min
  int evals = 0;
  double gap = 0.0;          // min_value - lower_bound
  bool converged = false;    // true if terminated by gap <= tol, false if by budget
};

/// Max distance from the anchor to the rectangle boundary along any axis.
double rect_diameter(const HyperRect& rect);

/// Certified (lower, upper) bounds on the global min/max of a Holder function
/// from an anchored partition of its domain.
std::pair<double, double> batch_bounds(std::span<const HyperRect> rects, const HolderSpec& spec);

using Objective = std::function<double(std::span<const double>)>;

struct TraceRecord {
  int iteration = 0;
  int evals = 0;
  double incumbent = 0.0;
  double lower_bound = 0.0;
  double gap = 0.0;
};
using TraceFn = std::function<void(const TraceRecord&)>;

/// Global minimisation by adaptive hyperrectangle refinement. Terminates when
/// the certified gap drops to tol or the evaluation budget is spent.
OptResult minimize(const Objective& objective, std::span<const double> lo,
                   std::span<const double> hi, const HolderSpec& spec, int budget, double tol,
                   const TraceFn& trace = {});

/// Shubert's saw-tooth method for one-dimensional Lipschitz minimisation.
OptResult shubert_minimize_1d(const Objective& objective, double lo, double hi,
                              double lipschitz_constant, int budget, double tol,
                              const TraceFn& trace = {});

// Holder-constant calculus: each function returns a constant valid for the
// derived function given constants valid for the operands.
namespace holder {

double derive_abs(double l_f);                                      // |f|
double derive_compose(double l_f, double l_g, double p);            // g o f
double derive_scale(double r, double l_f);                          // r*f
double derive_sum(double l_f, double l_g);                          // f+g
double derive_product(double l_f, double l_g, double sup_f, double sup_g);  // f*g
double derive_sup_family(std::span<const double> l_list);           // sup_i f_i / inf_i f_i
double derive_reciprocal(double l_f, double inf_abs_f);             // 1/f
double derive_square(double l_f, double sup_f);                     // f^2

}  // namespace holder

}  // namespace poki
