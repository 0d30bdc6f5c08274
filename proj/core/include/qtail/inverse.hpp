#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "qtail/bounds.hpp"

namespace qtail {

// Binary entropy in nats, h(p) = -p ln p - (1-p) ln(1-p), h(0) = h(1) = 0.
double binary_entropy(double p);

// Closed-form estimates of the inverse Q-function at small alpha. All three
// take the tail probability alpha and reject inputs whose nested logarithm
// arguments leave (0, 1).
//
//   estimate_low1: sqrt(-ln(-y ln y)),        y = 2*pi*alpha^2
//   estimate_upp:  sqrt(-ln(y(1 - ln y)))
//   estimate_low2: sqrt(-ln h(y))
double estimate_low1(double alpha);
double estimate_upp(double alpha);
double estimate_low2(double alpha);

// Certified one-sided bound on Q^-1(alpha): the abscissa where a proven tail
// bound equals sqrt(2*pi)*alpha, found inside the bound's validity interval.
// Inverting a lower bound yields a value <= Q^-1(alpha); an upper bound
// yields >= Q^-1(alpha). Throws attainability_error when the target is not
// reachable on the validity interval.
double invert_bound(BoundId id, double alpha);

struct ConjectureViolation {
  double alpha;
  double estimate;
  double reference;
};

// One inequality's empirical record across the scan grid.
struct ConjectureSeries {
  std::string name;  // "low1", "low2", or "upp"
  std::size_t holds_count = 0;
  std::vector<ConjectureViolation> violations;
  std::size_t skipped = 0;  // per-point domain rejections, not violations
  bool has_hold_range = false;
  double hold_lo = 0.0;  // longest contiguous run of grid points that hold
  double hold_hi = 0.0;
};

struct ConjectureReport {
  double alpha_min;
  double alpha_max;
  int points_per_decade;
  std::vector<double> grid;
  std::array<ConjectureSeries, 3> results;  // low1, low2, upp
};

// Empirical scan of the three conjectured inequalities
//   estimate_low1 < Q^-1, estimate_low2 < Q^-1, estimate_upp > Q^-1
// against the reference inverse on a log grid. Reports, never throws on a
// conjecture violation; alpha_max above 1e-2 is rejected (outside the
// small-alpha regime the estimates target).
ConjectureReport conjecture_scan(double alpha_min, double alpha_max,
                                 int points_per_decade);

}  // namespace qtail
