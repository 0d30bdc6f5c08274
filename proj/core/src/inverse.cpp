#include "qtail/inverse.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qtail/errors.hpp"
#include "qtail/gauss.hpp"
#include "qtail/grid.hpp"

namespace qtail {

namespace {

// Rejects any nested logarithm argument outside (0, 1); explicit errors
// beat silent NaN propagation from sqrt/log of out-of-range values.
double checked_outer(double inner, const char* which) {
  if (!(inner > 0.0 && inner < 1.0))
    throw domain_error(std::string(which) +
                       ": nested log argument left (0, 1), got " +
                       std::to_string(inner));
  return std::sqrt(-std::log(inner));
}

double squared_scale(double alpha, const char* which) {
  detail::require_tail_probability(alpha);
  const double y = kTwoPi * alpha * alpha;
  if (!(y > 0.0 && y < 1.0))
    throw domain_error(std::string(which) +
                       ": 2*pi*alpha^2 must lie in (0, 1), got " +
                       std::to_string(y));
  return y;
}

}  // namespace

double binary_entropy(double p) {
  if (!std::isfinite(p) || p < 0.0 || p > 1.0)
    throw domain_error("binary_entropy domain is [0, 1], got " +
                       std::to_string(p));
  if (p == 0.0 || p == 1.0) return 0.0;
  // log1p keeps the (1-p) term accurate for p near 0, where it is ~p.
  return -p * std::log(p) - (1.0 - p) * std::log1p(-p);
}

double estimate_low1(double alpha) {
  const double y = squared_scale(alpha, "estimate_low1");
  return checked_outer(-y * std::log(y), "estimate_low1");
}

double estimate_upp(double alpha) {
  const double y = squared_scale(alpha, "estimate_upp");
  return checked_outer(y * (1.0 - std::log(y)), "estimate_upp");
}

double estimate_low2(double alpha) {
  const double y = squared_scale(alpha, "estimate_low2");
  return checked_outer(binary_entropy(y), "estimate_low2");
}

double invert_bound(BoundId id, double alpha) {
  detail::require_tail_probability(alpha);
  const double target_log = std::log(alpha) + std::log(kSqrtTwoPi);

  const BoundSpec& spec = bound_spec(id);
  double lo = std::max(spec.proven_validity.lo, 0.0) + 1e-9;
  // gordon_lower is the one unimodal entry (peak at sqrt(sqrt(2)-1)); its
  // certification works from any root, so search the decreasing branch.
  if (id == BoundId::gordon_lower)
    lo = std::max(lo, std::sqrt(std::sqrt(2.0) - 1.0));
  double hi = kMaxAbscissa;

  const auto f = [&](double x) { return bound_log_value(id, x, true); };
  if (f(lo) < target_log || f(hi) > target_log)
    throw attainability_error(
        std::string("sqrt(2*pi)*alpha is not attainable by ") + to_string(id) +
        " on its validity interval for alpha = " + std::to_string(alpha));

  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) <= target_log ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

ConjectureReport conjecture_scan(double alpha_min, double alpha_max,
                                 int points_per_decade) {
  if (!std::isfinite(alpha_min) || !std::isfinite(alpha_max) ||
      !(alpha_min > 0.0) || !(alpha_min < alpha_max))
    throw domain_error("conjecture_scan requires 0 < alpha_min < alpha_max");
  if (alpha_max > 1e-2)
    throw domain_error(
        "conjecture_scan: alpha_max above 1e-2 is outside the small-alpha "
        "regime");
  if (points_per_decade < 1)
    throw domain_error("conjecture_scan requires points_per_decade >= 1");

  ConjectureReport report;
  report.alpha_min = alpha_min;
  report.alpha_max = alpha_max;
  report.points_per_decade = points_per_decade;
  report.grid = log_grid(alpha_min, alpha_max, points_per_decade);
  report.results[0].name = "low1";
  report.results[1].name = "low2";
  report.results[2].name = "upp";

  struct Run {
    bool active = false;
    std::size_t start = 0;
    std::size_t best_len = 0;
    std::size_t best_start = 0;
    void feed(bool holds, std::size_t i) {
      if (holds) {
        if (!active) {
          active = true;
          start = i;
        }
        const std::size_t len = i - start + 1;
        if (len > best_len) {
          best_len = len;
          best_start = start;
        }
      } else {
        active = false;
      }
    }
  };
  std::array<Run, 3> runs;

  for (std::size_t i = 0; i < report.grid.size(); ++i) {
    const double alpha = report.grid[i];
    const double reference = inverse_q(alpha);
    for (std::size_t k = 0; k < 3; ++k) {
      ConjectureSeries& series = report.results[k];
      double estimate;
      try {
        estimate = k == 0   ? estimate_low1(alpha)
                   : k == 1 ? estimate_low2(alpha)
                            : estimate_upp(alpha);
      } catch (const domain_error&) {
        ++series.skipped;
        runs[k].feed(false, i);
        continue;
      }
      const bool holds =
          k == 2 ? estimate > reference : estimate < reference;
      if (holds)
        ++series.holds_count;
      else
        series.violations.push_back({alpha, estimate, reference});
      runs[k].feed(holds, i);
    }
  }

  for (std::size_t k = 0; k < 3; ++k) {
    if (runs[k].best_len == 0) continue;
    ConjectureSeries& series = report.results[k];
    series.has_hold_range = true;
    series.hold_lo = report.grid[runs[k].best_start];
    series.hold_hi = report.grid[runs[k].best_start + runs[k].best_len - 1];
  }
  return report;
}

}  // namespace qtail
