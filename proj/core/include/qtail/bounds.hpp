#pragma once

#include <array>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

namespace qtail {

// Catalog of closed-form tail bounds. Every entry bounds M(x) by
// prefactor(x) * exp(-x^2/2); the prefactor alone bounds Mill's ratio.
enum class BoundId {
  gordon_lower,     // x/(1+x^2)
  gordon_upper,     // 1/x
  bs_lower,         // 2/(sqrt(x^2+4)+x)
  bs_upper,         // 4/(sqrt(x^2+8)+3x)
  thm3_lower,       // (1+x^2)/(x(2+x^2))
  thm3_upper,       // 1/sqrt(1+x^2)
  corollary_lower,  // bs_lower on (0, sqrt(2)], thm3_lower beyond
  corollary_upper,  // alias of bs_upper
};

inline constexpr std::size_t kBoundCount = 8;

enum class BoundSide { lower, upper };

struct ValidityInterval {
  double lo;
  double hi;
  bool lo_open;
  bool hi_open;

  bool contains(double x) const {
    if (lo_open ? !(x > lo) : !(x >= lo)) return false;
    if (hi_open ? !(x < hi) : !(x <= hi)) return false;
    return true;
  }
};

struct BoundSpec {
  BoundId id;
  BoundSide side;
  ValidityInterval proven_validity;  // where the inequality is proven
  const char* source;                // literature label for the family
  const char* prefactor;             // human-readable prefactor formula
};

const std::array<BoundSpec, kBoundCount>& bound_catalog();
const BoundSpec& bound_spec(BoundId id);

const char* to_string(BoundId id);
std::optional<BoundId> bound_from_string(std::string_view name);

// Bound value prefactor(x)*exp(-x^2/2). Outside proven validity this throws
// validity_error unless force is set; with force the formula value is
// returned regardless. Underflows to zero past x ~ 38.6 like M itself.
double evaluate_bound(BoundId id, double x, bool force = false);

// log of the bound value; finite on all of (0, kMaxAbscissa], so ordering
// checks and relative errors stay meaningful past the linear underflow point.
double bound_log_value(BoundId id, double x, bool force = false);

// Reference M(x) against a set of bounds at one abscissa. All bounds are
// force-evaluated; in_validity carries the out-of-validity marker. Relative
// errors are computed in the log domain (expm1 of the log gap), so they are
// exact even where the linear values underflow.
struct ComparisonRow {
  double x;
  double reference;  // M(x), linear scale
  std::map<BoundId, double> bound_values;
  std::map<BoundId, double> relative_errors;  // (bound - M)/M
  std::map<BoundId, bool> in_validity;
  bool ordering_ok;  // every in-validity lower < M < every in-validity upper
};

ComparisonRow compare_at(double x, const std::vector<BoundId>& ids);

// Smallest abscissa in [lo, hi] at which the bound's inequality against M
// begins to hold, located by bisection to within tol. Requires the
// inequality to fail at lo and hold at hi; otherwise throws bracket_error.
double empirical_crossover(BoundId id, double lo, double hi, double tol);

// Signed relative residual of the closed-form tail identity
//   integral_x^inf u(2+u^2)/(1+u^2)^(3/2) e^(-u^2/2) du = e^(-x^2/2)/sqrt(1+x^2),
// evaluated as (LHS - RHS)/RHS with the common exp factor cancelled.
double identity_residual(double x);

// mills_ratio(x) * sqrt(1+x^2); approaches 1 from below as x grows.
double asymptotic_ratio(double x);

// Positive root of u^4 + u^2 - 1: the validity threshold of thm3_upper.
double crossover_constant();

}  // namespace qtail
