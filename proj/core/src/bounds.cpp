#include "qtail/bounds.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "qtail/errors.hpp"
#include "qtail/gauss.hpp"
#include "qtail/quadrature.hpp"

namespace qtail {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kSqrt2 = std::sqrt(2.0);

void require_bound_abscissa(double x) {
  if (!std::isfinite(x) || !(x > 0.0) || x > kMaxAbscissa)
    throw domain_error("bounds are defined on (0, 40], got " +
                       std::to_string(x));
}

// log of the Mill's-ratio prefactor; the bound itself is this minus x^2/2.
double log_prefactor(BoundId id, double x) {
  switch (id) {
    case BoundId::gordon_lower:
      return std::log(x) - std::log1p(x * x);
    case BoundId::gordon_upper:
      return -std::log(x);
    case BoundId::bs_lower:
      return std::log(2.0) - std::log(std::sqrt(x * x + 4.0) + x);
    case BoundId::bs_upper:
      return std::log(4.0) - std::log(std::sqrt(x * x + 8.0) + 3.0 * x);
    case BoundId::thm3_lower:
      return std::log1p(x * x) - std::log(x) - std::log(2.0 + x * x);
    case BoundId::thm3_upper:
      return -0.5 * std::log1p(x * x);
    case BoundId::corollary_lower:
      return x <= kSqrt2 ? log_prefactor(BoundId::bs_lower, x)
                         : log_prefactor(BoundId::thm3_lower, x);
    case BoundId::corollary_upper:
      return log_prefactor(BoundId::bs_upper, x);
  }
  throw domain_error("unknown bound id");
}

}  // namespace

const std::array<BoundSpec, kBoundCount>& bound_catalog() {
  static const std::array<BoundSpec, kBoundCount> catalog = {{
      {BoundId::gordon_lower, BoundSide::lower, {0.0, kInf, true, true},
       "Gordon", "x/(1+x^2)"},
      {BoundId::gordon_upper, BoundSide::upper, {0.0, kInf, true, true},
       "Gordon", "1/x"},
      {BoundId::bs_lower, BoundSide::lower, {0.0, kInf, true, true},
       "Birnbaum-Sampford", "2/(sqrt(x^2+4)+x)"},
      {BoundId::bs_upper, BoundSide::upper, {0.0, kInf, true, true},
       "Birnbaum-Sampford", "4/(sqrt(x^2+8)+3x)"},
      {BoundId::thm3_lower, BoundSide::lower, {kSqrt2, kInf, true, true},
       "refined pair", "(1+x^2)/(x(2+x^2))"},
      {BoundId::thm3_upper, BoundSide::upper,
       {crossover_constant(), kInf, true, true}, "refined pair",
       "1/sqrt(1+x^2)"},
      {BoundId::corollary_lower, BoundSide::lower, {0.0, kInf, true, true},
       "composite", "bs_lower on (0, sqrt(2)], thm3_lower beyond"},
      {BoundId::corollary_upper, BoundSide::upper, {0.0, kInf, true, true},
       "composite", "4/(sqrt(x^2+8)+3x) (alias of bs_upper)"},
  }};
  return catalog;
}

const BoundSpec& bound_spec(BoundId id) {
  return bound_catalog()[static_cast<std::size_t>(id)];
}

const char* to_string(BoundId id) {
  switch (id) {
    case BoundId::gordon_lower: return "gordon_lower";
    case BoundId::gordon_upper: return "gordon_upper";
    case BoundId::bs_lower: return "bs_lower";
    case BoundId::bs_upper: return "bs_upper";
    case BoundId::thm3_lower: return "thm3_lower";
    case BoundId::thm3_upper: return "thm3_upper";
    case BoundId::corollary_lower: return "corollary_lower";
    case BoundId::corollary_upper: return "corollary_upper";
  }
  return "unknown";
}

std::optional<BoundId> bound_from_string(std::string_view name) {
  for (const BoundSpec& spec : bound_catalog())
    if (name == to_string(spec.id)) return spec.id;
  return std::nullopt;
}

double bound_log_value(BoundId id, double x, bool force) {
  require_bound_abscissa(x);
  if (!force && !bound_spec(id).proven_validity.contains(x))
    throw validity_error(std::string(to_string(id)) + " is proven only for x > " +
                         std::to_string(bound_spec(id).proven_validity.lo) +
                         "; pass force to evaluate at x = " + std::to_string(x));
  return log_prefactor(id, x) - 0.5 * x * x;
}

double evaluate_bound(BoundId id, double x, bool force) {
  return std::exp(bound_log_value(id, x, force));
}

ComparisonRow compare_at(double x, const std::vector<BoundId>& ids) {
  require_bound_abscissa(x);
  const TailValue reference = tail_integral(x);

  ComparisonRow row;
  row.x = x;
  row.reference = reference.linear;
  row.ordering_ok = true;

  for (const BoundId id : ids) {
    const double log_bound = bound_log_value(id, x, true);
    const bool valid = bound_spec(id).proven_validity.contains(x);
    row.bound_values[id] = std::exp(log_bound);
    row.relative_errors[id] = std::expm1(log_bound - reference.log_value);
    row.in_validity[id] = valid;
    if (!valid) continue;
    if (bound_spec(id).side == BoundSide::lower) {
      if (!(log_bound < reference.log_value)) row.ordering_ok = false;
    } else {
      if (!(log_bound > reference.log_value)) row.ordering_ok = false;
    }
  }
  return row;
}

double empirical_crossover(BoundId id, double lo, double hi, double tol) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo > 0.0) || !(lo < hi) ||
      hi > kMaxAbscissa)
    throw domain_error("crossover bracket must satisfy 0 < lo < hi <= 40");
  if (!std::isfinite(tol) || !(tol > 0.0))
    throw domain_error("crossover tolerance must be positive");

  const BoundSide side = bound_spec(id).side;
  const auto holds = [&](double x) {
    const double gap = bound_log_value(id, x, true) - tail_integral(x).log_value;
    return side == BoundSide::lower ? gap < 0.0 : gap > 0.0;
  };

  if (holds(lo) || !holds(hi))
    throw bracket_error(std::string("no crossover of ") + to_string(id) +
                        " inside [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "]");

  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (holds(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

double identity_residual(double x) {
  detail::require_abscissa(x);
  // Shifted integrand of the tail identity, common exp(-x^2/2) cancelled:
  //   integral_0^inf g(x+s) e^{-sx-s^2/2} ds = 1/sqrt(1+x^2),
  // with g(u) = u(2+u^2)/(1+u^2)^(3/2) bounded by ~1.09.
  const auto integrand = [x](double s) {
    const double u = x + s;
    const double w = 1.0 + u * u;
    return u * (2.0 + u * u) / (w * std::sqrt(w)) *
           std::exp(-s * x - 0.5 * s * s);
  };
  const double lhs = integrate(integrand, 0.0, 14.0, 1e-13).value;
  return lhs * std::sqrt(1.0 + x * x) - 1.0;
}

double asymptotic_ratio(double x) {
  if (!std::isfinite(x) || x < 2.0 || x > kMaxAbscissa)
    throw domain_error("asymptotic_ratio domain is [2, 40], got " +
                       std::to_string(x));
  return mills_ratio(x) * std::sqrt(1.0 + x * x);
}

double crossover_constant() { return std::sqrt((std::sqrt(5.0) - 1.0) / 2.0); }

}  // namespace qtail
