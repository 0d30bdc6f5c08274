#include "qtail/gauss.hpp"

#include <cmath>
#include <string>

#include "qtail/errors.hpp"
#include "qtail/quadrature.hpp"

namespace qtail {

namespace detail {

void require_abscissa(double x) {
  if (!std::isfinite(x) || x < 0.0 || x > kMaxAbscissa)
    throw domain_error("abscissa must lie in [0, 40], got " +
                       std::to_string(x));
}

void require_tail_probability(double alpha) {
  if (!std::isfinite(alpha) || !(alpha > 0.0) || alpha > 0.5)
    throw domain_error("tail probability must lie in (0, 0.5], got " +
                       std::to_string(alpha));
}

}  // namespace detail

namespace {

// Production evaluators switch representation here: the alternating series
// loses ~3 digits to cancellation by x = 3, while the continued fraction
// needs ~100 terms at x = 2; both are at machine precision on [2, 3].
constexpr double kSeriesCutoff = 2.5;

// R(x) from M(x) = sqrt(pi/2) - integral_0^x e^{-u^2/2} du, with the incomplete
// integral summed as sum (-1)^n x^(2n+1) / (2^n n! (2n+1)).
double mills_ratio_series(double x) {
  double term = x;  // x^(2n+1) / (2^n n!)
  double sum = 0.0;
  for (int n = 0; n < 400; ++n) {
    const double contribution = term / (2 * n + 1);
    sum += (n % 2 == 0) ? contribution : -contribution;
    term *= x * x / (2.0 * (n + 1));
    if (term < 1e-17 * std::abs(sum) + 1e-300) break;
  }
  return std::exp(0.5 * x * x) * (kSqrtHalfPi - sum);
}

// Laplace continued fraction R(x) = 1/(x+ 1/(x+ 2/(x+ 3/(x+ ...)))),
// evaluated with the modified Lentz algorithm.
double mills_ratio_lentz(double x) {
  constexpr double tiny = 1e-300;
  double f = tiny;
  double c = f;
  double d = 0.0;
  for (int j = 1; j <= 10000; ++j) {
    const double a = (j == 1) ? 1.0 : j - 1.0;
    d = x + a * d;
    if (d == 0.0) d = tiny;
    c = x + a / c;
    if (c == 0.0) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) return f;
  }
  return f;
}

}  // namespace

double mills_ratio(double x) {
  detail::require_abscissa(x);
  return x < kSeriesCutoff ? mills_ratio_series(x) : mills_ratio_lentz(x);
}

double mills_ratio_quadrature(double x) {
  detail::require_abscissa(x);
  // Shifting u = x + s cancels exp(-x^2/2): R(x) = integral_0^inf e^{-sx-s^2/2}.
  // The tail beyond s = 14 is below e^{-98}, negligible against R >= 1/41.
  const auto result = integrate(
      [x](double s) { return std::exp(-s * x - 0.5 * s * s); }, 0.0, 14.0,
      1e-14);
  return result.value;
}

namespace {

TailValue tail_from_ratio(double x, double ratio) {
  const double log_value = std::log(ratio) - 0.5 * x * x;
  return TailValue{std::exp(log_value), log_value, false};
}

}  // namespace

TailValue tail_integral(double x) { return tail_from_ratio(x, mills_ratio(x)); }

TailValue tail_integral_quadrature(double x) {
  return tail_from_ratio(x, mills_ratio_quadrature(x));
}

double q_value(double x) {
  return std::exp(tail_integral(x).log_value - std::log(kSqrtTwoPi));
}

TailValue q_tail(double x) {
  const TailValue m = tail_integral(x);
  const double log_q = m.log_value - std::log(kSqrtTwoPi);
  return TailValue{std::exp(log_q), log_q, true};
}

double inverse_q(double alpha) {
  detail::require_tail_probability(alpha);
  if (alpha < 1e-300)
    throw domain_error("inverse_q supports alpha in [1e-300, 0.5]");
  if (alpha == 0.5) return 0.0;

  const double log_target = std::log(alpha);
  // g(x) = log Q(x) - log alpha is strictly decreasing with g(0) > 0.
  const auto g = [log_target](double x) {
    return tail_integral(x).log_value - std::log(kSqrtTwoPi) - log_target;
  };

  double lo = 0.0;
  const double y = kTwoPi * alpha * alpha;
  // Asymptotic seed sqrt(-ln(2 pi alpha^2)) slightly inflated, then doubled
  // until it encloses the root; M(40) < 1e-300 <= alpha caps the bracket.
  double hi = y < 1.0 ? std::sqrt(-std::log(y)) + 0.5 : 1.0;
  hi = std::min(std::max(hi, 1.0), kMaxAbscissa);
  while (hi < kMaxAbscissa && g(hi) > 0.0) {
    lo = hi;
    hi = std::min(2.0 * hi, kMaxAbscissa);
  }

  // Safeguarded Newton on the log residual: g'(x) = -1/R(x), so the Newton
  // step is x + g(x)*R(x); bisection catches steps that leave the bracket.
  double x = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    const double gx = g(x);
    if (std::abs(gx) < 3e-13) return x;
    if (gx > 0.0)
      lo = x;
    else
      hi = x;
    double next = x + gx * mills_ratio(std::min(x, kMaxAbscissa));
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) < 1e-15 * (1.0 + x)) return next;
    x = next;
  }
  return x;
}

}  // namespace qtail
