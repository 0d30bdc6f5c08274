#pragma once

namespace qtail {

inline constexpr double kSqrtTwoPi = 2.5066282746310005024;   // sqrt(2*pi)
inline constexpr double kSqrtHalfPi = 1.2533141373155002512;  // sqrt(pi/2)
inline constexpr double kTwoPi = 6.2831853071795864769;

// Abscissa domain: tail evaluations accept x in [0, kMaxAbscissa].
inline constexpr double kMaxAbscissa = 40.0;

// One evaluation of the unnormalized Gaussian tail integral
//   M(x) = integral_x^inf exp(-u^2/2) du.
// linear underflows to zero past x ~ 38.6; log_value stays finite on the
// whole domain and is the field to use for comparisons at large x.
struct TailValue {
  double linear;
  double log_value;
  bool normalized;  // true when the fields hold Q(x) = M(x)/sqrt(2*pi)
};

// Mill's ratio R(x) = exp(x^2/2) * M(x). Production path: alternating series
// below the switch point, Lentz continued fraction above. Relative error is
// a few ulp across [0, kMaxAbscissa].
double mills_ratio(double x);

// M(x) as a TailValue (normalized = false).
TailValue tail_integral(double x);

// Upper tail of the standard normal, Q(x) = M(x)/sqrt(2*pi).
double q_value(double x);

// Q(x) packaged as a TailValue (normalized = true).
TailValue q_tail(double x);

// Inverse of q_value on alpha in [1e-300, 0.5]: safeguarded Newton/bisection
// on log Q against the production tail evaluator.
double inverse_q(double alpha);

// Independent cross-check path: adaptive quadrature of the shifted integrand
//   R(x) = integral_0^inf exp(-s*x - s^2/2) ds,
// which keeps every intermediate on a representable scale for x up to 40.
double mills_ratio_quadrature(double x);
TailValue tail_integral_quadrature(double x);

namespace detail {
void require_abscissa(double x);
void require_tail_probability(double alpha);
}  // namespace detail

}  // namespace qtail
