#ifndef TRIGAPPROX_NORMS_HPP
#define TRIGAPPROX_NORMS_HPP

#include <complex>
#include <functional>
#include <string>

#include "trigapprox/functions.hpp"
#include "trigapprox/quadrature.hpp"

namespace trigapprox {

using LineFunction = std::function<std::complex<double>(double)>;

/// Where a norm was taken: [lo, hi], the whole line, or |x| > lo.
struct NormDomain {
  enum class Kind { Interval, RealLine, Outside };
  Kind kind = Kind::Interval;
  double lo = 0.0;
  double hi = 0.0;

  std::string describe() const;
};

/// A norm value with a rigorous-in-practice error bar. tail_bound is the part
/// of error_bound caused by truncating the real line.
struct NormEstimate {
  double value = 0.0;
  double error_bound = 0.0;
  double p = 2.0;
  NormDomain domain;
  double tail_bound = 0.0;

  double lower() const { return value > error_bound ? value - error_bound : 0.0; }
  double upper() const { return value + error_bound; }
};

/// Maps an estimate of  int |g|^p  known to lie in [I - e, I + e + T] to the
/// p-th root, centred in the interval. Used by every L^p routine.
NormEstimate norm_from_power_integral(double integral, double quad_error, double tail, double p,
                                      NormDomain domain);

/// (int_a^b |g|^p)^(1/p). The quadrature of |g|^p targets abs_tol^p and
/// rel_tol, so the root meets abs_tol even for tiny norms.
NormEstimate lp_norm_interval(const LineFunction& g, double p, double a, double b,
                              const QuadratureSpec& quad, double max_panel_width = 1.0);

/// Default cap on the truncation radius used for whole-line norms.
inline constexpr double kDefaultMaxHalfWidth = 1e5;

/// L^p norm of g over {|x| > inner} (inner = 0: the whole line), given an
/// envelope for g. Quadrature covers inner < |x| < X; beyond X the envelope
/// integral is added to the error as tail_bound. X is the smallest radius
/// with envelope tail <= abs_tol^p, capped at max_half_width.
/// Throws DomainError("non-integrable tail envelope") when exponent*p <= 1.
NormEstimate lp_norm_outside(const LineFunction& g, const Decay& envelope, double sigma, double p,
                             double inner, const QuadratureSpec& quad,
                             double max_half_width = kDefaultMaxHalfWidth);

/// ||f||_p over the real line. p must belong to f's membership set and be finite.
NormEstimate lp_norm_line(const TestFunction& f, double p, const QuadratureSpec& quad,
                          double max_half_width = kDefaultMaxHalfWidth);

/// Grid maximum upgraded to an upper bound via the Bernstein modulus bound
///   |F(x) - F(y)| <= 2 sin(sigma |x - y| / 2) ||F||_inf,   sigma |x - y| <= pi.
/// Every point is within h/2 of the grid, so
///   ||F||_inf <= grid_max / (1 - 2 sin(sigma h / 4)).
/// The bound covers [a, b] when ||F||_inf is attained there (periodic F over a
/// full period, or F decaying outside).
struct SupNormCertificate {
  double grid_max = 0.0;
  double argmax = 0.0;
  double spacing = 0.0;
  double contraction = 0.0;
  double certified_bound = 0.0;
  std::size_t n_points = 0;
};

/// Largest spacing h with 2 sin(sigma h / 4) <= contraction.
double certificate_spacing(double sigma, double contraction);

SupNormCertificate sup_norm_certified(const LineFunction& F, double sigma_eff, double a, double b,
                                      double target_contraction = 0.1);

/// Sup norm of f on the real line: the certificate runs on [-X, X] with X
/// doubled until the decay envelope at X is below the grid maximum.
SupNormCertificate sup_norm_line(const TestFunction& f, double target_contraction = 0.1);

}  // namespace trigapprox

#endif  // TRIGAPPROX_NORMS_HPP
