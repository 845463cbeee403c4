#ifndef TRIGAPPROX_APPROXIMATION_HPP
#define TRIGAPPROX_APPROXIMATION_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "trigapprox/functions.hpp"
#include "trigapprox/quadrature.hpp"

namespace trigapprox {

/// The trigonometric sum  f_tau(x) = sum_{|k|<=N} c_k e^{i pi k x / tau}
/// with N = floor(sigma tau / pi).
class TrigApproximant {
 public:
  /// coefficients holds c_{-N}, ..., c_N. Throws DomainError when the length
  /// is not 2N + 1 with N = band_index(sigma, tau).
  TrigApproximant(double tau, double sigma, std::vector<cplx> coefficients, double coeff_error);

  double tau() const { return tau_; }
  double sigma() const { return sigma_; }
  std::int64_t degree() const { return n_; }
  const std::vector<cplx>& coefficients() const { return coefficients_; }
  double coeff_error() const { return coeff_error_; }

  /// c_k for -N <= k <= N.
  const cplx& coefficient(std::int64_t k) const;

  std::string to_json() const;
  static TrigApproximant from_json(const std::string& text);

 private:
  double tau_;
  double sigma_;
  std::int64_t n_;
  std::vector<cplx> coefficients_;
  double coeff_error_;
};

/// Panel width used for integrands oscillating like e^{i pi N t / tau}.
double coefficient_panel_width(double tau, std::int64_t n);

/// c_k = 1/(2 tau) int_{-tau}^{tau} f(t) e^{-i pi k t / tau} dt for |k| <= N,
/// each to absolute error quad.abs_tol. coeff_error = (2N + 1) * abs_tol.
/// A QuadratureError names the offending k.
TrigApproximant fourier_coefficients(const TestFunction& f, double tau, const QuadratureSpec& quad);

/// Closed form for f = e^{ix}: c_k = (-1)^k sin(tau) / (tau - pi k), with
/// c_k = delta_{k,1} at tau = pi.
TrigApproximant exponential_approximant(double tau);

/// f_tau(x), summing c_k and c_{-k} together.
cplx evaluate_sum(const TrigApproximant& a, double x);

/// f_tau(x) computed as 1/(2 tau) int_{-tau}^{tau} f(t) D_N(pi (x - t) / tau) dt.
QuadratureResult<cplx> evaluate_convolution(const TestFunction& f, double tau, double x,
                                            const QuadratureSpec& quad);

/// phi_{f,tau}(x) = f_tau(x) on the closed interval |x| <= tau, 0 outside.
cplx truncated(const TrigApproximant& a, double x);

enum class LewitanMode {
  Verbatim,   // weights sin^2(x/tau + k) / (x/tau + k)^2
  Classical,  // weights sin^2(pi (x/tau + k)) / (pi (x/tau + k))^2, a partition of unity
};

struct LewitanResult {
  cplx value;
  double tail_bound = 0.0;  // bound on the omitted terms |k| > terms
  std::int64_t terms = 0;   // K actually used
};

/// Largest K the automatic truncation will use.
inline constexpr std::int64_t kMaxLewitanTerms = 10'000'000;

/// Tail target for the automatic choice of K.
inline constexpr double kLewitanTailTarget = 1e-8;

/// Symmetric partial sum over |k| <= K of  f(x + k tau) * weight(x/tau + k).
/// K = 0 picks the smallest K whose envelope tail bound is <= 1e-8 (capped at
/// kMaxLewitanTerms).
LewitanResult lewitan(const TestFunction& f, double tau, double x, std::int64_t K = 0,
                      LewitanMode mode = LewitanMode::Verbatim);

/// Tail bound for a Lewitan sum truncated at K (K must exceed |x|/tau).
double lewitan_tail_bound(const Decay& decay, double tau, double x, std::int64_t K, LewitanMode mode);

}  // namespace trigapprox

#endif  // TRIGAPPROX_APPROXIMATION_HPP
