#ifndef TRIGAPPROX_ANALYSIS_HPP
#define TRIGAPPROX_ANALYSIS_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "trigapprox/approximation.hpp"
#include "trigapprox/functions.hpp"
#include "trigapprox/norms.hpp"
#include "trigapprox/quadrature.hpp"

namespace trigapprox {

/// Outcome of checking  lhs <= rhs  numerically. margin = rhs - lhs; the
/// inequality is confirmed when margin >= -error_bound.
struct InequalityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  double error_bound = 0.0;

  bool holds() const { return margin >= -error_bound; }
};

/// (int |f(x+iy)|^p dx)^(1/p) <= ||f||_p e^{sigma |y|}.
InequalityCheck check_plancherel_polya(const TestFunction& f, double y, double p, const QuadratureSpec& quad);

/// ||f||_{r2} <= 2 sigma^{1/r1 - 1/r2} ||f||_{r1}, 1 <= r1 <= r2 <= inf.
/// Sup norms enter as the grid maximum with the certificate gap added to
/// the error bound.
InequalityCheck check_nikolskii(const TestFunction& f, double r1, double r2, const QuadratureSpec& quad);

/// For Q(t) = f_tau(tau t / pi) on (-pi, pi]:  ||Q||_inf <= 2 N^{1/p} ||Q||_{L^p(-pi, pi)}.
InequalityCheck check_poly_nikolskii(const TrigApproximant& a, double p, const QuadratureSpec& quad);

/// The three pieces of f - f_tau used in the L^p convergence argument:
///   F1(x) = f(x) - int_{|t|<=delta tau} f(t) K_sigma(x - t) dt
///   F2(x) = int_{|t|<=delta tau} f(t) [K_sigma(x - t) - D_N(pi (x - t)/tau)/(2 tau)] dt
///   F3(x) = 1/(2 tau) int_{delta tau <= |t| <= tau} f(t) D_N(pi (x - t)/tau) dt
/// with K_sigma the sinc kernel, so that F1 + F2 - F3 = f - f_tau.
struct Decomposition {
  cplx f1, f2, f3;
  double f1_error = 0.0;
  double f2_error = 0.0;
  double f3_error = 0.0;

  cplx combined() const { return f1 + f2 - f3; }
  double combined_error() const { return f1_error + f2_error + f3_error; }
};

Decomposition decomposition_F123(const TestFunction& f, double tau, double delta, double x,
                                 const QuadratureSpec& quad);

struct ConvergenceRecord {
  double tau = 0.0;
  double p = 0.0;
  std::int64_t degree = 0;
  NormEstimate interior_error;  // ||f - f_tau||_{L^p(-tau, tau)}
  NormEstimate tail_error;      // ||f||_{L^p(|x| > tau)}
  double total_error = 0.0;     // (interior^p + tail^p)^(1/p) = ||f - phi_{f,tau}||_p
  double total_error_bound = 0.0;
  std::optional<SupNormCertificate> sup_error;  // f - f_tau on [-tau, tau]
};

/// Runs the L^p / sup-norm convergence experiment for each tau in taus
/// (strictly increasing). Requires 1 < p < inf with p in f's membership.
std::vector<ConvergenceRecord> convergence_study(const TestFunction& f, double p, const std::vector<double>& taus,
                                                 const QuadratureSpec& quad, double contraction = 0.1);

struct CounterexampleRow {
  int m = 0;
  double tau = 0.0;
  double imag_gap = 0.0;  // Im (f - f_tau)(tau) for f = e^{ix}
};

/// tau_m = pi/2 + 2 pi m with the closed-form coefficients of e^{ix}.
std::vector<CounterexampleRow> counterexample_run(const std::vector<int>& ms);

}  // namespace trigapprox

#endif  // TRIGAPPROX_ANALYSIS_HPP
