#ifndef TRIGAPPROX_KERNELS_HPP
#define TRIGAPPROX_KERNELS_HPP

#include <complex>
#include <cstdint>

namespace trigapprox {

/// sin(u)/u with the removable singularity filled in. Below |u| < 1e-4 a
/// degree-6 Taylor polynomial is used.
double sin_ratio(double u);
std::complex<double> sin_ratio(std::complex<double> z);

/// (sin(u)/u)^2, same switchover.
double sin_ratio_squared(double u);

/// floor(sigma * tau / pi), with the quotient snapped to an integer when it
/// sits within a few ulps of one (sigma = pi, tau = 5 gives 5, not 4).
std::int64_t band_index(double sigma, double tau);

/// Dirichlet kernel D_N(xi) = sum_{|k|<=N} e^{ik xi} = sin((N+1/2)xi)/sin(xi/2).
double dirichlet(std::int64_t n, double xi);

/// sin(sigma v) / (pi v), sigma/pi at v = 0.
double sinc_kernel(double sigma, double v);

/// omega(t) = 1/t - cot t on |t| < pi. Odd, increasing on (0, pi).
/// Throws DomainError for |t| >= pi.
double omega(double t);

/// sinc_kernel(sigma, v) - D_N(pi v / tau) / (2 tau) with N = band_index(sigma, tau).
double kernel_gap(double sigma, double tau, double v);

/// (3 + omega(pi (1 + delta) / 2)) / (2 tau): the uniform bound on |kernel_gap|
/// over |v| <= (1 + delta) tau. Requires tau > 0 and 0 <= delta < 1.
double kernel_gap_bound(double tau, double delta);

struct KernelGapReport {
  double sigma = 0;
  double tau = 0;
  double delta = 0;
  std::int64_t n_points = 0;
  double observed_max = 0;
  double argmax = 0;
  double bound = 0;

  double ratio() const { return observed_max / bound; }
};

/// Smallest grid size that resolves the fastest oscillation of kernel_gap on
/// [-(1+delta)tau, (1+delta)tau].
std::int64_t kernel_gap_min_points(double sigma, double tau, double delta);

/// Scans |kernel_gap| on a uniform grid over [-(1+delta)tau, (1+delta)tau],
/// then sharpens the five largest local maxima by golden-section search.
/// n_points is raised to kernel_gap_min_points when too small; n_points < 1000
/// is rejected.
KernelGapReport kernel_gap_scan(double sigma, double tau, double delta,
                                std::int64_t n_points = 1000);

}  // namespace trigapprox

#endif  // TRIGAPPROX_KERNELS_HPP
