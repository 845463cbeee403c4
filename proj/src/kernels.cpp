#include "trigapprox/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <fmt/format.h>

#include "trigapprox/error.hpp"

namespace trigapprox {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSeriesSwitch = 1e-4;

}  // namespace

double sin_ratio(double u) {
  if (std::abs(u) < kSeriesSwitch) {
    const double u2 = u * u;
    return 1.0 - u2 / 6.0 * (1.0 - u2 / 20.0 * (1.0 - u2 / 42.0));
  }
  return std::sin(u) / u;
}

std::complex<double> sin_ratio(std::complex<double> z) {
  if (std::abs(z) < kSeriesSwitch) {
    const std::complex<double> z2 = z * z;
    return 1.0 - z2 / 6.0 * (1.0 - z2 / 20.0 * (1.0 - z2 / 42.0));
  }
  return std::sin(z) / z;
}

double sin_ratio_squared(double u) {
  if (std::abs(u) < kSeriesSwitch) {
    const double u2 = u * u;
    return 1.0 - u2 / 3.0 + 2.0 * u2 * u2 / 45.0 - u2 * u2 * u2 / 315.0;
  }
  const double s = std::sin(u) / u;
  return s * s;
}

std::int64_t band_index(double sigma, double tau) {
  if (!(sigma > 0.0) || !(tau > 0.0) || !std::isfinite(sigma * tau)) {
    throw DomainError(fmt::format("band_index needs sigma, tau > 0, got sigma = {}, tau = {}", sigma, tau));
  }
  const double q = sigma * tau / kPi;
  const double r = std::round(q);
  if (std::abs(q - r) <= 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(q))) {
    return static_cast<std::int64_t>(r);
  }
  return static_cast<std::int64_t>(std::floor(q));
}

double dirichlet(std::int64_t n, double xi) {
  if (n < 0) throw DomainError(fmt::format("dirichlet: N must be >= 0, got {}", n));
  const double r = std::remainder(xi, 2.0 * kPi);
  const double s = std::sin(0.5 * r);
  if (std::abs(s) < 1e-8) {
    double acc = 0.0;
    for (std::int64_t k = n; k >= 1; --k) acc += std::cos(static_cast<double>(k) * r);
    return 1.0 + 2.0 * acc;
  }
  return std::sin((static_cast<double>(n) + 0.5) * r) / s;
}

double sinc_kernel(double sigma, double v) { return sigma / kPi * sin_ratio(sigma * v); }

double omega(double t) {
  if (!(std::abs(t) < kPi)) throw DomainError(fmt::format("omega: |t| must be < pi, got {}", t));
  if (std::abs(t) < 0.1) {
    // Laurent expansion of 1/t - cot t; the next term is below 2e-15 at t = 0.1.
    const double t2 = t * t;
    return t * (1.0 / 3.0 + t2 * (1.0 / 45.0 + t2 * (2.0 / 945.0 + t2 * (1.0 / 4725.0 + t2 * (2.0 / 93555.0)))));
  }
  return 1.0 / t - std::cos(t) / std::sin(t);
}

double kernel_gap(double sigma, double tau, double v) {
  const std::int64_t n = band_index(sigma, tau);
  return sinc_kernel(sigma, v) - dirichlet(n, kPi * v / tau) / (2.0 * tau);
}

double kernel_gap_bound(double tau, double delta) {
  if (!(tau > 0.0)) throw DomainError(fmt::format("kernel_gap_bound: tau must be positive, got {}", tau));
  if (!(delta >= 0.0 && delta < 1.0)) {
    throw DomainError(fmt::format("kernel_gap_bound: delta must lie in [0, 1), got {}", delta));
  }
  return (3.0 + omega(0.5 * kPi * (1.0 + delta))) / (2.0 * tau);
}

std::int64_t kernel_gap_min_points(double sigma, double tau, double delta) {
  const double n = static_cast<double>(band_index(sigma, tau));
  const double fastest = std::max(sigma, kPi * n / tau + 1.0);
  return static_cast<std::int64_t>(std::ceil(16.0 * (1.0 + delta) * tau * fastest / kPi));
}

namespace {

// Golden-section search for the maximum of |kernel_gap| on [lo, hi].
std::pair<double, double> refine_peak(double sigma, double tau, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  auto g = [&](double v) { return std::abs(kernel_gap(sigma, tau, v)); };
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double gc = g(c), gd = g(d);
  for (int it = 0; it < 80 && (hi - lo) > 1e-14 * std::max(1.0, std::abs(lo)); ++it) {
    if (gc > gd) {
      hi = d;
      d = c;
      gd = gc;
      c = hi - inv_phi * (hi - lo);
      gc = g(c);
    } else {
      lo = c;
      c = d;
      gc = gd;
      d = lo + inv_phi * (hi - lo);
      gd = g(d);
    }
  }
  return gc > gd ? std::pair{c, gc} : std::pair{d, gd};
}

}  // namespace

KernelGapReport kernel_gap_scan(double sigma, double tau, double delta, std::int64_t n_points) {
  if (!(sigma > 0.0)) throw DomainError(fmt::format("kernel_gap_scan: sigma must be positive, got {}", sigma));
  if (n_points < 1000) throw DomainError(fmt::format("kernel_gap_scan: n_points must be >= 1000, got {}", n_points));
  KernelGapReport report;
  report.sigma = sigma;
  report.tau = tau;
  report.delta = delta;
  report.bound = kernel_gap_bound(tau, delta);
  report.n_points = std::max(n_points, kernel_gap_min_points(sigma, tau, delta));

  const double half = (1.0 + delta) * tau;
  const std::int64_t n = report.n_points;
  const double h = 2.0 * half / static_cast<double>(n - 1);
  std::vector<double> values(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    const double v = (i + 1 == n) ? half : -half + h * static_cast<double>(i);
    values[static_cast<std::size_t>(i)] = std::abs(kernel_gap(sigma, tau, v));
  }
  auto grid = [&](std::int64_t i) { return (i + 1 == n) ? half : -half + h * static_cast<double>(i); };

  std::vector<std::int64_t> peaks;
  for (std::int64_t i = 0; i < n; ++i) {
    const double left = i > 0 ? values[static_cast<std::size_t>(i - 1)] : -1.0;
    const double right = i + 1 < n ? values[static_cast<std::size_t>(i + 1)] : -1.0;
    const double here = values[static_cast<std::size_t>(i)];
    if (here >= left && here >= right) peaks.push_back(i);
  }
  std::stable_sort(peaks.begin(), peaks.end(), [&](std::int64_t a, std::int64_t b) {
    return values[static_cast<std::size_t>(a)] > values[static_cast<std::size_t>(b)];
  });

  report.observed_max = values[static_cast<std::size_t>(peaks.front())];
  report.argmax = grid(peaks.front());
  const std::size_t top = std::min<std::size_t>(5, peaks.size());
  for (std::size_t j = 0; j < top; ++j) {
    const std::int64_t i = peaks[j];
    const double lo = grid(std::max<std::int64_t>(i - 1, 0));
    const double hi = grid(std::min<std::int64_t>(i + 1, n - 1));
    const auto [v, g] = refine_peak(sigma, tau, lo, hi);
    if (g > report.observed_max) {
      report.observed_max = g;
      report.argmax = v;
    }
  }
  return report;
}

}  // namespace trigapprox
