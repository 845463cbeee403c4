// Test-only helpers: fixture loading and brute-force oracles that share no
// code path with the library.
#ifndef TRIGAPPROX_TESTS_SUPPORT_HPP
#define TRIGAPPROX_TESTS_SUPPORT_HPP

#include <cmath>
#include <complex>
#include <fstream>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "trigapprox/functions.hpp"

namespace trigapprox::testing {

inline constexpr double kPi = std::numbers::pi;

inline const nlohmann::json& fixtures() {
  static const nlohmann::json doc = [] {
    std::ifstream in(TRIGAPPROX_FIXTURES);
    if (!in) throw std::runtime_error("cannot open fixture file " TRIGAPPROX_FIXTURES);
    return nlohmann::json::parse(in);
  }();
  return doc;
}

/// sum_{|k|<=N} e^{ik xi} term by term.
inline std::complex<double> direct_dirichlet(long n, double xi) {
  std::complex<double> acc{};
  for (long k = -n; k <= n; ++k) acc += std::exp(std::complex<double>(0.0, static_cast<double>(k) * xi));
  return acc;
}

/// sin(sigma v) / (pi v) from its Maclaurin series, `terms` terms.
inline double taylor_sinc_kernel(double sigma, double v, int terms = 50) {
  const double u = sigma * v;
  double term = 1.0, acc = 0.0;
  for (int j = 0; j < terms; ++j) {
    acc += term;
    term *= -u * u / ((2.0 * j + 2.0) * (2.0 * j + 3.0));
  }
  return sigma / kPi * acc;
}

/// Composite Simpson on `panels` (even) subintervals.
template <class F>
auto simpson(F&& f, double a, double b, long panels) {
  const double h = (b - a) / static_cast<double>(panels);
  auto acc = f(a) + f(b);
  for (long i = 1; i < panels; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(a + h * static_cast<double>(i));
  return acc * (h / 3.0);
}

/// max |F| over a uniform grid with `points` points.
inline double dense_grid_max(const std::function<std::complex<double>(double)>& F, double a, double b, long points) {
  double best = 0.0;
  for (long i = 0; i < points; ++i) {
    const double x = a + (b - a) * static_cast<double>(i) / static_cast<double>(points - 1);
    best = std::max(best, std::abs(F(x)));
  }
  return best;
}

/// A TestFunction assembled from a plain evaluator (no analytic extension).
inline TestFunction custom_function(std::string id, double sigma, std::function<cplx(double)> eval, Decay decay,
                                    PMembership membership, bool real_valued = true) {
  TestFunctionParts parts;
  parts.id = std::move(id);
  parts.sigma = sigma;
  parts.eval_real = std::move(eval);
  parts.decay = decay;
  parts.membership = membership;
  parts.real_valued = real_valued;
  return TestFunction(std::move(parts));
}

inline TestFunction zero_function(double sigma = 1.0) {
  return custom_function("zero", sigma, [](double) { return cplx{}; }, Decay{0.0, 2.0}, PMembership::closed_from(1.0));
}

}  // namespace trigapprox::testing

#endif  // TRIGAPPROX_TESTS_SUPPORT_HPP
