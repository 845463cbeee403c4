#include "trigapprox/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "trigapprox/error.hpp"
#include "trigapprox/kernels.hpp"

namespace trigapprox {

namespace {

constexpr double kPi = std::numbers::pi;

// A norm as an interval [value - err, value + err]. Sup norms use the grid
// maximum as the value and the certificate gap as the error.
struct NormValue {
  double value;
  double error;
};

NormValue norm_of(const TestFunction& f, double r, const QuadratureSpec& quad) {
  if (std::isinf(r)) {
    const auto cert = sup_norm_line(f);
    return {cert.grid_max, cert.certified_bound - cert.grid_max};
  }
  const auto est = lp_norm_line(f, r, quad);
  return {est.value, est.error_bound};
}

// (a^p + b^p)^(1/p) with the error propagated through the interval ends.
std::pair<double, double> combine_power(const NormEstimate& a, const NormEstimate& b, double p) {
  auto combine = [p](double x, double y) { return std::pow(std::pow(x, p) + std::pow(y, p), 1.0 / p); };
  const double value = combine(a.value, b.value);
  const double hi = combine(a.upper(), b.upper());
  const double lo = combine(a.lower(), b.lower());
  return {value, std::max(hi - value, value - lo)};
}

}  // namespace

InequalityCheck check_plancherel_polya(const TestFunction& f, double y, double p, const QuadratureSpec& quad) {
  quad.validate();
  if (!f.supports_complex()) throw UnsupportedError(fmt::format("{}: complex evaluation not supported", f.id()));
  if (!std::isfinite(p) || !f.membership().contains(p)) {
    throw DomainError(fmt::format("{}: Plancherel-Polya check needs finite p in {}, got {}", f.id(),
                                  f.membership().describe(), p));
  }
  const LineFunction shifted = [&f, y](double x) { return f.at(cplx(x, y)); };
  const auto lhs = lp_norm_outside(shifted, f.line_decay(y), f.sigma(), p, 0.0, quad);
  const auto base = lp_norm_line(f, p, quad);
  const double growth = std::exp(f.sigma() * std::abs(y));
  InequalityCheck c;
  c.lhs = lhs.value;
  c.rhs = base.value * growth;
  c.margin = c.rhs - c.lhs;
  c.error_bound = lhs.error_bound + base.error_bound * growth;
  return c;
}

InequalityCheck check_nikolskii(const TestFunction& f, double r1, double r2, const QuadratureSpec& quad) {
  quad.validate();
  if (!(r1 >= 1.0 && r1 <= r2)) {
    throw DomainError(fmt::format("Nikolskii check needs 1 <= r1 <= r2 <= inf, got r1 = {}, r2 = {}", r1, r2));
  }
  if (!f.membership().contains(r1)) {
    throw DomainError(fmt::format("{}: r1 = {} outside membership {}", f.id(), r1, f.membership().describe()));
  }
  const NormValue lhs = norm_of(f, r2, quad);
  const NormValue base = norm_of(f, r1, quad);
  const double inv1 = std::isinf(r1) ? 0.0 : 1.0 / r1;
  const double inv2 = std::isinf(r2) ? 0.0 : 1.0 / r2;
  const double factor = 2.0 * std::pow(f.sigma(), inv1 - inv2);
  InequalityCheck c;
  c.lhs = lhs.value;
  c.rhs = factor * base.value;
  c.margin = c.rhs - c.lhs;
  c.error_bound = lhs.error + factor * base.error;
  return c;
}

InequalityCheck check_poly_nikolskii(const TrigApproximant& a, double p, const QuadratureSpec& quad) {
  quad.validate();
  if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError(fmt::format("p must satisfy 1 <= p < inf, got {}", p));
  const std::int64_t n = a.degree();
  if (n < 1) throw DomainError("polynomial Nikolskii check needs degree N >= 1");
  const LineFunction q = [&a](double t) { return evaluate_sum(a, a.tau() * t / kPi); };
  // Q is 2 pi periodic, so its sup over one period is its sup on the line.
  const auto cert = sup_norm_certified(q, static_cast<double>(n), -kPi, kPi, 0.1);
  const auto norm = lp_norm_interval(q, p, -kPi, kPi, quad, std::min(1.0, kPi / static_cast<double>(n)));
  const double factor = 2.0 * std::pow(static_cast<double>(n), 1.0 / p);
  InequalityCheck c;
  c.lhs = cert.grid_max;
  c.rhs = factor * norm.value;
  c.margin = c.rhs - c.lhs;
  c.error_bound = (cert.certified_bound - cert.grid_max) + factor * norm.error_bound;
  return c;
}

Decomposition decomposition_F123(const TestFunction& f, double tau, double delta, double x,
                                 const QuadratureSpec& quad) {
  quad.validate();
  if (!(tau > 0.0)) throw DomainError(fmt::format("tau must be positive, got {}", tau));
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError(fmt::format("delta must lie in (0, 1), got {}", delta));
  if (!(std::abs(x) <= tau)) throw DomainError(fmt::format("x = {} outside [-tau, tau]", x));
  if (!f.membership().contains(1.0)) {
    throw DomainError(fmt::format("{}: decomposition needs an L^1 function, membership is {}", f.id(),
                                  f.membership().describe()));
  }
  const double sigma = f.sigma();
  const std::int64_t n = band_index(sigma, tau);
  const double inner = delta * tau;
  const double width = coefficient_panel_width(tau, n);
  QuadratureSpec spec = quad;
  spec.rel_tol = std::min(quad.rel_tol, 1e-14);

  Decomposition d;
  {
    auto integrand = [&](double t) { return f(t) * sinc_kernel(sigma, x - t); };
    const auto r = integrate(integrand, -inner, inner, spec, width);
    d.f1 = f(x) - r.value;
    d.f1_error = r.error;
  }
  {
    auto integrand = [&](double t) { return f(t) * kernel_gap(sigma, tau, x - t); };
    const auto r = integrate(integrand, -inner, inner, spec, width);
    d.f2 = r.value;
    d.f2_error = r.error;
  }
  {
    auto integrand = [&](double t) { return f(t) * dirichlet(n, kPi * (x - t) / tau); };
    QuadratureSpec scaled = spec;
    scaled.abs_tol = quad.abs_tol * tau;  // each half, before the 1/(2 tau) factor
    const auto left = integrate(integrand, -tau, -inner, scaled, width);
    const auto right = integrate(integrand, inner, tau, scaled, width);
    d.f3 = (left.value + right.value) / (2.0 * tau);
    d.f3_error = (left.error + right.error) / (2.0 * tau);
  }
  return d;
}

std::vector<ConvergenceRecord> convergence_study(const TestFunction& f, double p, const std::vector<double>& taus,
                                                 const QuadratureSpec& quad, double contraction) {
  quad.validate();
  if (!(p > 1.0) || !std::isfinite(p)) throw DomainError(fmt::format("p must satisfy 1 < p < inf, got {}", p));
  if (!f.membership().contains(p)) {
    throw DomainError(fmt::format("{}: p = {} outside membership {}", f.id(), p, f.membership().describe()));
  }
  if (taus.empty()) throw DomainError("convergence study needs at least one tau");
  for (std::size_t i = 0; i < taus.size(); ++i) {
    if (!(taus[i] > 0.0)) throw DomainError(fmt::format("tau must be positive, got {}", taus[i]));
    if (i > 0 && !(taus[i] > taus[i - 1])) throw DomainError("tau list must be strictly increasing");
  }

  std::vector<ConvergenceRecord> records;
  records.reserve(taus.size());
  for (const double tau : taus) {
    const TrigApproximant approx = fourier_coefficients(f, tau, quad);
    const LineFunction diff = [&f, &approx](double x) { return f(x) - evaluate_sum(approx, x); };
    const double sigma_eff = std::max(f.sigma(), kPi * static_cast<double>(approx.degree()) / tau);

    ConvergenceRecord rec;
    rec.tau = tau;
    rec.p = p;
    rec.degree = approx.degree();
    rec.interior_error = lp_norm_interval(diff, p, -tau, tau, quad, std::min(1.0, kPi / (p * sigma_eff)));
    rec.tail_error = lp_norm_outside([&f](double x) { return f(x); }, f.decay(), f.sigma(), p, tau, quad);
    std::tie(rec.total_error, rec.total_error_bound) = combine_power(rec.interior_error, rec.tail_error, p);
    rec.sup_error = sup_norm_certified(diff, sigma_eff, -tau, tau, contraction);
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<CounterexampleRow> counterexample_run(const std::vector<int>& ms) {
  std::vector<CounterexampleRow> rows;
  rows.reserve(ms.size());
  for (const int m : ms) {
    if (m < 1) throw DomainError(fmt::format("counterexample: m must be a positive integer, got {}", m));
    const double tau = kPi / 2.0 + 2.0 * kPi * static_cast<double>(m);
    const TrigApproximant approx = exponential_approximant(tau);
    const cplx gap = std::polar(1.0, tau) - evaluate_sum(approx, tau);
    rows.push_back({m, tau, gap.imag()});
  }
  return rows;
}

}  // namespace trigapprox
