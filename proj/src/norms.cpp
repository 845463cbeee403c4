#include "trigapprox/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "trigapprox/error.hpp"

namespace trigapprox {

namespace {

constexpr double kPi = std::numbers::pi;

void require_finite_p(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError(fmt::format("p must satisfy 1 <= p < inf, got {}", p));
}

// Tolerances for int |g|^p so that the p-th root meets the caller's abs_tol.
QuadratureSpec power_spec(const QuadratureSpec& quad, double p) {
  QuadratureSpec s = quad;
  s.abs_tol = std::max(std::pow(quad.abs_tol, p), 1e-300);
  return s;
}

}  // namespace

std::string NormDomain::describe() const {
  switch (kind) {
    case Kind::RealLine: return "real-line";
    case Kind::Outside: return fmt::format("|x|>{}", lo);
    case Kind::Interval: break;
  }
  return fmt::format("[{},{}]", lo, hi);
}

NormEstimate norm_from_power_integral(double integral, double quad_error, double tail, double p, NormDomain domain) {
  // The true integral lies in [I - e, I + e + T]; centre on I + T/2.
  const double centre = std::max(integral + 0.5 * tail, 0.0);
  auto half_width_to_root = [&](double hw) {
    const double v = std::pow(centre, 1.0 / p);
    const double hi = std::pow(centre + hw, 1.0 / p) - v;
    const double lo = v - std::pow(std::max(centre - hw, 0.0), 1.0 / p);
    return std::max(hi, lo);
  };
  NormEstimate out;
  out.p = p;
  out.domain = domain;
  out.value = std::pow(centre, 1.0 / p);
  out.error_bound = half_width_to_root(quad_error + 0.5 * tail);
  out.tail_bound = half_width_to_root(0.5 * tail);
  return out;
}

NormEstimate lp_norm_interval(const LineFunction& g, double p, double a, double b, const QuadratureSpec& quad,
                              double max_panel_width) {
  require_finite_p(p);
  if (!(a < b)) throw DomainError(fmt::format("lp_norm_interval: need a < b, got [{}, {}]", a, b));
  auto integrand = [&](double x) { return std::pow(std::abs(g(x)), p); };
  const auto r = integrate(integrand, a, b, power_spec(quad, p), max_panel_width);
  return norm_from_power_integral(r.value, r.error, 0.0, p, {NormDomain::Kind::Interval, a, b});
}

NormEstimate lp_norm_outside(const LineFunction& g, const Decay& envelope, double sigma, double p, double inner,
                             const QuadratureSpec& quad, double max_half_width) {
  require_finite_p(p);
  if (envelope.exponent * p <= 1.0) throw DomainError("non-integrable tail envelope");
  if (!(inner >= 0.0)) throw DomainError(fmt::format("lp_norm_outside: inner radius must be >= 0, got {}", inner));

  // Smallest X with envelope tail <= abs_tol^p.
  const double q = envelope.exponent * p;
  const double target = std::pow(quad.abs_tol, p);
  double radius = std::pow(2.0 * std::pow(envelope.scale, p) / ((q - 1.0) * target), 1.0 / (q - 1.0)) - 1.0;
  if (!std::isfinite(radius)) radius = max_half_width;
  radius = std::clamp(radius, std::max(inner, 1.0) + 1.0, std::max(max_half_width, inner + 1.0));
  const double tail = envelope.tail_integral(p, radius);

  // Panels of width pi/sigma resolve |g|^p for the p values in use.
  const double width = std::min(1.0, kPi / sigma);
  auto integrand = [&](double x) { return std::pow(std::abs(g(x)), p); };
  const QuadratureSpec spec = power_spec(quad, p);
  double integral = 0.0, error = 0.0;
  if (inner == 0.0) {
    const auto r = integrate(integrand, -radius, radius, spec, width);
    integral = r.value;
    error = r.error;
  } else {
    const auto right = integrate(integrand, inner, radius, spec, width);
    const auto left = integrate(integrand, -radius, -inner, spec, width);
    integral = left.value + right.value;
    error = left.error + right.error;
  }
  NormDomain domain = inner == 0.0 ? NormDomain{NormDomain::Kind::RealLine, -kInf, kInf}
                                   : NormDomain{NormDomain::Kind::Outside, inner, kInf};
  return norm_from_power_integral(integral, error, tail, p, domain);
}

NormEstimate lp_norm_line(const TestFunction& f, double p, const QuadratureSpec& quad, double max_half_width) {
  require_finite_p(p);
  if (f.decay().exponent * p <= 1.0) throw DomainError("non-integrable tail envelope");
  if (!f.membership().contains(p)) {
    throw DomainError(fmt::format("{}: p = {} outside membership {}", f.id(), p, f.membership().describe()));
  }
  return lp_norm_outside([&f](double x) { return f(x); }, f.decay(), f.sigma(), p, 0.0, quad, max_half_width);
}

double certificate_spacing(double sigma, double contraction) {
  return 4.0 / sigma * std::asin(0.5 * contraction);
}

SupNormCertificate sup_norm_certified(const LineFunction& F, double sigma_eff, double a, double b,
                                      double target_contraction) {
  if (!(target_contraction > 0.0 && target_contraction <= 0.5)) {
    throw DomainError(fmt::format("target contraction must lie in (0, 0.5], got {}", target_contraction));
  }
  if (!(sigma_eff > 0.0)) throw DomainError(fmt::format("sigma_eff must be positive, got {}", sigma_eff));
  if (!(a <= b)) throw DomainError(fmt::format("sup_norm_certified: need a <= b, got [{}, {}]", a, b));

  SupNormCertificate cert;
  const double h_max = certificate_spacing(sigma_eff, target_contraction);
  const auto intervals = static_cast<std::size_t>(std::max(1.0, std::ceil((b - a) / h_max)));
  cert.n_points = intervals + 1;
  cert.spacing = (b - a) / static_cast<double>(intervals);
  cert.contraction = 2.0 * std::sin(sigma_eff * cert.spacing / 4.0);
  if (!(cert.contraction < 1.0)) throw DomainError("certificate contraction must be < 1");
  cert.argmax = a;
  for (std::size_t i = 0; i <= intervals; ++i) {
    const double x = (i == intervals) ? b : a + cert.spacing * static_cast<double>(i);
    const double v = std::abs(F(x));
    if (v > cert.grid_max) {
      cert.grid_max = v;
      cert.argmax = x;
    }
  }
  cert.certified_bound = cert.grid_max / (1.0 - cert.contraction);
  return cert;
}

SupNormCertificate sup_norm_line(const TestFunction& f, double target_contraction) {
  LineFunction g = [&f](double x) { return f(x); };
  double radius = 16.0 / f.sigma();
  for (;;) {
    auto cert = sup_norm_certified(g, f.sigma(), -radius, radius, target_contraction);
    // Outside [-X, X] the envelope caps |f|; allow a rounding-level excess
    // and fold it into the bound.
    const double outside = f.decay()(radius);
    if (outside <= cert.grid_max * (1.0 + 1e-12)) {
      cert.certified_bound = std::max(cert.grid_max, outside) / (1.0 - cert.contraction);
      return cert;
    }
    if (radius > 1e7) {
      throw DomainError(fmt::format("{}: decay envelope too weak to certify the sup norm on the line", f.id()));
    }
    radius *= 2.0;
  }
}

}  // namespace trigapprox
