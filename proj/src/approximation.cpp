#include "trigapprox/approximation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>
#include <json.hpp>

#include "trigapprox/error.hpp"
#include "trigapprox/kernels.hpp"

namespace trigapprox {

namespace {

constexpr double kPi = std::numbers::pi;

void require_tau(double tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) throw DomainError(fmt::format("tau must be positive, got {}", tau));
}

// Per-integral tolerance so that the 1/(2 tau)-scaled result meets abs_tol.
QuadratureSpec scaled_spec(const QuadratureSpec& quad, double tau) {
  QuadratureSpec s = quad;
  s.abs_tol = quad.abs_tol * 2.0 * tau;
  s.rel_tol = std::min(quad.rel_tol, 1e-14);
  return s;
}

}  // namespace

TrigApproximant::TrigApproximant(double tau, double sigma, std::vector<cplx> coefficients, double coeff_error)
    : tau_(tau), sigma_(sigma), n_(0), coefficients_(std::move(coefficients)), coeff_error_(coeff_error) {
  require_tau(tau);
  if (!(sigma > 0.0)) throw DomainError(fmt::format("sigma must be positive, got {}", sigma));
  n_ = band_index(sigma, tau);
  if (coefficients_.size() != static_cast<std::size_t>(2 * n_ + 1)) {
    throw DomainError(fmt::format("approximant with N = {} needs {} coefficients, got {}", n_, 2 * n_ + 1,
                                  coefficients_.size()));
  }
  if (!(coeff_error >= 0.0)) throw DomainError("coeff_error must be nonnegative");
}

const cplx& TrigApproximant::coefficient(std::int64_t k) const {
  if (k < -n_ || k > n_) throw DomainError(fmt::format("coefficient index {} outside [-{}, {}]", k, n_, n_));
  return coefficients_[static_cast<std::size_t>(k + n_)];
}

std::string TrigApproximant::to_json() const {
  nlohmann::ordered_json doc;
  doc["tau"] = tau_;
  doc["sigma"] = sigma_;
  doc["N"] = n_;
  auto coeffs = nlohmann::json::array();
  for (const auto& c : coefficients_) coeffs.push_back({c.real(), c.imag()});
  doc["coefficients"] = std::move(coeffs);
  doc["coeff_error"] = coeff_error_;
  return doc.dump(2) + "\n";
}

TrigApproximant TrigApproximant::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
    const double tau = doc.at("tau").get<double>();
    const double sigma = doc.at("sigma").get<double>();
    const auto n = doc.at("N").get<std::int64_t>();
    std::vector<cplx> coeffs;
    for (const auto& pair : doc.at("coefficients")) {
      if (pair.size() != 2) throw DomainError("each coefficient must be a [re, im] pair");
      coeffs.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
    }
    TrigApproximant a(tau, sigma, std::move(coeffs), doc.at("coeff_error").get<double>());
    if (a.degree() != n) throw DomainError(fmt::format("stored N = {} disagrees with floor(sigma tau / pi) = {}", n, a.degree()));
    return a;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(fmt::format("malformed approximant document: {}", e.what()));
  }
}

double coefficient_panel_width(double tau, std::int64_t n) {
  return std::min(1.0, tau / (2.0 * static_cast<double>(n + 1)));
}

TrigApproximant fourier_coefficients(const TestFunction& f, double tau, const QuadratureSpec& quad) {
  require_tau(tau);
  quad.validate();
  const std::int64_t n = band_index(f.sigma(), tau);
  const QuadratureSpec spec = scaled_spec(quad, tau);
  const double width = coefficient_panel_width(tau, n);
  std::vector<cplx> coeffs;
  coeffs.reserve(static_cast<std::size_t>(2 * n + 1));
  for (std::int64_t k = -n; k <= n; ++k) {
    const double freq = kPi * static_cast<double>(k) / tau;
    auto integrand = [&](double t) { return f(t) * std::polar(1.0, -freq * t); };
    try {
      const auto r = integrate(integrand, -tau, tau, spec, width);
      coeffs.push_back(r.value / (2.0 * tau));
    } catch (const QuadratureError& e) {
      throw QuadratureError(fmt::format("coefficient k = {} of {} at tau = {}: {}", k, f.id(), tau, e.what()));
    }
  }
  return TrigApproximant(tau, f.sigma(), std::move(coeffs), static_cast<double>(2 * n + 1) * quad.abs_tol);
}

TrigApproximant exponential_approximant(double tau) {
  require_tau(tau);
  const std::int64_t n = band_index(1.0, tau);
  std::vector<cplx> coeffs(static_cast<std::size_t>(2 * n + 1));
  const double s = std::sin(tau);
  for (std::int64_t k = -n; k <= n; ++k) {
    const double gap = tau - kPi * static_cast<double>(k);
    double c;
    if (std::abs(gap) <= 8.0 * std::numeric_limits<double>::epsilon() * tau) {
      // tau = pi k: e^{ix} is itself the k-th basis function.
      c = 1.0;
    } else if (std::abs(tau - kPi * std::round(tau / kPi)) <= 8.0 * std::numeric_limits<double>::epsilon() * tau) {
      c = 0.0;
    } else {
      c = ((k % 2 == 0) ? 1.0 : -1.0) * s / gap;
    }
    coeffs[static_cast<std::size_t>(k + n)] = c;
  }
  return TrigApproximant(tau, 1.0, std::move(coeffs), 0.0);
}

cplx evaluate_sum(const TrigApproximant& a, double x) {
  const std::int64_t n = a.degree();
  const double theta = kPi * x / a.tau();
  cplx acc{};
  for (std::int64_t k = n; k >= 1; --k) {
    const cplx e = std::polar(1.0, static_cast<double>(k) * theta);
    acc += a.coefficient(k) * e + a.coefficient(-k) * std::conj(e);
  }
  return acc + a.coefficient(0);
}

QuadratureResult<cplx> evaluate_convolution(const TestFunction& f, double tau, double x, const QuadratureSpec& quad) {
  require_tau(tau);
  quad.validate();
  const std::int64_t n = band_index(f.sigma(), tau);
  auto integrand = [&](double t) { return f(t) * dirichlet(n, kPi * (x - t) / tau); };
  auto r = integrate(integrand, -tau, tau, scaled_spec(quad, tau), coefficient_panel_width(tau, n));
  r.value /= 2.0 * tau;
  r.error /= 2.0 * tau;
  return r;
}

cplx truncated(const TrigApproximant& a, double x) {
  return std::abs(x) <= a.tau() ? evaluate_sum(a, x) : cplx{};
}

double lewitan_tail_bound(const Decay& decay, double tau, double x, std::int64_t K, LewitanMode mode) {
  // For |k| > K > |x|/tau:  |x/tau + k| >= |k| - u  and  |x + k tau| >= tau (|k| - u),
  // so each side is bounded by  C (1 + tau (K - u))^{-a} int_K^inf (s - u)^{-2} ds.
  const double u = std::abs(x) / tau;
  const double gap = static_cast<double>(K) - u;
  if (!(gap > 0.0)) return kInf;
  const double weight = mode == LewitanMode::Classical ? 1.0 / (kPi * kPi) : 1.0;
  return 2.0 * weight * decay.scale * std::pow(1.0 + tau * gap, -decay.exponent) / gap;
}

LewitanResult lewitan(const TestFunction& f, double tau, double x, std::int64_t K, LewitanMode mode) {
  require_tau(tau);
  if (K < 0) throw DomainError(fmt::format("lewitan: K must be >= 1 (or 0 for automatic), got {}", K));
  if (K == 0) {
    // Doubling then bisection for the smallest K meeting the tail target.
    const auto floor_k = static_cast<std::int64_t>(std::floor(std::abs(x) / tau)) + 1;
    std::int64_t hi = std::max<std::int64_t>(floor_k, 1);
    while (hi < kMaxLewitanTerms && lewitan_tail_bound(f.decay(), tau, x, hi, mode) > kLewitanTailTarget) {
      hi = std::min(hi * 2, kMaxLewitanTerms);
    }
    std::int64_t lo = std::max<std::int64_t>(floor_k, 1);
    if (lewitan_tail_bound(f.decay(), tau, x, hi, mode) <= kLewitanTailTarget) {
      while (lo < hi) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (lewitan_tail_bound(f.decay(), tau, x, mid, mode) <= kLewitanTailTarget) hi = mid;
        else lo = mid + 1;
      }
    }
    K = hi;
  }

  const double u = x / tau;
  auto term = [&](std::int64_t k) {
    const double s = u + static_cast<double>(k);
    const double w = mode == LewitanMode::Classical ? sin_ratio_squared(kPi * s) : sin_ratio_squared(s);
    return f(x + static_cast<double>(k) * tau) * w;
  };
  // Smallest terms first.
  cplx acc{};
  for (std::int64_t k = K; k >= 1; --k) acc += term(k) + term(-k);
  LewitanResult out;
  out.value = acc + term(0);
  out.terms = K;
  out.tail_bound = lewitan_tail_bound(f.decay(), tau, x, K, mode);
  return out;
}

}  // namespace trigapprox
