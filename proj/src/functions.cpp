#include "trigapprox/functions.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "trigapprox/error.hpp"
#include "trigapprox/kernels.hpp"

namespace trigapprox {

namespace {

constexpr double kPi = std::numbers::pi;

// Rounds envelope constants up so they stay valid after floating-point noise.
double round_up(double v) { return std::nextafter(v * (1.0 + 1e-12), kInf); }

std::string format_number(double v) { return fmt::format("{}", v); }

}  // namespace

double Decay::operator()(double x) const { return scale / std::pow(1.0 + std::abs(x), exponent); }

double Decay::tail_integral(double p, double X) const {
  const double q = exponent * p;
  if (q <= 1.0) return kInf;
  return 2.0 * std::pow(scale, p) * std::pow(1.0 + X, 1.0 - q) / (q - 1.0);
}

std::string PMembership::describe() const {
  if (std::isinf(lower_)) return "{inf}";
  return fmt::format("{}{}, inf]", closed_ ? "[" : "(", lower_);
}

TestFunction::TestFunction(TestFunctionParts parts) : parts_(std::move(parts)) {
  if (!(parts_.sigma > 0.0) || !std::isfinite(parts_.sigma)) {
    throw DomainError(fmt::format("function '{}': sigma must be positive, got {}", parts_.id, parts_.sigma));
  }
  if (!parts_.eval_real) throw DomainError(fmt::format("function '{}': missing real evaluator", parts_.id));
  if (parts_.decay.scale < 0.0 || parts_.decay.exponent < 0.0) {
    throw DomainError(fmt::format("function '{}': decay envelope must be nonnegative", parts_.id));
  }
}

std::optional<double> TestFunction::known_norm(double p) const {
  auto it = parts_.known_norms.find(p);
  if (it == parts_.known_norms.end()) return std::nullopt;
  return it->second;
}

cplx TestFunction::at(cplx z) const {
  if (!parts_.eval_complex) {
    throw UnsupportedError(fmt::format("function '{}': complex evaluation not supported", parts_.id));
  }
  return parts_.eval_complex(z);
}

Decay TestFunction::line_decay(double y) const {
  if (!parts_.line_decay) {
    throw UnsupportedError(fmt::format("function '{}': no envelope off the real axis", parts_.id));
  }
  return parts_.line_decay(y);
}

TestFunction make_sinc(double sigma) {
  if (!(sigma > 0.0)) throw DomainError(fmt::format("sinc: sigma must be positive, got {}", sigma));
  TestFunctionParts parts;
  parts.id = "sinc:sigma=" + format_number(sigma);
  parts.sigma = sigma;
  parts.eval_real = [sigma](double x) { return cplx(sigma / kPi * sin_ratio(sigma * x), 0.0); };
  parts.eval_complex = [sigma](cplx z) { return sigma / kPi * sin_ratio(sigma * z); };
  // |f| <= min(sigma/pi, 1/(pi|x|)) <= (1 + sigma) / (pi (1 + |x|)); off the axis
  // both pieces pick up a factor e^{sigma|y|}.
  const double c = round_up((1.0 + sigma) / kPi);
  parts.decay = {c, 1.0};
  parts.line_decay = [sigma, c](double y) { return Decay{round_up(c * std::exp(sigma * std::abs(y))), 1.0}; };
  parts.membership = PMembership::open_from(1.0);
  parts.known_norms = {{2.0, std::sqrt(sigma / kPi)}, {kInf, sigma / kPi}};
  return TestFunction(std::move(parts));
}

TestFunction make_complex_exponential(double omega) {
  if (omega == 0.0 || !std::isfinite(omega)) {
    throw DomainError("cexp: omega must be a nonzero real number");
  }
  TestFunctionParts parts;
  parts.id = "cexp:omega=" + format_number(omega);
  parts.sigma = std::abs(omega);
  parts.eval_real = [omega](double x) { return std::polar(1.0, omega * x); };
  parts.eval_complex = [omega](cplx z) { return std::exp(cplx(0.0, omega) * z); };
  parts.decay = {1.0, 0.0};
  parts.line_decay = [omega](double y) { return Decay{round_up(std::exp(-omega * y)), 0.0}; };
  parts.membership = PMembership::infinity_only();
  parts.known_norms = {{kInf, 1.0}};
  parts.real_valued = false;
  return TestFunction(std::move(parts));
}

TestFunction make_fejer_square(double sigma) {
  if (!(sigma > 0.0)) throw DomainError(fmt::format("fejer: sigma must be positive, got {}", sigma));
  TestFunctionParts parts;
  parts.id = "fejer:sigma=" + format_number(sigma);
  parts.sigma = sigma;
  parts.eval_real = [sigma](double x) { return cplx(sin_ratio_squared(0.5 * sigma * x), 0.0); };
  parts.eval_complex = [sigma](cplx z) {
    const cplx s = sin_ratio(0.5 * sigma * z);
    return s * s;
  };
  // |f| <= min(1, 4/(sigma x)^2), and (1+|x|)^2 times that peaks at |x| = 2/sigma.
  const double c = round_up((1.0 + 2.0 / sigma) * (1.0 + 2.0 / sigma));
  parts.decay = {c, 2.0};
  parts.line_decay = [sigma, c](double y) { return Decay{round_up(c * std::exp(sigma * std::abs(y))), 2.0}; };
  parts.membership = PMembership::closed_from(1.0);
  parts.known_norms = {{1.0, 2.0 * kPi / sigma}, {2.0, std::sqrt(4.0 * kPi / (3.0 * sigma))}, {kInf, 1.0}};
  return TestFunction(std::move(parts));
}

TestFunction mollify(const TestFunction& f, double rho) {
  if (!(rho > 0.0 && rho < 1.0)) throw DomainError(fmt::format("mollify: rho must lie in (0, 1), got {}", rho));
  const double shrink = 1.0 - rho * rho;
  TestFunctionParts parts;
  parts.id = fmt::format("mollify:rho={}/{}", format_number(rho), f.id());
  parts.sigma = 2.0 * rho + shrink * f.sigma();
  parts.base_sigma = f.base_sigma() > 0.0 ? f.base_sigma() : f.sigma();
  parts.eval_real = [f, rho, shrink](double x) { return sin_ratio_squared(rho * x) * f(shrink * x); };
  if (f.supports_complex()) {
    parts.eval_complex = [f, rho, shrink](cplx z) {
      const cplx w = sin_ratio(rho * z);
      return w * w * f.at(shrink * z);
    };
  }
  // Weight: min(1, 1/(rho x)^2) <= (1 + 1/rho)^2 / (1 + |x|)^2.
  // Base: C/(1 + shrink |x|)^a <= C shrink^{-a} / (1 + |x|)^a.
  const double weight = (1.0 + 1.0 / rho) * (1.0 + 1.0 / rho);
  const Decay base = f.decay();
  parts.decay = {round_up(weight * base.scale / std::pow(shrink, base.exponent)), base.exponent + 2.0};
  if (f.parts().line_decay) {
    parts.line_decay = [f, rho, shrink, weight](double y) {
      const Decay b = f.line_decay(shrink * y);
      return Decay{round_up(std::exp(2.0 * rho * std::abs(y)) * weight * b.scale / std::pow(shrink, b.exponent)),
                   b.exponent + 2.0};
    };
  }
  parts.membership = PMembership::closed_from(1.0);
  parts.real_valued = f.real_valued();
  return TestFunction(std::move(parts));
}

namespace {

double parse_number(std::string_view text, std::string_view whole) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw DomainError(fmt::format("malformed number '{}' in function id '{}'", text, whole));
  }
  return v;
}

std::vector<std::pair<std::string_view, double>> parse_params(std::string_view list, std::string_view whole) {
  std::vector<std::pair<std::string_view, double>> out;
  while (!list.empty()) {
    const auto comma = list.find(',');
    const std::string_view item = list.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw DomainError(fmt::format("expected key=value, got '{}' in function id '{}'", item, whole));
    }
    out.emplace_back(item.substr(0, eq), parse_number(item.substr(eq + 1), whole));
    list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
  }
  return out;
}

double single_param(const std::vector<std::pair<std::string_view, double>>& params, std::string_view key,
                    std::string_view whole) {
  if (params.size() != 1 || params.front().first != key) {
    throw DomainError(fmt::format("function id '{}' takes exactly one parameter '{}'", whole, key));
  }
  return params.front().second;
}

}  // namespace

TestFunction parse_function_id(std::string_view id) {
  const auto colon = id.find(':');
  if (colon == std::string_view::npos) {
    throw DomainError(fmt::format("malformed function id '{}': expected name:key=value", id));
  }
  const std::string_view name = id.substr(0, colon);
  std::string_view rest = id.substr(colon + 1);

  if (name == "mollify") {
    const auto slash = rest.find('/');
    if (slash == std::string_view::npos) {
      throw DomainError(fmt::format("malformed function id '{}': expected mollify:rho=R/<base>", id));
    }
    const double rho = single_param(parse_params(rest.substr(0, slash), id), "rho", id);
    return mollify(parse_function_id(rest.substr(slash + 1)), rho);
  }

  const auto params = parse_params(rest, id);
  if (name == "sinc") return make_sinc(single_param(params, "sigma", id));
  if (name == "fejer") return make_fejer_square(single_param(params, "sigma", id));
  if (name == "cexp" || name == "exp") return make_complex_exponential(single_param(params, "omega", id));
  throw DomainError(fmt::format("unknown function '{}' in id '{}'", name, id));
}

}  // namespace trigapprox
