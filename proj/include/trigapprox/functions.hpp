#ifndef TRIGAPPROX_FUNCTIONS_HPP
#define TRIGAPPROX_FUNCTIONS_HPP

#include <complex>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace trigapprox {

using cplx = std::complex<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Envelope |f(x)| <= scale / (1 + |x|)^exponent, valid on the whole line.
struct Decay {
  double scale = 0.0;
  double exponent = 0.0;

  double operator()(double x) const;

  /// Bound on  int_{|x| > X} envelope(x)^p dx. Infinite when exponent*p <= 1.
  double tail_integral(double p, double X) const;
};

/// Upward-closed set of exponents {p : p > lower} or {p : p >= lower}.
/// Upward closure mirrors the embedding B^p ⊂ B^r for p <= r.
class PMembership {
 public:
  static PMembership closed_from(double lower) { return {lower, true}; }
  static PMembership open_from(double lower) { return {lower, false}; }
  static PMembership infinity_only() { return {kInf, true}; }

  bool contains(double p) const {
    return closed_ ? p >= lower_ : p > lower_;
  }
  double lower() const { return lower_; }
  bool closed() const { return closed_; }

  std::string describe() const;

 private:
  PMembership(double lower, bool closed) : lower_(lower), closed_(closed) {}
  double lower_;
  bool closed_;
};

/// Everything needed to build a TestFunction. Catalog factories fill this in;
/// tests may assemble ad hoc members (zero function, linear combinations).
struct TestFunctionParts {
  std::string id;
  double sigma = 0.0;
  std::function<cplx(double)> eval_real;
  std::function<cplx(cplx)> eval_complex;   // optional
  std::function<Decay(double)> line_decay;  // envelope of x -> f(x+iy); optional
  Decay decay;
  PMembership membership = PMembership::infinity_only();
  std::map<double, double> known_norms;
  bool real_valued = true;
  double base_sigma = 0.0;  // metadata for mollified members; 0 otherwise
};

/// A member of the Bernstein space B^p_sigma with metadata used by the
/// quadrature and certification code. Immutable after construction and safe
/// to evaluate concurrently.
class TestFunction {
 public:
  explicit TestFunction(TestFunctionParts parts);

  const std::string& id() const { return parts_.id; }
  double sigma() const { return parts_.sigma; }
  const Decay& decay() const { return parts_.decay; }
  const PMembership& membership() const { return parts_.membership; }
  bool real_valued() const { return parts_.real_valued; }
  double base_sigma() const { return parts_.base_sigma; }
  std::optional<double> known_norm(double p) const;

  cplx operator()(double x) const { return parts_.eval_real(x); }

  bool supports_complex() const { return static_cast<bool>(parts_.eval_complex); }
  /// Throws UnsupportedError when no analytic extension is available.
  cplx at(cplx z) const;
  /// Envelope of x -> f(x + iy). Throws UnsupportedError when unavailable.
  Decay line_decay(double y) const;

  const TestFunctionParts& parts() const { return parts_; }

 private:
  TestFunctionParts parts_;
};

/// sin(sigma x) / (pi x), value sigma/pi at 0.
TestFunction make_sinc(double sigma);

/// e^{i omega x}, type |omega|, bounded but in no L^p with p < inf.
TestFunction make_complex_exponential(double omega);

/// (sin(sigma x / 2) / (sigma x / 2))^2, value 1 at 0.
TestFunction make_fejer_square(double sigma);

/// x -> sin^2(rho x)/(rho x)^2 * f((1 - rho^2) x), an L^1 member close to f
/// for small rho. Its sigma is the computed type 2 rho + (1 - rho^2) sigma_f;
/// base_sigma() keeps sigma_f.
TestFunction mollify(const TestFunction& f, double rho);

/// Parses catalog ids of the form  name:key=value[,key=value]  with
///   sinc:sigma=S   fejer:sigma=S   cexp:omega=W   mollify:rho=R/<base id>
/// Throws DomainError on unknown names, keys or malformed numbers.
TestFunction parse_function_id(std::string_view id);

}  // namespace trigapprox

#endif  // TRIGAPPROX_FUNCTIONS_HPP
