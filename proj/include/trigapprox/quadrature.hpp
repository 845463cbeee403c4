#ifndef TRIGAPPROX_QUADRATURE_HPP
#define TRIGAPPROX_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <queue>
#include <type_traits>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "trigapprox/error.hpp"

namespace trigapprox {

/// Configuration of the adaptive Gauss-Legendre engine.
struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_depth = 50;
  int panel_order = 16;  // Gauss points per panel; exact to degree 2n-1

  /// Enforces abs_tol, rel_tol >= 1e-14, 1 <= max_depth <= 60, panel_order >= 1.
  void validate() const;
};

template <class T>
struct QuadratureResult {
  T value{};
  double error = 0.0;      // estimated absolute error (a bound in practice)
  std::size_t panels = 0;  // final panel count
};

/// Gauss-Legendre nodes and weights on [-1, 1].
class GaussLegendre {
 public:
  explicit GaussLegendre(int order);

  int order() const { return static_cast<int>(nodes_.size()); }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

  /// Rule for this order, computed once per order and shared.
  static const GaussLegendre& cached(int order);

  template <class F>
  auto apply(F& f, double a, double b) const {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    using R = std::decay_t<decltype(f(mid))>;
    R acc{};
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      acc += weights_[i] * f(mid + half * nodes_[i]);
    }
    return R(acc * half);
  }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

namespace detail {

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }

template <class T>
struct Panel {
  double a, b;
  T left, right;  // Gauss values on the two halves
  double error;   // |G(whole) - (left + right)|
  int depth;
  bool operator<(const Panel& o) const { return error < o.error; }
};

inline constexpr std::size_t kMaxPanels = 4'000'000;

/// Neumaier summation; long sums of panel values otherwise lose ~sqrt(n) ulps.
struct Neumaier {
  double sum = 0.0;
  double comp = 0.0;
  void add(double v) {
    const double t = sum + v;
    comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

inline void accumulate(Neumaier& re, Neumaier&, double v) { re.add(v); }
inline void accumulate(Neumaier& re, Neumaier& im, const std::complex<double>& v) {
  re.add(v.real());
  im.add(v.imag());
}
inline void finish(double& out, const Neumaier& re, const Neumaier&) { out = re.value(); }
inline void finish(std::complex<double>& out, const Neumaier& re, const Neumaier& im) {
  out = {re.value(), im.value()};
}

}  // namespace detail

/// Globally adaptive bisection quadrature of f over [a, b].
///
/// The interval is first cut into panels no wider than max_panel_width. Each
/// panel's error is |G(panel) - G(left) - G(right)| with G the panel_order
/// Gauss rule; the panel with the largest error is bisected until the total
/// error drops below max(abs_tol, rel_tol * |I|) or a roundoff floor of
/// 64 eps * sum |panel values|. Exceeding max_depth on the panel that must be
/// split throws QuadratureError.
template <class F>
auto integrate(F&& f, double a, double b, const QuadratureSpec& spec,
               double max_panel_width = std::numeric_limits<double>::infinity()) {
  using T = std::decay_t<decltype(f(a))>;
  QuadratureResult<T> out;
  if (a == b) return out;
  const GaussLegendre& rule = GaussLegendre::cached(spec.panel_order);

  const double width = b - a;
  std::size_t initial = 1;
  if (std::isfinite(max_panel_width) && max_panel_width > 0) {
    initial = static_cast<std::size_t>(std::ceil(std::abs(width) / max_panel_width));
    initial = std::max<std::size_t>(initial, 1);
  }
  if (initial > detail::kMaxPanels) {
    throw QuadratureError(fmt::format("quadrature on [{}, {}] needs {} initial panels", a, b, initial));
  }

  auto make_panel = [&](double lo, double hi, const T& whole, int depth) {
    const double mid = 0.5 * (lo + hi);
    T left = rule.apply(f, lo, mid);
    T right = rule.apply(f, mid, hi);
    return detail::Panel<T>{lo, hi, left, right, detail::magnitude(whole - (left + right)), depth};
  };

  std::priority_queue<detail::Panel<T>> queue;
  T total{};
  double total_error = 0.0;
  double total_magnitude = 0.0;
  for (std::size_t i = 0; i < initial; ++i) {
    const double lo = a + width * static_cast<double>(i) / static_cast<double>(initial);
    const double hi = (i + 1 == initial) ? b : a + width * static_cast<double>(i + 1) / static_cast<double>(initial);
    auto p = make_panel(lo, hi, rule.apply(f, lo, hi), 0);
    total += p.left + p.right;
    total_error += p.error;
    total_magnitude += detail::magnitude(p.left) + detail::magnitude(p.right);
    queue.push(std::move(p));
  }

  constexpr double eps = std::numeric_limits<double>::epsilon();
  auto target = [&] {
    return std::max({spec.abs_tol, spec.rel_tol * detail::magnitude(total), 64.0 * eps * total_magnitude});
  };

  while (total_error > target()) {
    detail::Panel<T> worst = queue.top();
    if (worst.depth >= spec.max_depth || queue.size() >= detail::kMaxPanels) {
      throw QuadratureError(fmt::format(
          "quadrature did not converge on [{}, {}]: error {:.3g} > target {:.3g} at depth {} near [{}, {}]",
          a, b, total_error, target(), worst.depth, worst.a, worst.b));
    }
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    auto lp = make_panel(worst.a, mid, worst.left, worst.depth + 1);
    auto rp = make_panel(mid, worst.b, worst.right, worst.depth + 1);
    total += (lp.left + lp.right + rp.left + rp.right) - (worst.left + worst.right);
    total_error += lp.error + rp.error - worst.error;
    total_magnitude += detail::magnitude(lp.left) + detail::magnitude(lp.right) + detail::magnitude(rp.left) +
                       detail::magnitude(rp.right) - detail::magnitude(worst.left) - detail::magnitude(worst.right);
    queue.push(std::move(lp));
    queue.push(std::move(rp));
  }

  // Re-sum in interval order so the result does not depend on refinement history.
  std::vector<detail::Panel<T>> panels;
  panels.reserve(queue.size());
  while (!queue.empty()) {
    panels.push_back(queue.top());
    queue.pop();
  }
  std::sort(panels.begin(), panels.end(), [](const auto& l, const auto& r) { return l.a < r.a; });
  detail::Neumaier re, im;
  double err = 0.0;
  double mag = 0.0;
  for (const auto& p : panels) {
    detail::accumulate(re, im, p.left);
    detail::accumulate(re, im, p.right);
    err += p.error;
    mag += detail::magnitude(p.left) + detail::magnitude(p.right);
  }
  detail::finish(out.value, re, im);
  out.error = std::max(err, 64.0 * eps * mag);
  out.panels = panels.size();
  return out;
}

}  // namespace trigapprox

#endif  // TRIGAPPROX_QUADRATURE_HPP
