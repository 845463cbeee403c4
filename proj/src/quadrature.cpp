#include "trigapprox/quadrature.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numbers>

namespace trigapprox {

void QuadratureSpec::validate() const {
  if (!(abs_tol >= 1e-14)) throw DomainError(fmt::format("abs_tol must be >= 1e-14, got {}", abs_tol));
  if (!(rel_tol >= 1e-14)) throw DomainError(fmt::format("rel_tol must be >= 1e-14, got {}", rel_tol));
  if (max_depth < 1 || max_depth > 60) throw DomainError(fmt::format("max_depth must lie in [1, 60], got {}", max_depth));
  if (panel_order < 1) throw DomainError(fmt::format("panel_order must be positive, got {}", panel_order));
}

GaussLegendre::GaussLegendre(int order) {
  if (order < 1) throw DomainError(fmt::format("Gauss-Legendre order must be positive, got {}", order));
  const auto n = static_cast<std::size_t>(order);
  nodes_.resize(n);
  weights_.resize(n);
  // Newton iteration on P_n from the Tricomi initial guesses; roots come in
  // symmetric pairs so only the upper half is solved.
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double kk = static_cast<double>(k);
        const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node for the weight.
    double p0 = 1.0, p1 = x;
    for (std::size_t k = 2; k <= n; ++k) {
      const double kk = static_cast<double>(k);
      const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
      p0 = p1;
      p1 = p2;
    }
    if (n == 1) {
      x = 0.0;
      dp = 1.0;
    } else {
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes_[i] = -x;
    nodes_[n - 1 - i] = x;
    weights_[i] = w;
    weights_[n - 1 - i] = w;
  }
  if (n % 2 == 1) nodes_[n / 2] = 0.0;
}

const GaussLegendre& GaussLegendre::cached(int order) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussLegendre>> rules;
  std::lock_guard lock(mutex);
  auto& slot = rules[order];
  if (!slot) slot = std::make_unique<GaussLegendre>(order);
  return *slot;
}

}  // namespace trigapprox
