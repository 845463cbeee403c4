#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "support.hpp"
#include "trigapprox/error.hpp"
#include "trigapprox/quadrature.hpp"

using namespace trigapprox;
using trigapprox::testing::kPi;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("Gauss-Legendre rules", "[quadrature]") {
  for (int n : {1, 2, 5, 16, 40}) {
    const auto& rule = GaussLegendre::cached(n);
    REQUIRE(rule.order() == n);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      sum += rule.weights()[i];
      CHECK_THAT(rule.nodes()[i], WithinAbs(-rule.nodes()[n - 1 - i], 1e-15));
      CHECK(std::abs(std::legendre(n, rule.nodes()[i])) < 1e-13);
    }
    CHECK_THAT(sum, WithinRel(2.0, 1e-14));
  }
  CHECK(&GaussLegendre::cached(16) == &GaussLegendre::cached(16));
}

TEST_CASE("polynomials are integrated exactly", "[quadrature][property]") {
  std::mt19937_64 rng(Catch::getSeed());
  std::uniform_real_distribution<double> cd(-1.0, 1.0), ed(-3.0, 3.0);
  for (int n = 1; n <= 20; ++n) {
    const auto& rule = GaussLegendre::cached(n);
    for (int trial = 0; trial < 10; ++trial) {
      const int degree = 2 * n - 1;
      std::vector<double> c(degree + 1);
      for (auto& v : c) v = cd(rng);
      double a = ed(rng), b = ed(rng);
      if (a > b) std::swap(a, b);
      auto poly = [&](double x) {
        double acc = 0.0;
        for (int k = degree; k >= 0; --k) acc = acc * x + c[k];
        return acc;
      };
      // Exact antiderivative, summed with compensated terms.
      double exact = 0.0, scale = 0.0;
      for (int k = 0; k <= degree; ++k) {
        const double term = c[k] * (std::pow(b, k + 1) - std::pow(a, k + 1)) / (k + 1);
        exact += term;
        scale += std::abs(term);
      }
      const double g = rule.apply(poly, a, b);
      INFO("n = " << n << " on [" << a << ", " << b << "]");
      REQUIRE(std::abs(g - exact) <= 1e-13 * std::max(std::abs(exact), 1e-3 * scale) + 1e-15 * scale);
    }
  }
}

TEST_CASE("adaptive integration of smooth integrands", "[quadrature]") {
  QuadratureSpec spec;
  const auto r = integrate([](double x) { return std::exp(x); }, 0.0, 1.0, spec);
  CHECK_THAT(r.value, WithinRel(std::exp(1.0) - 1.0, 1e-14));
  const auto s = integrate([](double x) { return std::sin(x) * std::sin(x); }, 0.0, 200.0 * kPi, spec, 1.0);
  CHECK_THAT(s.value, WithinRel(100.0 * kPi, 1e-12));
  const auto z = integrate([](double x) { return std::exp(std::complex<double>(0.0, 3.0 * x)); }, 0.0, 2.0 * kPi, spec);
  CHECK(std::abs(z.value) < 1e-12);
  CHECK(integrate([](double) { return 1.0; }, 2.0, 2.0, spec).value == 0.0);
}

TEST_CASE("reported error covers the true error", "[quadrature]") {
  QuadratureSpec spec;
  spec.abs_tol = 1e-8;
  spec.rel_tol = 1e-8;
  const auto r = integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, spec);
  CHECK(std::abs(r.value - 2.0 / 3.0) <= r.error);
  CHECK(r.error <= 1e-8);
  const auto k = integrate([](double x) { return std::abs(x - 0.3); }, -1.0, 1.0, spec);
  CHECK(std::abs(k.value - (1.3 * 1.3 + 0.7 * 0.7) / 2.0) <= k.error + 1e-15);
}

TEST_CASE("non-convergence throws", "[quadrature]") {
  QuadratureSpec spec;
  spec.max_depth = 3;
  spec.abs_tol = 1e-14;
  spec.rel_tol = 1e-14;
  CHECK_THROWS_AS(integrate([](double x) { return 1.0 / std::sqrt(std::abs(x - 0.1234)); }, 0.0, 1.0, spec),
                  QuadratureError);
  CHECK_THROWS_AS(integrate([](double x) { return x < 0.3 ? 0.0 : 1.0; }, 0.0, 1.0, spec), QuadratureError);
}

TEST_CASE("quadrature spec validation", "[quadrature]") {
  QuadratureSpec spec;
  CHECK_NOTHROW(spec.validate());
  auto bad = spec;
  bad.abs_tol = 1e-15;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = spec;
  bad.rel_tol = 0.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = spec;
  bad.max_depth = 61;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = spec;
  bad.max_depth = 0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = spec;
  bad.panel_order = 0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("integration is deterministic", "[quadrature]") {
  QuadratureSpec spec;
  auto f = [](double x) { return std::cos(7.0 * x) / (1.0 + x * x); };
  const auto a = integrate(f, -30.0, 30.0, spec, 1.0);
  const auto b = integrate(f, -30.0, 30.0, spec, 1.0);
  CHECK(a.value == b.value);
  CHECK(a.error == b.error);
  CHECK(a.panels == b.panels);
}
