#include <cmath>
#include <numbers>

#include "doctest.h"
#include "pqbasis/errors.hpp"
#include "pqbasis/quadrature.hpp"

using namespace pqbasis;

TEST_SUITE("quadrature") {
  TEST_CASE("polynomials and smooth functions") {
    const auto r = quad::integrate([](double x) { return x * x; });
    CHECK(std::fabs(r.value - 1.0 / 3.0) < 1e-15);
    CHECK(r.error_estimate <= 1e-12);

    const auto s = quad::integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
    CHECK(std::fabs(s.value - 2.0) < 1e-14);

    const auto osc =
        quad::integrate([](double x) { return std::cos(101.0 * x); }, 0.0, 1.0, 1e-13);
    CHECK(std::fabs(osc.value - std::sin(101.0) / 101.0) < 1e-13);
  }

  TEST_CASE("endpoint singularities") {
    const auto r = quad::integrate([](double x) { return std::log(x); });
    CHECK(std::fabs(r.value + 1.0) < 1e-12);
    const auto s = quad::integrate([](double x) { return 1.0 / std::sqrt(x); });
    CHECK(std::fabs(s.value - 2.0) < 1e-11);
  }

  TEST_CASE("split integration resolves both ends through the complement") {
    // int_0^1 x^{-1/2} (1 - x)^{-0.9} dx = B(1/2, 1/10)
    const auto r = quad::integrate_split(
        [](double x, double xc) { return std::pow(x, -0.5) * std::pow(xc, -0.9); }, 1e-11);
    const double want = std::tgamma(0.5) * std::tgamma(0.1) / std::tgamma(0.6);
    CHECK(std::fabs(r.value - want) / want < 1e-10);
  }

  TEST_CASE("failures are reported") {
    CHECK_THROWS_AS(quad::integrate([](double x) { return std::cos(1e5 * x); }, 0.0, 1.0, 1e-14, 2000),
                    BudgetExceeded);
    CHECK_THROWS_AS(quad::integrate([](double x) { return x > 0.3 ? NAN : 1.0; }),
                    NonFiniteIntegrand);
  }

  TEST_CASE("deterministic results") {
    auto f = [](double x) { return std::exp(-x) * std::sin(7.0 * x); };
    const auto a = quad::integrate(f, 0.0, 3.0);
    const auto b = quad::integrate(f, 0.0, 3.0);
    CHECK(a.value == b.value);
    CHECK(a.evaluations == b.evaluations);
  }
}
