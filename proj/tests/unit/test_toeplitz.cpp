#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"
#include "pqbasis/toeplitz.hpp"

using namespace pqbasis::toeplitz;

namespace {

struct BruteExtrema {
  double min = INFINITY;
  double max = 0.0;
};

BruteExtrema brute_force(const SymbolParams& s, int n) {
  BruteExtrema e;
  for (int i = 0; i < n; ++i) {
    const double t = 2.0 * std::numbers::pi * i / n;
    const std::complex<double> z = std::polar(1.0, t);
    const double v = std::abs(1.0 + s.alpha * z + s.beta * z * z);
    e.min = std::fmin(e.min, v);
    e.max = std::fmax(e.max, v);
  }
  return e;
}

// b(z) = 1 + alpha z + beta z^2 has no root in the closed unit disk.
bool roots_outside_disk(const SymbolParams& s) {
  if (s.beta == 0.0) return std::fabs(s.alpha) < 1.0;
  const std::complex<double> disc = std::sqrt(std::complex<double>(s.alpha * s.alpha - 4.0 * s.beta));
  const std::complex<double> r1 = (-s.alpha + disc) / (2.0 * s.beta);
  const std::complex<double> r2 = (-s.alpha - disc) / (2.0 * s.beta);
  return std::abs(r1) > 1.0 && std::abs(r2) > 1.0;
}

}  // namespace

TEST_SUITE("toeplitz") {
  TEST_CASE("identity symbol") {
    const auto n = symbol_extrema({0.0, 0.0});
    CHECK(n.norm_B == 1.0);
    CHECK(n.inv_norm_B == 1.0);
    CHECK(is_invertible({0.0, 0.0}));
  }

  TEST_CASE("extrema match a dense circle sample") {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    int bad_max = 0;
    int bad_min = 0;
    for (int i = 0; i < 200; ++i) {
      const SymbolParams s{u(rng), u(rng)};
      const auto n = symbol_extrema(s);
      const auto b = brute_force(s, 20000);
      if (std::fabs(n.norm_B - b.max) > 1e-6 * b.max) ++bad_max;
      // A fine sample can only overestimate the minimum.
      if (n.inv_norm_B > b.min + 1e-12 || b.min - n.inv_norm_B > 1e-3 * std::max(b.max, 1.0)) ++bad_min;
    }
    CHECK(bad_max == 0);
    CHECK(bad_min == 0);
  }

  TEST_CASE("invertibility matches the root location") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    int mismatches = 0;
    for (int i = 0; i < 5000; ++i) {
      const SymbolParams s{u(rng), u(rng)};
      if (is_invertible(s) != roots_outside_disk(s)) ++mismatches;
    }
    CHECK(mismatches == 0);
  }

  TEST_CASE("square-wave mixture example") {
    // alpha = a / (1 - a), beta = 0: invertible exactly for a < 1/2.
    auto mix = [](double a) { return SymbolParams{a / (1.0 - a), 0.0}; };
    CHECK(is_invertible(mix(0.0)));
    CHECK(is_invertible(mix(0.3)));
    CHECK(is_invertible(mix(0.499)));
    CHECK_FALSE(is_invertible(mix(0.501)));
    CHECK_FALSE(is_invertible(mix(0.8)));
  }

  TEST_CASE("region membership") {
    CHECK(classify({0.0, 0.0}).in_T);
    CHECK_FALSE(classify({0.0, 1.0}).in_T);
    CHECK_FALSE(classify({2.0, 1.0}).in_T);
    CHECK_FALSE(classify({-1.5, 0.4}).in_T);
    CHECK(classify({0.2, 0.5}).subregion == Subregion::R1);
    CHECK(classify({0.2, -0.5}).subregion == Subregion::R3);
    CHECK(classify({1.5, 0.1}).subregion == Subregion::R2);
    // |alpha (beta + 1)| = |4 beta| belongs to R2.
    CHECK(classify({2.0, 1.0 / 3.0}).subregion == Subregion::R2);
    CHECK(to_string(Subregion::R3) == "R3");
  }

  TEST_CASE("closed forms by subregion") {
    // R2: extremes at theta = 0 and pi.
    const auto r2 = symbol_extrema({0.6, 0.1});
    CHECK(r2.norm_B == doctest::Approx(1.7));
    CHECK(r2.inv_norm_B == doctest::Approx(0.5));
    // R1: interior minimum (1 - beta) sqrt(1 - alpha^2 / (4 beta)).
    const auto r1 = symbol_extrema({0.2, 0.5});
    CHECK(r1.inv_norm_B == doctest::Approx(0.5 * std::sqrt(1.0 - 0.04 / 2.0)));
    CHECK(r1.norm_B == doctest::Approx(1.7));
    // R3: interior maximum.
    const auto r3 = symbol_extrema({0.2, -0.5});
    CHECK(r3.norm_B == doctest::Approx(1.5 * std::sqrt(1.0 + 0.04 / 2.0)));
    CHECK(r3.inv_norm_B == doctest::Approx(0.3));
  }

  TEST_CASE("symmetry alpha -> -alpha") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 100; ++i) {
      const double a = u(rng);
      const double b = u(rng);
      const auto n1 = symbol_extrema({a, b});
      const auto n2 = symbol_extrema({-a, b});
      CHECK(n1.norm_B == doctest::Approx(n2.norm_B).epsilon(1e-14));
      CHECK(n1.inv_norm_B == doctest::Approx(n2.inv_norm_B).epsilon(1e-12));
      CHECK(classify({a, b}) == classify({-a, b}));
    }
  }

  TEST_CASE("disk minimum is zero outside T") {
    const auto outside = symbol_extrema({0.0, 1.5});
    CHECK(outside.disk_min == 0.0);
    const auto inside = symbol_extrema({0.3, 0.2});
    CHECK(inside.disk_min == inside.inv_norm_B);
  }

  TEST_CASE("robust classification") {
    const auto firm = classify_robust({0.2, 0.5}, 1e-6, 1e-6);
    REQUIRE(firm.has_value());
    CHECK(firm->subregion == Subregion::R1);
    CHECK_FALSE(classify_robust({1.0, 0.0}, 1e-6, 1e-6).has_value());
    // The origin touches all three subregions but lies firmly inside T.
    CHECK_FALSE(classify_robust({0.0, 0.0}, 1e-9, 1e-9).has_value());
    const auto member = classify_robust({0.0, 0.0}, 1e-9, 1e-9, true);
    REQUIRE(member.has_value());
    CHECK(member->in_T);
  }
}
