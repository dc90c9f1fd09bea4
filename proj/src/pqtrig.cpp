#include "pqbasis/pqtrig.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "pqbasis/errors.hpp"
#include "pqbasis/specfun.hpp"

namespace pqbasis::trig {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// I(1/q, (p-1)/p; y^q) with the complement 1 - y^q formed without cancellation.
double incomplete_ratio(const PqPair& pair, double y) {
  const double log_y = std::log(y);
  const double z = std::exp(pair.q() * log_y);
  const double zc = -std::expm1(pair.q() * log_y);
  return specfun::betainc_reg(pair.beta_a(), pair.beta_b(), z, zc);
}

// Solve I(1/q, (p-1)/p; y^q) = target for y in [0, 1] by Newton's method
// safeguarded with bisection. The map is increasing, so the bracket
// [lo, hi] always contains the root.
double invert_ratio(const PqPair& pair, double target) {
  if (target <= 0.0) return 0.0;
  if (target >= 1.0) return 1.0;
  const double half_pi = 0.5 * pair.pi_pq();
  const double inv_p = 1.0 / pair.p();
  double lo = 0.0;
  double hi = 1.0;
  // F(y) >= y, so y <= F^{-1}(target * pi/2) <= target * pi/2.
  double y = std::fmin(target * half_pi, 0.5);
  for (int iter = 0; iter < 400; ++iter) {
    const double g = incomplete_ratio(pair, y) - target;
    if (g == 0.0) return y;
    if (g < 0.0) {
      lo = y;
    } else {
      hi = y;
    }
    // d/dy I(y^q) = (1 - y^q)^(-1/p) / (pi_{p,q} / 2)
    const double slope = std::pow(-std::expm1(pair.q() * std::log(y)), -inv_p) / half_pi;
    double next = y - g / slope;
    if (!(next > lo && next < hi) || !std::isfinite(next)) next = 0.5 * (lo + hi);
    if (std::fabs(next - y) <= 2.0 * kEps * y || hi - lo <= 2.0 * kEps * hi) {
      return next;
    }
    y = next;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

PqPair::PqPair(double p, double q) : p_(p), q_(q), pi_pq_(0.0) {
  if (!(p > 1.0) || !(q > 1.0) || !std::isfinite(p) || !std::isfinite(q)) {
    throw DomainError("PqPair: p and q must both exceed 1");
  }
  pi_pq_ = 2.0 * specfun::beta(beta_a(), beta_b()) / q_;
}

double pi_pq(const PqPair& pair) { return pair.pi_pq(); }

double arcsin_pq(const PqPair& pair, double y) {
  if (!(y >= 0.0 && y <= 1.0)) throw DomainError("arcsin_pq: y must lie in [0, 1]");
  if (y == 0.0) return 0.0;
  if (y == 1.0) return 0.5 * pair.pi_pq();
  return 0.5 * pair.pi_pq() * incomplete_ratio(pair, y);
}

double arcsin_pq_series(const PqPair& pair, double y) {
  if (!(y >= 0.0 && y < 1.0)) throw DomainError("arcsin_pq_series: y must lie in [0, 1)");
  const double a = 1.0 / pair.p();
  const double b = 1.0 / pair.q();
  return y * specfun::hyp2f1(a, b, 1.0 + b, std::pow(y, pair.q()));
}

Reduced reduce_argument(const PqPair& pair, double x) {
  const double pi = pair.pi_pq();
  int sign = 1;
  if (x < 0.0) {
    x = -x;
    sign = -1;
  }
  x = std::fmod(x, 2.0 * pi);
  if (x >= pi) {
    x -= pi;
    sign = -sign;
  }
  if (x > 0.5 * pi) x = pi - x;
  return {x, sign};
}

double sin_pq(const PqPair& pair, double x) {
  if (!std::isfinite(x)) throw DomainError("sin_pq: argument must be finite");
  const auto [r, sign] = reduce_argument(pair, x);
  const double half_pi = 0.5 * pair.pi_pq();
  if (r == 0.0) return 0.0;
  if (r >= half_pi) return sign;
  return sign * invert_ratio(pair, r / half_pi);
}

double square_wave_distance(const PqPair& pair, double delta) {
  if (!(delta > 0.0 && delta < 0.25)) {
    throw DomainError("square_wave_distance: delta must lie in (0, 1/4)");
  }
  const double pi = pair.pi_pq();
  auto gap = [&](double x) {
    const double wave = std::sin(std::numbers::pi * x) > 0.0 ? 1.0 : -1.0;
    return std::fabs(sin_pq(pair, pi * x) - wave);
  };
  constexpr int kUniform = 4096;
  constexpr int kCluster = 256;
  double worst = 0.0;
  const double width = 1.0 - 2.0 * delta;
  for (int i = 0; i < kUniform; ++i) {
    const double x = i + 1 == kUniform ? 1.0 - delta : delta + width * i / (kUniform - 1);
    worst = std::fmax(worst, gap(x));
  }
  // Chebyshev-type clustering toward delta, where the maximizer sits as p -> 1.
  const double reach = 0.5 - delta;
  for (int i = 1; i < kCluster; ++i) {
    const double theta = 0.5 * std::numbers::pi * i / kCluster;
    worst = std::fmax(worst, gap(delta + reach * (1.0 - std::cos(theta))));
  }
  return worst;
}

}  // namespace pqbasis::trig
