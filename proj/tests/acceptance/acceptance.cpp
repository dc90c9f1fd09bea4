// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pqbasis/cli.hpp"
#include "pqbasis/criteria.hpp"
#include "pqbasis/fourier.hpp"
#include "pqbasis/lemma_bounds.hpp"
#include "pqbasis/solver.hpp"
#include "pqbasis/specfun.hpp"
#include "pqbasis/toeplitz.hpp"

using namespace pqbasis;
using trig::PqPair;

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass;
  std::string note;
};

Outcome ac1() {
  const auto t0 = Clock::now();
  const double a1 = fourier::coeff(PqPair(12.0 / 11.0, 12.0 / 11.0), 1);
  const double dt = seconds_since(t0);
  const double diff = std::fabs(a1 - 0.8877665848468607);
  char buf[160];
  std::snprintf(buf, sizeof buf, "a1 = %.17g, |diff| = %.2e, %.3f s", a1, diff, dt);
  return {diff <= 1e-12 && dt < 1.0, buf};
}

Outcome ac2() {
  const auto t0 = Clock::now();
  const double s = fourier::coeff_sum(PqPair(12.0 / 11.0, 12.0 / 11.0));
  const double dt = seconds_since(t0);
  const double diff = std::fabs(s - 1.48634943002852603);
  char buf[160];
  std::snprintf(buf, sizeof buf, "sum = %.17g, |diff| = %.2e, %.3f s", s, diff, dt);
  return {diff <= 1e-12 && dt < 1.0, buf};
}

Outcome ac3() {
  struct Case {
    double p;
    double want;
  };
  const Case cases[] = {
      {2.0, kPi},
      {6.0 / 5.0, 10.0 * kPi / 3.0},
      {4.0 / 3.0, 3.0 * kPi * kSqrt2 / 2.0},
      {12.0 / 11.0, 11.0 * kPi * kSqrt2 / (3.0 * (std::sqrt(3.0) - 1.0))},
  };
  double worst = 0.0;
  for (const auto& c : cases) {
    worst = std::fmax(worst, std::fabs(PqPair(c.p, c.p).pi_pq() - c.want) / c.want);
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "worst relative error %.2e", worst);
  return {worst <= 1e-12, buf};
}

struct Thresholds {
  double p2, tilde, hat, p3, p4, p6, p5;
  double seconds;
};

Thresholds solve_all() {
  using solver::ThresholdKind;
  const auto t0 = Clock::now();
  auto v = [](ThresholdKind k, int kk = 35) { return solver::solve_threshold({k, kk}, 1e-6).value; };
  Thresholds t{};
  t.p2 = v(ThresholdKind::P2);
  t.tilde = v(ThresholdKind::P1_TILDE);
  t.hat = v(ThresholdKind::P1_HAT);
  t.p3 = v(ThresholdKind::P3);
  t.p4 = v(ThresholdKind::P4);
  t.p6 = v(ThresholdKind::P6);
  t.p5 = v(ThresholdKind::P5, 33);
  t.seconds = seconds_since(t0);
  return t;
}

Outcome ac4(const Thresholds& t) {
  const bool ok = std::fabs(t.p2 - 1.043989) < 1e-4 && std::fabs(t.tilde - 1.198236) < 1e-4 &&
                  std::fabs(t.hat - 1.158739) < 1e-4 && std::fabs(t.p3 - 1.087063) < 1e-4 &&
                  std::fabs(t.p4 - 1.038537) < 1e-4 && std::fabs(t.p6 - 1.043917) < 1e-4 &&
                  t.p5 >= 1.044573 && t.seconds < 300.0;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "p2 %.7f p1~ %.7f p1^ %.7f p3 %.7f p4 %.7f p6 %.7f P5(33) %.7f, %.1f s", t.p2,
                t.tilde, t.hat, t.p3, t.p4, t.p6, t.p5, t.seconds);
  return {ok, buf};
}

Outcome ac5(const Thresholds& t) {
  const bool first = t.p4 < t.p6 && t.p6 < t.p2 && t.p2 < t.p5;
  const bool second = t.p3 < 12.0 / 11.0 && 12.0 / 11.0 < t.hat && t.hat < t.tilde && t.tilde < 6.0 / 5.0;
  return {first && second, std::string("p4<p6<p2<P5(33): ") + (first ? "yes" : "no") +
                               ", p3<12/11<p1^<p1~<6/5: " + (second ? "yes" : "no")};
}

// Golden-section search for a minimum of f on [a, b].
double golden_min(const std::function<double(double)>& f, double a, double b) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < 100; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  return std::fmin(fc, fd);
}

Outcome ac6() {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  constexpr int kSamples = 1000;
  constexpr int kTheta = 100000;
  const double step = 2.0 * kPi / kTheta;
  std::vector<std::complex<double>> z(kTheta);
  for (int i = 0; i < kTheta; ++i) z[i] = std::polar(1.0, step * i);
  int raw_mismatches = 0;
  int bad_extrema = 0;
  int bad_invertible = 0;
  double worst = 0.0;
  for (int s = 0; s < kSamples; ++s) {
    const toeplitz::SymbolParams params{u(rng), u(rng)};
    auto modulus = [&](double t) {
      const auto w = std::polar(1.0, t);
      return std::abs(1.0 + params.alpha * w + params.beta * w * w);
    };
    double lo = INFINITY;
    double hi = 0.0;
    int i_lo = 0;
    int i_hi = 0;
    for (int i = 0; i < kTheta; ++i) {
      const auto& w = z[i];
      const double v = std::abs(1.0 + params.alpha * w + params.beta * w * w);
      if (v < lo) {
        lo = v;
        i_lo = i;
      }
      if (v > hi) {
        hi = v;
        i_hi = i;
      }
    }
    const auto n = toeplitz::symbol_extrema(params);
    if (std::fabs(n.norm_B - hi) > 1e-6 * hi || std::fabs(n.inv_norm_B - lo) > 1e-6 * lo) {
      ++raw_mismatches;
    }
    // Polish the sampled extrema inside their grid cells.
    lo = std::fmin(lo, golden_min(modulus, step * (i_lo - 1), step * (i_lo + 1)));
    hi = std::fmax(hi, -golden_min([&](double t) { return -modulus(t); }, step * (i_hi - 1),
                                   step * (i_hi + 1)));
    const double rel_hi = std::fabs(n.norm_B - hi) / hi;
    const double rel_lo = std::fabs(n.inv_norm_B - lo) / std::fmax(lo, 1e-300);
    worst = std::fmax(worst, std::fmax(rel_hi, rel_lo));
    if (rel_hi > 1e-6 || rel_lo > 1e-6) ++bad_extrema;

    bool roots_outside;
    if (params.beta == 0.0) {
      roots_outside = std::fabs(params.alpha) < 1.0;
    } else {
      const auto disc = std::sqrt(std::complex<double>(params.alpha * params.alpha - 4.0 * params.beta));
      roots_outside = std::abs((-params.alpha + disc) / (2.0 * params.beta)) > 1.0 &&
                      std::abs((-params.alpha - disc) / (2.0 * params.beta)) > 1.0;
    }
    if (toeplitz::is_invertible(params) != roots_outside) ++bad_invertible;
  }
  char buf[220];
  std::snprintf(buf, sizeof buf,
                "extrema mismatches %d after in-cell polish (worst rel %.2e; %d on the raw grid), "
                "invertibility mismatches %d",
                bad_extrema, worst, raw_mismatches, bad_invertible);
  return {bad_extrema == 0 && bad_invertible == 0, buf};
}

Outcome ac7() {
  auto invertible = [](double a) { return toeplitz::is_invertible({a / (1.0 - a), 0.0}); };
  bool ok = invertible(0.499) && !invertible(0.501);
  for (int i = 0; i < 100; ++i) {
    const double a = i / 100.0;
    if (invertible(a) != (a < 0.5)) ok = false;
  }
  return {ok, std::string("0.499 -> ") + (invertible(0.499) ? "invertible" : "not invertible") +
                  ", 0.501 -> " + (invertible(0.501) ? "invertible" : "not invertible")};
}

Outcome ac8() {
  int failures = 0;
  std::string failed;
  for (double p : {4.0 / 3.0, 6.0 / 5.0, 12.0 / 11.0}) {
    for (const auto& [name, ok] : lemma::verify_lemma61(p)) {
      if (!ok) {
        ++failures;
        failed += " " + name;
      }
    }
    if (p <= 1.2) {
      for (const auto& [name, ok] : lemma::verify_lemma63(p)) {
        if (!ok) {
          ++failures;
          failed += " " + name;
        }
      }
    }
  }
  auto kept = [](const std::vector<lemma::InterpolantSpec>& specs, const std::string& name) {
    for (const auto& s : specs) {
      if (s.name == name) return lemma::kept_integral(s);
    }
    return std::numeric_limits<double>::quiet_NaN();
  };
  const double a3 = 2.0 * kSqrt2 *
                    (1.0 / (2.0 * kPi * kPi) + ((kPi - 2.0) * std::sqrt(3.0) + 3.0) / (6.0 * kPi * kPi) -
                     1.0 / (3.0 * kPi));
  const double a9 = 2.0 * kSqrt2 * (23.0 / (216.0 * kPi * kPi) - 1.0 / (72.0 * kPi));
  const double worst =
      std::fmax(std::fmax(std::fabs(kept(lemma::positivity_specs(), "a3_pos") - a3),
                          std::fabs(kept(lemma::positivity_specs(), "a9_pos") - a9)),
                std::fmax(std::fabs(kept(lemma::bound_specs(), "a5_lt") - 2.0 * kSqrt2 / (5.0 * kPi)),
                          std::fabs(kept(lemma::bound_specs(), "a7_lt") - 2.0 * kSqrt2 / (7.0 * kPi))));
  char buf[200];
  std::snprintf(buf, sizeof buf, "failed items:%s, closed-form worst diff %.2e",
                failures ? failed.c_str() : " none", worst);
  return {failures == 0 && worst <= 1e-13, buf};
}

Outcome ac9() {
  bool parity = true;
  for (double p : {1.01, 1.2, 2.0, 3.5}) {
    for (double q : {1.01, 1.5, 2.0}) {
      for (int j = 2; j <= 20; j += 2) {
        if (fourier::coeff(PqPair(p, q), j) != 0.0) parity = false;
      }
    }
  }
  bool limit = true;
  for (int j : {1, 3, 5}) {
    const double target = 2.0 * kSqrt2 / (j * kPi);
    const double near = std::fabs(fourier::coeff(PqPair(1.01, 1.01), j) - target);
    const double far = std::fabs(fourier::coeff(PqPair(1.1, 1.1), j) - target);
    if (!(near < far)) limit = false;
  }
  return {parity && limit, std::string("even zero: ") + (parity ? "yes" : "no") +
                               ", closer to square-wave limit at 1.01: " + (limit ? "yes" : "no")};
}

Outcome ac10() {
  int beta_sym = 0;
  for (double a : {0.05, 0.5, 1.0 / 1.1, 2.0, 7.5}) {
    for (double b : {0.002, 0.1, 0.5, 1.0, 4.0}) {
      for (int i = 1; i < 50; ++i) {
        const double x = i / 50.0;
        const double lhs = specfun::betainc_reg(a, b, x);
        const double rhs = 1.0 - specfun::betainc_reg(b, a, 1.0 - x);
        if (std::fabs(lhs - rhs) > 1e-13) ++beta_sym;
      }
    }
  }
  int round_trip = 0;
  int concavity = 0;
  int monotone = 0;
  int tail = 0;
  const double ps[] = {1.02, 1.1, 1.5, 2.0, 4.0};
  const double qs[] = {1.02, 1.3, 2.0, 6.0};
  for (double p : ps) {
    for (double q : qs) {
      const PqPair pair(p, q);
      const double half = 0.5 * pair.pi_pq();
      for (int i = 0; i <= 200; ++i) {
        const double y = i / 200.0;
        if (std::fabs(trig::sin_pq(pair, trig::arcsin_pq(pair, y)) - y) > 1e-11) ++round_trip;
        const double x = half * i / 200.0;
        const double s = trig::sin_pq(pair, x);
        const double slope = std::pow(1.0 - std::pow(s, q), 1.0 / p);
        const double back = trig::arcsin_pq(pair, s);
        if (slope > 1e-3 ? std::fabs(back - x) > 1e-11 * std::fmax(1.0, x)
                         : std::fabs(trig::sin_pq(pair, back) - s) > 1e-11) {
          ++round_trip;
        }
        if (i > 0 && i < 200) {
          const double h = half / 200.0;
          const double second = trig::sin_pq(pair, x - h) - 2.0 * s + trig::sin_pq(pair, x + h);
          if (second > 1e-12) ++concavity;
        }
      }
      const auto table = fourier::coeff_table(pair, 35, 1e-11);
      for (int j = 1; j <= 35; j += 2) {
        if (std::fabs(table.at(j)) > fourier::coeff_magnitude_bound(pair, j) + table.error_at(j)) ++tail;
      }
    }
  }
  for (int i = 1; i <= 100; ++i) {
    const double p = 1.01 + 0.05 * i;
    const PqPair here(p, p);
    const PqPair before(p - 0.05, p - 0.05);
    if (!(here.pi_pq() < before.pi_pq())) ++monotone;
    for (double x : {0.05, 0.15, 0.3, 0.45}) {
      if (trig::sin_pq(here, here.pi_pq() * x) > trig::sin_pq(before, before.pi_pq() * x) + 1e-14)
        ++monotone;
    }
  }
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "violations: beta symmetry %d, round trip %d, concavity %d, p-monotonicity %d, "
                "magnitude bound %d",
                beta_sym, round_trip, concavity, monotone, tail);
  return {beta_sym + round_trip + concavity + monotone + tail == 0, buf};
}

std::string scan_csv(const solver::ScanRequest& req) {
  std::string text = cli::scan_csv_header() + "\n";
  for (const auto& cell : solver::scan(req)) text += cli::scan_csv_row(cell) + "\n";
  return text;
}

Outcome ac11() {
  solver::ScanRequest req;
  req.p_min = 1.02;
  req.p_max = 1.3;
  req.q_min = 1.02;
  req.q_max = 1.3;
  req.n_p = 64;
  req.n_q = 64;
  req.k = 7;
  const auto t0 = Clock::now();
  const std::string first = scan_csv(req);
  const double dt = seconds_since(t0);
  const std::string second = scan_csv(req);
  const bool identical = first == second;
  const bool rows = std::count(first.begin(), first.end(), '\n') == 64 * 64 + 1;

  // A window containing (2, 2): a_3 and a_9 change sign there along both axes.
  solver::ScanRequest w;
  w.p_min = 1.9;
  w.p_max = 2.1;
  w.q_min = 1.9;
  w.q_max = 2.1;
  w.n_p = 5;
  w.n_q = 5;
  const auto cells = solver::scan(w);
  auto at = [&](int i, int j) { return cells[i * 5 + j]; };
  const auto& centre = at(2, 2);
  bool through = std::fabs(centre.a3) < 1e-10 && std::fabs(centre.a9) < 1e-10;
  through = through && at(1, 2).a3 * at(3, 2).a3 < 0.0 && at(1, 2).a9 * at(3, 2).a9 < 0.0;
  double worst = 0.0;
  for (auto c : {solver::CurveName::A3_ZERO, solver::CurveName::A9_ZERO}) {
    const auto r = solver::trace_curve(c, {2.0}, 1.8, 2.25, 10);
    if (r.points.size() != 1) {
      through = false;
      continue;
    }
    worst = std::fmax(worst, std::fabs(r.points[0].p - 2.0));
  }
  through = through && worst <= 1e-6;

  char buf[200];
  std::snprintf(buf, sizeof buf,
                "64x64 scan %.1f s, bit-identical: %s, rows ok: %s, curves through (2,2): %s "
                "(trace |p-2| <= %.1e)",
                dt, identical ? "yes" : "no", rows ? "yes" : "no", through ? "yes" : "no", worst);
  return {identical && rows && through && dt < 600.0, buf};
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const std::function<Outcome()>& check) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("AC%-2d %s  %s\n", id, o.pass ? "PASS" : "FAIL", o.note.c_str());
    std::fflush(stdout);
  };
  report(1, ac1);
  report(2, ac2);
  report(3, ac3);
  Thresholds t{};
  bool solved = false;
  std::string solve_error;
  try {
    t = solve_all();
    solved = true;
  } catch (const std::exception& e) {
    solve_error = e.what();
  }
  report(4, [&] { return solved ? ac4(t) : Outcome{false, "exception: " + solve_error}; });
  report(5, [&] { return solved ? ac5(t) : Outcome{false, "exception: " + solve_error}; });
  report(6, ac6);
  report(7, ac7);
  report(8, ac8);
  report(9, ac9);
  report(10, ac10);
  report(11, ac11);
  return failures == 0 ? 0 : 1;
}
