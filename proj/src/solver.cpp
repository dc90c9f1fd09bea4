#include "pqbasis/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <thread>

#include <boost/math/tools/toms748_solve.hpp>

#include "pqbasis/errors.hpp"
#include "pqbasis/fourier.hpp"
#include "pqbasis/lemma_bounds.hpp"
#include "pqbasis/pqtrig.hpp"

namespace pqbasis::solver {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr int kAuditK = 35;
constexpr int kMaxK = 101;

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

void audit_nonnegative(double p, double coeff_tol) {
  const auto table = fourier::coeff_table(trig::PqPair(p, p), kAuditK, coeff_tol);
  for (int j = 1; j <= kAuditK; j += 2) {
    if (table.at(j) + table.error_at(j) < 0.0) {
      throw NonnegativityViolation("P2: a_" + std::to_string(j) + " < 0 at p = " +
                                   std::to_string(p));
    }
  }
}

int p5_index(const ThresholdName& name) {
  return name.kind == ThresholdKind::P6 ? 35 : name.k;
}

std::vector<double> grid(double lo, double hi, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  out.back() = hi;
  return out;
}

}  // namespace

std::string to_string(const ThresholdName& name) {
  switch (name.kind) {
    case ThresholdKind::P2:
      return "P2";
    case ThresholdKind::P1_TILDE:
      return "P1_TILDE";
    case ThresholdKind::P1_HAT:
      return "P1_HAT";
    case ThresholdKind::P3:
      return "P3";
    case ThresholdKind::P4:
      return "P4";
    case ThresholdKind::P5:
      return "P5(" + std::to_string(name.k) + ")";
    case ThresholdKind::P6:
      return "P6";
  }
  return "?";
}

ThresholdName threshold_from_string(const std::string& text) {
  const std::string t = lower(text);
  if (t == "p2") return {ThresholdKind::P2};
  if (t == "p1_tilde" || t == "p1tilde") return {ThresholdKind::P1_TILDE};
  if (t == "p1_hat" || t == "p1hat") return {ThresholdKind::P1_HAT};
  if (t == "p3") return {ThresholdKind::P3};
  if (t == "p4") return {ThresholdKind::P4};
  if (t == "p6") return {ThresholdKind::P6, 35};
  if (t == "p5") return {ThresholdKind::P5, 33};
  if (t.rfind("p5", 0) == 0 && t.size() > 3) {
    std::string digits = t.substr(3);
    if (t[2] == '(' && !digits.empty() && digits.back() == ')') digits.pop_back();
    if ((t[2] == '(' || t[2] == ':') && !digits.empty() &&
        std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }) &&
        digits.size() <= 3) {
      const int k = std::stoi(digits);
      if (k >= 3 && k <= kMaxK && k % 2 == 1) return {ThresholdKind::P5, k};
    }
  }
  throw DomainError("unknown threshold name: " + text);
}

Bracket default_bracket(const ThresholdName& name) {
  switch (name.kind) {
    case ThresholdKind::P3:
      return {1.05, 1.15};
    case ThresholdKind::P1_TILDE:
    case ThresholdKind::P1_HAT:
      return {1.1, 1.3};
    default:
      return {1.02, 1.08};
  }
}

double defining_function(const ThresholdName& name, double p, double coeff_tol) {
  const trig::PqPair pair(p, p);
  switch (name.kind) {
    case ThresholdKind::P2:
      return fourier::coeff_sum(pair, coeff_tol) - 2.0 * fourier::coeff(pair, 1, coeff_tol);
    case ThresholdKind::P1_TILDE:
      return pair.pi_pq() - 2.0 * kPi * kPi / (kPi * kPi - 8.0);
    case ThresholdKind::P1_HAT:
      return pair.pi_pq() / fourier::coeff(pair, 1, coeff_tol) -
             2.0 * kSqrt2 * kPi * kPi / (kPi * kPi - 8.0);
    case ThresholdKind::P3:
      return lemma::theorem64_gap(p, coeff_tol);
    case ThresholdKind::P4: {
      const double a1 = fourier::coeff(pair, 1, coeff_tol);
      const double a3 = fourier::coeff(pair, 3, coeff_tol);
      const double a9 = fourier::coeff(pair, 9, coeff_tol);
      return a3 * (a1 + a9) - 4.0 * a9 * a1;
    }
    case ThresholdKind::P5:
    case ThresholdKind::P6: {
      const int k = p5_index(name);
      const auto table = fourier::coeff_table(pair, std::max(k, 9), coeff_tol);
      return criteria::prop71_margin(table, k);
    }
  }
  throw DomainError("unknown threshold");
}

ThresholdResult solve_threshold(const ThresholdName& name, double tol,
                                const SolveOptions& options) {
  if (!(tol >= 1e-7 && tol <= 1e-2)) {
    throw DomainError("solve_threshold: tol must lie in [1e-7, 1e-2]");
  }
  if (name.kind == ThresholdKind::P5 && (name.k < 3 || name.k > kMaxK || name.k % 2 == 0)) {
    throw DomainError("solve_threshold: P5 needs an odd k in [3, 101]");
  }
  const Bracket start = options.bracket.value_or(default_bracket(name));
  if (!(start.lo > 1.0 && start.hi > start.lo)) {
    throw DomainError("solve_threshold: bracket must satisfy 1 < lo < hi");
  }
  if (name.kind == ThresholdKind::P2) {
    audit_nonnegative(start.lo, options.coeff_tol);
    audit_nonnegative(start.hi, options.coeff_tol);
  }
  auto f = [&](double p) { return defining_function(name, p, options.coeff_tol); };
  const double f_lo = f(start.lo);
  const double f_hi = f(start.hi);
  if (f_lo == 0.0 || f_hi == 0.0 || std::signbit(f_lo) == std::signbit(f_hi)) {
    if (f_lo == 0.0 || f_hi == 0.0) {
      // A root exactly at an end: accept it as a degenerate bracket.
      const double root = f_lo == 0.0 ? start.lo : start.hi;
      return {name, root, {root, root}, tol, 0.0};
    }
    throw NoSignChange(to_string(name) + ": no sign change on [" + std::to_string(start.lo) +
                       ", " + std::to_string(start.hi) + "]");
  }
  std::uintmax_t max_iter = 200;
  const auto width_ok = [tol](double a, double b) { return std::fabs(b - a) <= 2.0 * tol; };
  const auto found =
      boost::math::tools::toms748_solve(f, start.lo, start.hi, f_lo, f_hi, width_ok, max_iter);
  ThresholdResult out;
  out.name = name;
  out.bracket = {found.first, found.second};
  out.value = 0.5 * (found.first + found.second);
  out.tol = tol;
  out.residual = f(out.value);
  if (name.kind == ThresholdKind::P2) audit_nonnegative(out.value, options.coeff_tol);
  return out;
}

std::vector<ThresholdResult> solve_p5_family(double tol, int k_lo, int k_hi, Bracket bracket,
                                             double coeff_tol) {
  if (k_lo < 3 || k_hi > kMaxK || k_lo > k_hi || k_lo % 2 == 0 || k_hi % 2 == 0) {
    throw DomainError("solve_p5_family: need odd 3 <= k_lo <= k_hi <= 101");
  }
  std::vector<ThresholdResult> out;
  for (int k = k_lo; k <= k_hi; k += 2) {
    out.push_back(solve_threshold({ThresholdKind::P5, k}, tol, {bracket, coeff_tol}));
  }
  return out;
}

ScanCell scan_cell(double p, double q, int k, double tol) {
  ScanCell cell;
  cell.p = p;
  cell.q = q;
  try {
    const trig::PqPair pair(p, q);
    const auto table = fourier::coeff_table(pair, std::max(k, 9), tol);
    const auto sum = fourier::coeff_sum_eval(pair, tol);
    cell.a1 = table.at(1);
    cell.a3 = table.at(3);
    cell.a5 = table.at(5);
    cell.a7 = table.at(7);
    cell.a9 = table.at(9);
    const int js[] = {3, 5, 7, 9};
    for (std::size_t i = 0; i < 4; ++i) {
      cell.sign_flags[i] = table.at(js[i]) - table.error_at(js[i]) > 0.0;
    }
    cell.region = toeplitz::classify(criteria::symbol_params(table));
    cell.wedge_flag = criteria::wedge_margin(table) < 0.0;
    const auto reports = criteria::evaluate_all(table, sum, std::max(k, 5));
    for (const auto& [id, report] : reports) {
      if (report) {
        cell.verdicts[id] = report->invertible;
        cell.riesz_bounds[id] = report->riesz_upper;
      } else {
        cell.verdicts[id] = std::nullopt;
        cell.riesz_bounds[id] = std::nullopt;
      }
    }
  } catch (const std::exception& e) {
    ScanCell bad;
    bad.p = p;
    bad.q = q;
    bad.failed = true;
    bad.message = e.what();
    return bad;
  }
  return cell;
}

unsigned worker_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("PQBASIS_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<ScanCell> scan(const ScanRequest& request) {
  if (!(request.p_min > 1.0 && request.q_min > 1.0 && request.p_max >= request.p_min &&
        request.q_max >= request.q_min && std::isfinite(request.p_max) &&
        std::isfinite(request.q_max))) {
    throw DomainError("scan: ranges must lie in (1, inf) with min <= max");
  }
  if (request.n_p < 1 || request.n_q < 1) throw DomainError("scan: counts must be positive");
  if (request.k < 1 || request.k > kMaxK || request.k % 2 == 0) {
    throw DomainError("scan: k must be odd in [1, 101]");
  }
  const auto ps = grid(request.p_min, request.p_max, request.n_p);
  const auto qs = grid(request.q_min, request.q_max, request.n_q);
  const std::size_t total = ps.size() * qs.size();
  std::vector<ScanCell> cells(total);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      cells[i] = scan_cell(ps[i / qs.size()], qs[i % qs.size()], request.k, request.tol);
    }
  };
  const unsigned n = std::min<std::size_t>(worker_count(request.threads), total);
  if (n <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(work);
  }
  return cells;
}

std::string to_string(CurveName name) {
  switch (name) {
    case CurveName::A3_ZERO:
      return "a3";
    case CurveName::A5_ZERO:
      return "a5";
    case CurveName::A7_ZERO:
      return "a7";
    case CurveName::A9_ZERO:
      return "a9";
    case CurveName::WEDGE:
      return "wedge";
    case CurveName::BREAK2:
      return "break2";
    case CurveName::PI_BOUND:
      return "pi_bound";
  }
  return "?";
}

CurveName curve_from_string(const std::string& text) {
  const std::string t = lower(text);
  for (auto c : {CurveName::A3_ZERO, CurveName::A5_ZERO, CurveName::A7_ZERO, CurveName::A9_ZERO,
                 CurveName::WEDGE, CurveName::BREAK2, CurveName::PI_BOUND}) {
    if (to_string(c) == t) return c;
  }
  throw DomainError("unknown curve: " + text);
}

double curve_function(CurveName name, double p, double q, double coeff_tol) {
  const trig::PqPair pair(p, q);
  switch (name) {
    case CurveName::A3_ZERO:
      return fourier::coeff(pair, 3, coeff_tol);
    case CurveName::A5_ZERO:
      return fourier::coeff(pair, 5, coeff_tol);
    case CurveName::A7_ZERO:
      return fourier::coeff(pair, 7, coeff_tol);
    case CurveName::A9_ZERO:
      return fourier::coeff(pair, 9, coeff_tol);
    case CurveName::WEDGE: {
      const double a1 = fourier::coeff(pair, 1, coeff_tol);
      const double a3 = fourier::coeff(pair, 3, coeff_tol);
      const double a9 = fourier::coeff(pair, 9, coeff_tol);
      return a3 * (a1 + a9) - 4.0 * a9 * a1;
    }
    case CurveName::BREAK2:
      return fourier::coeff_sum(pair, coeff_tol) - 2.0 * fourier::coeff(pair, 1, coeff_tol);
    case CurveName::PI_BOUND:
      return pair.pi_pq() - 16.0 / (kPi * kPi - 8.0);
  }
  throw DomainError("unknown curve");
}

TraceResult trace_curve(CurveName name, const std::vector<double>& q_grid, double p_lo,
                        double p_hi, int samples, double coeff_tol) {
  if (!(p_lo > 1.0 && p_hi > p_lo) || samples < 2) {
    throw DomainError("trace_curve: need 1 < p_lo < p_hi and at least two samples");
  }
  TraceResult out;
  for (double q : q_grid) {
    auto f = [&](double p) { return curve_function(name, p, q, coeff_tol); };
    const auto ps = grid(p_lo, p_hi, samples);
    std::vector<double> fs(ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i) fs[i] = f(ps[i]);
    bool any = false;
    for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
      if (fs[i] == 0.0) {
        out.points.push_back({ps[i], q});
        any = true;
        continue;
      }
      if (fs[i + 1] == 0.0 || std::signbit(fs[i]) == std::signbit(fs[i + 1])) continue;
      std::uintmax_t max_iter = 200;
      const auto r = boost::math::tools::toms748_solve(
          f, ps[i], ps[i + 1], fs[i], fs[i + 1],
          [](double a, double b) { return std::fabs(b - a) <= 1e-6; }, max_iter);
      out.points.push_back({0.5 * (r.first + r.second), q});
      any = true;
    }
    if (fs.back() == 0.0) {
      out.points.push_back({ps.back(), q});
      any = true;
    }
    if (!any) out.skipped.push_back(q);
  }
  return out;
}

}  // namespace pqbasis::solver
