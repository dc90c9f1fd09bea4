#pragma once

// Basisness thresholds on the diagonal p = q and (p, q)-plane scans.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pqbasis/criteria.hpp"
#include "pqbasis/toeplitz.hpp"

namespace pqbasis::solver {

enum class ThresholdKind { P2, P1_TILDE, P1_HAT, P3, P4, P5, P6 };

struct ThresholdName {
  ThresholdKind kind = ThresholdKind::P2;
  /// Truncation index of the P5 family. P6 always uses 35; ignored otherwise.
  int k = 35;

  bool operator==(const ThresholdName&) const = default;
};

/// "P2", "P1_TILDE", "P1_HAT", "P3", "P4", "P5(33)", "P6".
std::string to_string(const ThresholdName& name);
/// Case-insensitive inverse of to_string; also accepts "p1tilde", "p5:33" and
/// a bare "p5" (k = 33). Throws DomainError on anything else.
ThresholdName threshold_from_string(const std::string& text);

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;

  bool operator==(const Bracket&) const = default;
};

struct ThresholdResult {
  ThresholdName name;
  double value = 0.0;
  Bracket bracket;
  double tol = 0.0;
  /// Defining function at value.
  double residual = 0.0;

  bool operator==(const ThresholdResult&) const = default;
};

struct SolveOptions {
  /// Replaces the default bracket.
  std::optional<Bracket> bracket;
  /// Quadrature tolerance of every coefficient evaluation.
  double coeff_tol = 1e-12;
};

Bracket default_bracket(const ThresholdName& name);

/// The function whose sign change along p = q defines the threshold.
///   P2:       sum_j a_j - 2 a_1
///   P1_TILDE: pi_{p,p} - 2 pi^2 / (pi^2 - 8)
///   P1_HAT:   pi_{p,p} / a_1 - 2 sqrt(2) pi^2 / (pi^2 - 8)
///   P3:       lemma::theorem64_gap
///   P4:       a_3 (a_1 + a_9) - 4 a_9 a_1
///   P5(k):    criteria::prop71_margin at k (P6: k = 35)
double defining_function(const ThresholdName& name, double p, double coeff_tol = 1e-12);

/// Bracketing root search (TOMS 748: secant and inverse-cubic steps with
/// bisection safeguards) until the bracket is at most 2 tol wide; value is
/// the bracket midpoint. tol must lie in [1e-7, 1e-2].
/// Throws NoSignChange for a bracket without a sign change and, for P2,
/// NonnegativityViolation if a stored a_j (j <= 35) is negative beyond its
/// error at either bracket end or at the root.
ThresholdResult solve_threshold(const ThresholdName& name, double tol,
                                const SolveOptions& options = {});

/// P5(k) for every odd k in [k_lo, k_hi] on one common bracket (default
/// [1.02, 1.5], wide enough for the small-k roots). The smallest of these
/// values is the lower bound reported for p_5.
std::vector<ThresholdResult> solve_p5_family(double tol, int k_lo = 3, int k_hi = 33,
                                             Bracket bracket = {1.02, 1.5},
                                             double coeff_tol = 1e-12);

struct ScanRequest {
  double p_min = 1.02;
  double p_max = 1.3;
  double q_min = 1.02;
  double q_max = 1.3;
  int n_p = 2;
  int n_q = 2;
  /// Odd, in [1, 101]. Coefficients are tabulated up to max(k, 9) and
  /// PROP71 is evaluated at max(k, 5).
  int k = 7;
  double tol = 1e-12;
  /// Worker count; 0 means PQBASIS_THREADS or the hardware concurrency.
  unsigned threads = 0;
};

struct ScanCell {
  double p = 0.0;
  double q = 0.0;
  double a1 = 0.0;
  double a3 = 0.0;
  double a5 = 0.0;
  double a7 = 0.0;
  double a9 = 0.0;
  /// a_3 > 0, a_5 > 0, a_7 > 0, a_9 > 0, each beyond its quadrature error.
  std::array<bool, 4> sign_flags{};
  /// Region of (a_3 / a_1, a_9 / a_1).
  toeplitz::RegionTag region;
  /// a_3 (a_1 + a_9) < 4 a_1 a_9
  bool wedge_flag = false;
  /// nullopt: the criterion could not be decided at this accuracy.
  std::map<criteria::CriterionId, std::optional<bool>> verdicts;
  std::map<criteria::CriterionId, std::optional<double>> riesz_bounds;
  /// The cell could not be computed; message says why. Other fields are
  /// zero/false.
  bool failed = false;
  std::string message;

  bool operator==(const ScanCell&) const = default;
};

/// One cell, with the same conventions as scan().
ScanCell scan_cell(double p, double q, int k, double tol);

/// Row-major grid: p varies slowest. A count of 1 takes the range minimum.
/// Cells run concurrently and are assembled in grid order, so the output
/// does not depend on the worker count.
std::vector<ScanCell> scan(const ScanRequest& request);

/// Number of scan workers: request.threads, else PQBASIS_THREADS, else the
/// hardware concurrency (at least 1).
unsigned worker_count(unsigned requested);

enum class CurveName { A3_ZERO, A5_ZERO, A7_ZERO, A9_ZERO, WEDGE, BREAK2, PI_BOUND };

std::string to_string(CurveName name);
CurveName curve_from_string(const std::string& text);

/// a_3, a_5, a_7, a_9; a_3 (a_1 + a_9) - 4 a_9 a_1; sum_j a_j - 2 a_1;
/// pi_{p,q} - 16 / (pi^2 - 8).
double curve_function(CurveName name, double p, double q, double coeff_tol = 1e-12);

struct CurvePoint {
  double p = 0.0;
  double q = 0.0;
};

struct TraceResult {
  std::vector<CurvePoint> points;
  /// q values whose slice showed no sign change.
  std::vector<double> skipped;
};

/// For each q, sample the curve function at `samples` points of [p_lo, p_hi]
/// and refine every sign change to a bracket of width 1e-6 in p.
TraceResult trace_curve(CurveName name, const std::vector<double>& q_grid, double p_lo,
                        double p_hi, int samples = 24, double coeff_tol = 1e-12);

}  // namespace pqbasis::solver
