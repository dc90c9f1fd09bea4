#pragma once

// Piecewise-linear minorants of s(x) = sin_{p,p}(pi_{p,p} x) on [0, 1/2] and
// the resulting bounds on the first Fourier coefficients along p = q.
//
// Every coefficient satisfies a_j = 2 sqrt(2) int_0^{1/2} s(x) sin(j pi x) dx.
// Splitting [0, 1/2] at the nodes x_0 < ... < x_n and replacing s on each
// segment by a line, a constant, or nothing (a segment whose contribution has
// a known sign) turns a_j into a sum of closed-form integrals.

#include <map>
#include <string>
#include <vector>

namespace pqbasis::lemma {

/// num / den * sqrt(root); the node tables are exact in this form.
struct Node {
  long num = 0;
  long den = 1;
  long root = 1;

  double value() const;
};

enum class SegmentKind { Linear, Constant, Omitted };

struct Segment {
  SegmentKind kind = SegmentKind::Linear;
  /// Used only by Constant segments.
  Node constant{};
};

enum class BoundSide { Lower, Upper };

struct InterpolantSpec {
  std::string name;
  int j = 1;
  BoundSide side = BoundSide::Lower;
  /// Largest p the construction covers; the range is (1, p_max].
  Node p_max{};
  std::vector<Node> nodes_x;
  std::vector<Node> nodes_y;
  /// One entry per interval [x_i, x_{i+1}].
  std::vector<Segment> segments;
  /// Groups of omitted segments whose combined integral of s(x) sin(j pi x)
  /// has the sign that makes dropping them safe (>= 0 for a lower bound,
  /// <= 0 for an upper bound).
  std::vector<std::vector<int>> omitted_groups;
  /// Nodes i where s(x_i) > y_i is required.
  std::vector<int> premise_nodes;
  /// Intermediate constants c_i with arcsin_{p,p}(y_i) < c_i < pi_{p,p} x_i
  /// at p = p_max, keyed by node index.
  std::map<int, Node> premise_constants;
  /// The bound claimed for the sum of the kept segment integrals
  /// (> claim for Lower, < claim for Upper).
  Node claim{};
};

/// Segment set of a_3, a_5, a_7, a_9 > 0 (keys "a3_pos", ...).
const std::vector<InterpolantSpec>& positivity_specs();
/// Segment set of a_1 > 839/1000, a_3 < 151/500, a_5 < 181/1000, a_7 < 13/100
/// (keys "a1_gt", "a3_lt", "a5_lt", "a7_lt"), all for 1 < p <= 6/5.
const std::vector<InterpolantSpec>& bound_specs();

/// 2 sqrt(2) int_{x_i}^{x_{i+1}} l_i(x) sin(j pi x) dx in closed form. Throws
/// DomainError for an omitted or out-of-range segment.
double segment_integral(const InterpolantSpec& spec, int segment, int j);

/// Sum of segment_integral over every kept segment at frequency spec.j.
double kept_integral(const InterpolantSpec& spec);

/// Detailed outcome of checking one construction at one p.
struct Verification {
  std::string name;
  double p = 0.0;
  /// s(x_i) - y_i > 1e-10 at every premise node.
  bool premises_hold = false;
  /// At p = p_max: arcsin_{p,p}(y_i) < c_i < pi_{p,p} x_i for the stored constants.
  bool premise_constants_hold = false;
  /// Pointwise l(x) sin(j pi x) <= s(x) sin(j pi x) (>= for upper bounds) on
  /// 512 interior points per kept segment.
  bool domination_holds = false;
  /// Every omitted group has the safe sign (by quadrature).
  bool omitted_signs_hold = false;
  double kept_integral = 0.0;
  bool claim_holds = false;
  double direct_value = 0.0;
  double direct_error = 0.0;
  /// The directly computed coefficient satisfies the claim beyond its error.
  bool direct_agrees = false;

  bool verified() const {
    return premises_hold && domination_holds && omitted_signs_hold && claim_holds &&
           direct_agrees;
  }
};

Verification verify(const InterpolantSpec& spec, double p);

/// Positivity of a_3, a_5, a_7, a_9 at p, for every item whose range contains
/// p. Throws DomainError when p lies outside (1, 4/3].
std::map<std::string, bool> verify_lemma61(double p);
/// One item ("a3_pos", "a5_pos", "a7_pos", "a9_pos"). Throws DomainError
/// when p is outside that item's range.
Verification verify_lemma61(double p, const std::string& item);

/// Bounds on a_1, a_3, a_5, a_7 for 1 < p <= 6/5. Throws DomainError outside.
std::map<std::string, bool> verify_lemma63(double p);
Verification verify_lemma63(double p, const std::string& item);

/// (a_1 - a_3 - a_5 - a_7) pi^2 / (2 sqrt(2) (pi^2/8 - 1 - 1/9 - 1/25 - 1/49)) - pi_{p,p}.
/// Positive where the family is a Schauder basis for every r > 1.
/// Throws DomainError outside (1, 6/5].
double theorem64_gap(double p, double tol = 1e-12);

}  // namespace pqbasis::lemma
