#include "pqbasis/lemma_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pqbasis/errors.hpp"
#include "pqbasis/fourier.hpp"
#include "pqbasis/pqtrig.hpp"
#include "pqbasis/quadrature.hpp"

namespace pqbasis::lemma {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kPremiseMargin = 1e-10;
constexpr int kGridPerSegment = 512;
// Slack for the pointwise comparison, which is exact at shared nodes.
constexpr double kGridSlack = 1e-13;

Segment linear() { return {SegmentKind::Linear, {}}; }
Segment constant(long num, long den) { return {SegmentKind::Constant, {num, den, 1}}; }
Segment omitted() { return {SegmentKind::Omitted, {}}; }

std::vector<InterpolantSpec> build_positivity() {
  std::vector<InterpolantSpec> out;
  {
    InterpolantSpec s;
    s.name = "a3_pos";
    s.j = 3;
    s.p_max = {4, 3};
    s.nodes_x = {{0, 1}, {1, 6}, {1, 3}, {1, 2}};
    s.nodes_y = {{0, 1}, {3, 4}, {1, 2, 3}, {1, 1}};
    s.segments = {linear(), linear(), constant(1, 1)};
    s.premise_nodes = {1, 2};
    s.premise_constants = {{1, {105, 100}}};
    s.claim = {0, 1};
    out.push_back(s);
  }
  {
    InterpolantSpec s;
    s.name = "a5_pos";
    s.j = 5;
    s.p_max = {6, 5};
    s.nodes_x = {{0, 1}, {1, 10}, {1, 5}, {2, 5}, {1, 2}};
    s.nodes_y = {{0, 1}, {171, 250}, {93, 100}, {99, 100}, {1, 1}};
    s.segments = {linear(), linear(), constant(1, 1), linear()};
    s.premise_nodes = {1, 2, 3};
    s.premise_constants = {{1, {1, 1}}, {2, {2, 1}}, {3, {3, 1}}};
    s.claim = {3, 100};
    out.push_back(s);
  }
  {
    InterpolantSpec s;
    s.name = "a7_pos";
    s.j = 7;
    s.p_max = {6, 5};
    s.nodes_x = {{0, 1}, {1, 14}, {1, 7}, {2, 7}, {3, 7}, {1, 2}};
    s.nodes_y = {{0, 1}, {283, 500}, {106, 125}, {1, 1}, {1, 1}, {1, 1}};
    s.segments = {linear(), linear(), omitted(), omitted(), constant(1, 1)};
    s.omitted_groups = {{2, 3}};
    s.premise_nodes = {1, 2};
    s.premise_constants = {{1, {73, 100}}, {2, {147, 100}}};
    s.claim = {3, 1000};
    out.push_back(s);
  }
  {
    InterpolantSpec s;
    s.name = "a9_pos";
    s.j = 9;
    s.p_max = {12, 11};
    s.nodes_x = {{0, 1}, {1, 18}, {1, 9}, {1, 3}, {4, 9}, {1, 2}};
    s.nodes_y = {{0, 1}, {17, 24}, {15, 16}, {15, 16}, {15, 16}, {15, 16}};
    s.segments = {linear(), linear(), omitted(), constant(1, 1), constant(15, 16)};
    s.omitted_groups = {{2}};
    s.premise_nodes = {1, 2};
    s.premise_constants = {{1, {112, 100}}, {2, {233, 100}}};
    s.claim = {0, 1};
    out.push_back(s);
  }
  return out;
}

std::vector<InterpolantSpec> build_bounds() {
  std::vector<InterpolantSpec> out;
  {
    InterpolantSpec s;
    s.name = "a1_gt";
    s.j = 1;
    s.p_max = {6, 5};
    s.nodes_x = {{0, 1}, {31, 250}, {101, 500}, {1, 2}};
    s.nodes_y = {{0, 1}, {4, 5}, {19, 20}, {1, 1}};
    s.segments = {linear(), linear(), linear()};
    s.premise_nodes = {1, 2};
    s.premise_constants = {{1, {129, 100}}, {2, {211, 100}}};
    s.claim = {839, 1000};
    out.push_back(s);
  }
  {
    InterpolantSpec s;
    s.name = "a3_lt";
    s.j = 3;
    s.side = BoundSide::Upper;
    s.p_max = {6, 5};
    s.nodes_x = {{0, 1}, {1, 3}, {1, 2}};
    s.nodes_y = {{0, 1}, {99, 100}, {1, 1}};
    s.segments = {constant(1, 1), linear()};
    s.premise_nodes = {1};
    s.premise_constants = {{1, {3, 1}}};
    s.claim = {151, 500};
    out.push_back(s);
  }
  {
    InterpolantSpec s;
    s.name = "a5_lt";
    s.j = 5;
    s.side = BoundSide::Upper;
    s.p_max = {6, 5};
    s.nodes_x = {{0, 1}, {1, 5}, {2, 5}, {1, 2}};
    s.nodes_y = {{0, 1}, {0, 1}, {0, 1}, {0, 1}};
    s.segments = {omitted(), omitted(), constant(1, 1)};
    s.omitted_groups = {{0, 1}};
    s.claim = {181, 1000};
    out.push_back(s);
  }
  {
    InterpolantSpec s;
    s.name = "a7_lt";
    s.j = 7;
    s.side = BoundSide::Upper;
    s.p_max = {6, 5};
    s.nodes_x = {{0, 1}, {1, 7}, {2, 7}, {5, 14}, {3, 7}, {1, 2}};
    s.nodes_y = {{0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}};
    s.segments = {omitted(), omitted(), constant(1, 1), omitted(), omitted()};
    s.omitted_groups = {{0, 1}, {3, 4}};
    s.claim = {13, 100};
    out.push_back(s);
  }
  return out;
}

void check_segment(const InterpolantSpec& spec, int segment) {
  if (segment < 0 || segment >= static_cast<int>(spec.segments.size())) {
    throw DomainError("segment_integral: no such segment in " + spec.name);
  }
}

// The line or constant on a kept segment.
struct Line {
  double slope;
  double x0;
  double y0;
  double at(double x) const { return y0 + slope * (x - x0); }
};

Line segment_line(const InterpolantSpec& spec, int i) {
  const Segment& seg = spec.segments[static_cast<std::size_t>(i)];
  const double x0 = spec.nodes_x[static_cast<std::size_t>(i)].value();
  if (seg.kind == SegmentKind::Constant) return {0.0, x0, seg.constant.value()};
  const double x1 = spec.nodes_x[static_cast<std::size_t>(i) + 1].value();
  const double y0 = spec.nodes_y[static_cast<std::size_t>(i)].value();
  const double y1 = spec.nodes_y[static_cast<std::size_t>(i) + 1].value();
  return {(y1 - y0) / (x1 - x0), x0, y0};
}

// s(x) = sin_{p,p}(pi_{p,p} x)
double scaled_sine(const trig::PqPair& pair, double x) {
  return trig::sin_pq(pair, pair.pi_pq() * x);
}

const InterpolantSpec& find_spec(const std::vector<InterpolantSpec>& specs,
                                 const std::string& item) {
  for (const auto& s : specs) {
    if (s.name == item) return s;
  }
  throw DomainError("unknown lemma item: " + item);
}

void check_range(const InterpolantSpec& spec, double p) {
  if (!(p > 1.0 && p <= spec.p_max.value())) {
    throw DomainError(spec.name + ": p outside the range (1, " +
                      std::to_string(spec.p_max.num) + "/" + std::to_string(spec.p_max.den) +
                      "]");
  }
}

}  // namespace

double Node::value() const {
  const double r = static_cast<double>(num) / static_cast<double>(den);
  return root == 1 ? r : r * std::sqrt(static_cast<double>(root));
}

const std::vector<InterpolantSpec>& positivity_specs() {
  static const std::vector<InterpolantSpec> specs = build_positivity();
  return specs;
}

const std::vector<InterpolantSpec>& bound_specs() {
  static const std::vector<InterpolantSpec> specs = build_bounds();
  return specs;
}

double segment_integral(const InterpolantSpec& spec, int segment, int j) {
  check_segment(spec, segment);
  if (spec.segments[static_cast<std::size_t>(segment)].kind == SegmentKind::Omitted) {
    throw DomainError("segment_integral: segment is omitted from the construction");
  }
  if (j < 1) throw DomainError("segment_integral: frequency must be positive");
  const Line line = segment_line(spec, segment);
  const double a = spec.nodes_x[static_cast<std::size_t>(segment)].value();
  const double b = spec.nodes_x[static_cast<std::size_t>(segment) + 1].value();
  const double k = j * kPi;
  // antiderivative of (m x + c) sin(k x)
  auto F = [&](double x) {
    return -line.at(x) * std::cos(k * x) / k + line.slope * std::sin(k * x) / (k * k);
  };
  return 2.0 * kSqrt2 * (F(b) - F(a));
}

double kept_integral(const InterpolantSpec& spec) {
  double total = 0.0;
  for (int i = 0; i < static_cast<int>(spec.segments.size()); ++i) {
    if (spec.segments[static_cast<std::size_t>(i)].kind == SegmentKind::Omitted) continue;
    total += segment_integral(spec, i, spec.j);
  }
  return total;
}

Verification verify(const InterpolantSpec& spec, double p) {
  check_range(spec, p);
  const trig::PqPair pair(p, p);
  const bool lower = spec.side == BoundSide::Lower;
  Verification v;
  v.name = spec.name;
  v.p = p;

  v.premises_hold = true;
  for (int i : spec.premise_nodes) {
    const double s = scaled_sine(pair, spec.nodes_x[static_cast<std::size_t>(i)].value());
    if (!(s - spec.nodes_y[static_cast<std::size_t>(i)].value() > kPremiseMargin)) {
      v.premises_hold = false;
    }
  }

  {
    const trig::PqPair end(spec.p_max.value(), spec.p_max.value());
    v.premise_constants_hold = true;
    for (const auto& [i, c] : spec.premise_constants) {
      const double y = spec.nodes_y[static_cast<std::size_t>(i)].value();
      const double x = spec.nodes_x[static_cast<std::size_t>(i)].value();
      const double cv = c.value();
      if (!(trig::arcsin_pq(end, y) < cv - kPremiseMargin &&
            cv < end.pi_pq() * x - kPremiseMargin)) {
        v.premise_constants_hold = false;
      }
    }
  }

  v.domination_holds = true;
  for (int i = 0; i < static_cast<int>(spec.segments.size()); ++i) {
    if (spec.segments[static_cast<std::size_t>(i)].kind == SegmentKind::Omitted) continue;
    const Line line = segment_line(spec, i);
    const double a = spec.nodes_x[static_cast<std::size_t>(i)].value();
    const double b = spec.nodes_x[static_cast<std::size_t>(i) + 1].value();
    for (int g = 0; g < kGridPerSegment; ++g) {
      const double x = a + (b - a) * (g + 0.5) / kGridPerSegment;
      const double w = std::sin(spec.j * kPi * x);
      const double model = line.at(x) * w;
      const double truth = scaled_sine(pair, x) * w;
      const bool ok = lower ? model <= truth + kGridSlack : model >= truth - kGridSlack;
      if (!ok) v.domination_holds = false;
    }
  }

  v.omitted_signs_hold = true;
  for (const auto& group : spec.omitted_groups) {
    double sum = 0.0;
    double err = 0.0;
    for (int i : group) {
      const double a = spec.nodes_x[static_cast<std::size_t>(i)].value();
      const double b = spec.nodes_x[static_cast<std::size_t>(i) + 1].value();
      const auto r = quad::integrate(
          [&](double x) { return scaled_sine(pair, x) * std::sin(spec.j * kPi * x); }, a, b,
          1e-10);
      sum += 2.0 * kSqrt2 * r.value;
      err += 2.0 * kSqrt2 * r.error_estimate;
    }
    const bool ok = lower ? sum - err >= 0.0 : sum + err <= 0.0;
    if (!ok) v.omitted_signs_hold = false;
  }

  v.kept_integral = kept_integral(spec);
  const double claim = spec.claim.value();
  v.claim_holds = lower ? v.kept_integral > claim : v.kept_integral < claim;

  const auto direct = fourier::coeff_eval(pair, spec.j);
  v.direct_value = direct.value;
  v.direct_error = direct.error;
  v.direct_agrees = lower ? direct.value - direct.error > v.kept_integral
                          : direct.value + direct.error < v.kept_integral;
  return v;
}

std::map<std::string, bool> verify_lemma61(double p) {
  if (!(p > 1.0 && p <= 4.0 / 3.0)) throw DomainError("verify_lemma61: p outside (1, 4/3]");
  std::map<std::string, bool> out;
  for (const auto& spec : positivity_specs()) {
    if (p <= spec.p_max.value()) out[spec.name] = verify(spec, p).verified();
  }
  return out;
}

Verification verify_lemma61(double p, const std::string& item) {
  return verify(find_spec(positivity_specs(), item), p);
}

std::map<std::string, bool> verify_lemma63(double p) {
  if (!(p > 1.0 && p <= 1.2)) throw DomainError("verify_lemma63: p outside (1, 6/5]");
  std::map<std::string, bool> out;
  for (const auto& spec : bound_specs()) out[spec.name] = verify(spec, p).verified();
  return out;
}

Verification verify_lemma63(double p, const std::string& item) {
  return verify(find_spec(bound_specs(), item), p);
}

double theorem64_gap(double p, double tol) {
  if (!(p > 1.0 && p <= 1.2)) throw DomainError("theorem64_gap: p outside (1, 6/5]");
  const trig::PqPair pair(p, p);
  double numer = fourier::coeff(pair, 1, tol);
  for (int j : {3, 5, 7}) numer -= fourier::coeff(pair, j, tol);
  const double denom =
      2.0 * kSqrt2 * (kPi * kPi / 8.0 - 1.0 - 1.0 / 9.0 - 1.0 / 25.0 - 1.0 / 49.0);
  return numer * kPi * kPi / denom - pair.pi_pq();
}

}  // namespace pqbasis::lemma
