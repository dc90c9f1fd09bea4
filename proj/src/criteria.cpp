#include "pqbasis/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pqbasis/errors.hpp"
#include "pqbasis/toeplitz.hpp"

namespace pqbasis::criteria {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

using fourier::CoeffTable;
using fourier::Estimate;

struct Coef {
  double value;
  double error;
  double lo() const { return value - error; }
  double hi() const { return value + error; }
};

Coef coef(const CoeffTable& t, int j) { return {t.at(j), t.error_at(j)}; }

bool is_excluded(int j, std::initializer_list<int> excluded) {
  return std::find(excluded.begin(), excluded.end(), j) != excluded.end();
}

// Symbol parameters (a_3/a_1, a_9/a_1) with their propagated radii.
struct RatioBox {
  toeplitz::SymbolParams params;
  double alpha_radius;
  double beta_radius;
};

RatioBox ratios(const CoeffTable& t) {
  const Coef a1 = coef(t, 1);
  const Coef a3 = coef(t, 3);
  const Coef a9 = coef(t, 9);
  const double denom = a1.lo();
  return {{a3.value / a1.value, a9.value / a1.value},
          (a3.error + std::fabs(a3.value) * a1.error / a1.value) / denom,
          (a9.error + std::fabs(a9.value) * a1.error / a1.value) / denom};
}

void require_k(const CoeffTable& t, int k, const char* who) {
  if (t.k_max() < k) {
    throw DomainError(std::string(who) + ": coefficient table must reach index " +
                      std::to_string(k));
  }
}

CriterionReport base_report(CriterionId id, const CoeffTable& t) {
  CriterionReport r;
  r.criterion_id = id;
  r.k_used = t.k_max();
  r.detail["a1"] = t.at(1);
  if (t.k_max() >= 3) r.detail["a3"] = t.at(3);
  if (t.k_max() >= 9) r.detail["a9"] = t.at(9);
  r.detail["pi_pq"] = t.pair().pi_pq();
  return r;
}

void add_region(CriterionReport& r, const toeplitz::RegionTag& tag) {
  r.detail["in_T"] = tag.in_T;
  r.detail["subregion"] = std::string(toeplitz::to_string(tag.subregion));
}

// Decide lhs < rhs for interval-valued sides: true if it holds at the
// adverse ends, false if it fails at the favourable ends, else indeterminate.
bool decide_less(const Interval& lhs, const Interval& rhs, const char* who) {
  if (lhs.hi < rhs.lo) return true;
  if (lhs.lo >= rhs.hi) return false;
  throw IndeterminateVerdict(std::string(who) +
                             ": interval straddles the threshold; raise k_max or tighten tol");
}

// (a_1 - a_9) sqrt(1 - a_3^2 / (4 a_1 a_9)) over the corners of the error box.
Interval r1_min_enclosure(const Coef& a1, const Coef& a3, const Coef& a9) {
  Interval out{INFINITY, -INFINITY};
  for (double x1 : {a1.lo(), a1.hi()}) {
    for (double x3 : {a3.lo(), a3.hi()}) {
      for (double x9 : {a9.lo(), a9.hi()}) {
        const double rad = 1.0 - x3 * x3 / (4.0 * x1 * x9);
        const double v = (x1 - x9) * std::sqrt(std::max(rad, 0.0));
        out.lo = std::min(out.lo, v);
        out.hi = std::max(out.hi, v);
      }
    }
  }
  return out;
}

// trick2 when (a_3/a_1, a_9/a_1) lies robustly in T but within rounding of
// the R1/R2/R3 boundary (for instance at the origin, p = q = 2). The symbol
// min is 1-Lipschitz in (alpha, beta) on the unit circle, so
// ||B^-1||^-1 >= a_1 (circle_min(alpha, beta) - r_alpha - r_beta), and the
// perturbation argument goes through with that bound in place of a_1 + a_9 - |a_3|.
CriterionReport trick2_on_subregion_boundary(const CoeffTable& table,
                                             const std::optional<Estimate>& sum_exact,
                                             const RatioBox& box, CriterionReport r) {
  r.detail["in_T"] = true;
  r.detail["subregion"] = std::string("boundary");
  std::string route;
  const Interval rest = abs_sum_excluding(table, {1, 3, 9}, sum_exact, &route);
  const Coef a1 = coef(table, 1);
  const Coef a3 = coef(table, 3);
  const Coef a9 = coef(table, 9);
  const double circle_min = toeplitz::symbol_extrema(box.params).inv_norm_B;
  const double bound = a1.lo() * (circle_min - box.alpha_radius - box.beta_radius);
  r.detail["route"] = route;
  r.detail["sum_rest_lo"] = rest.lo;
  r.detail["sum_rest_hi"] = rest.hi;
  r.detail["symbol_min"] = bound;
  r.hypotheses_hold = decide_less(rest, {bound, a1.hi() * circle_min}, "trick2");
  r.invertible = r.hypotheses_hold;
  if (r.hypotheses_hold) {
    const double total = a1.hi() + std::fabs(a3.value) + a3.error + std::fabs(a9.value) +
                         a9.error + rest.hi;
    r.riesz_upper = total / (bound - rest.hi);
  }
  return r;
}

}  // namespace

std::string_view to_string(CriterionId id) {
  switch (id) {
    case CriterionId::TRICK1:
      return "TRICK1";
    case CriterionId::TRICK2:
      return "TRICK2";
    case CriterionId::TRICK3:
      return "TRICK3";
    case CriterionId::THM53A:
      return "THM53A";
    case CriterionId::THM53B:
      return "THM53B";
    case CriterionId::THM53C:
      return "THM53C";
    case CriterionId::PROP71:
      return "PROP71";
  }
  return "?";
}

std::optional<CriterionId> criterion_from_string(std::string_view name) {
  for (auto id : kAllCriteria) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

Interval abs_sum_excluding(const CoeffTable& table, std::initializer_list<int> excluded,
                           const std::optional<Estimate>& sum_exact, std::string* route) {
  for (int j : excluded) require_k(table, j, "abs_sum_excluding");
  if (sum_exact && table.all_nonnegative()) {
    double value = sum_exact->value;
    double err = sum_exact->error;
    for (int j : excluded) {
      value -= table.at(j);
      err += table.error_at(j);
    }
    // Stored coefficients may sit within their error below zero.
    err += 2.0 * table.total_error();
    if (route) *route = "exact-sum";
    return {value - err, value + err};
  }
  double partial = 0.0;
  double err = 0.0;
  for (int j = table.k_max(); j >= 1; j -= 2) {
    if (is_excluded(j, excluded)) continue;
    partial += std::fabs(table.at(j));
    err += table.error_at(j);
  }
  if (route) *route = "partial+tail";
  return {std::max(partial - err, 0.0), partial + err + table.tail_bound()};
}

CriterionReport trick1(const CoeffTable& table, const std::optional<Estimate>& sum_exact) {
  CriterionReport r = base_report(CriterionId::TRICK1, table);
  r.detail["setting"] = std::string("r>1");
  std::string route;
  const Interval rest = abs_sum_excluding(table, {1}, sum_exact, &route);
  const Coef a1 = coef(table, 1);
  r.detail["route"] = route;
  r.detail["tail_bound"] = table.tail_bound();
  r.detail["sum_rest_lo"] = rest.lo;
  r.detail["sum_rest_hi"] = rest.hi;
  r.hypotheses_hold = decide_less(rest, {a1.lo(), a1.hi()}, "trick1");
  r.invertible = r.hypotheses_hold;
  if (r.hypotheses_hold) r.riesz_upper = (a1.hi() + rest.hi) / (a1.lo() - rest.hi);
  return r;
}

CriterionReport trick2(const CoeffTable& table, const std::optional<Estimate>& sum_exact) {
  require_k(table, 9, "trick2");
  CriterionReport r = base_report(CriterionId::TRICK2, table);
  r.detail["setting"] = std::string("r=2");
  const auto box = ratios(table);
  r.detail["alpha"] = box.params.alpha;
  r.detail["beta"] = box.params.beta;
  const auto tag = toeplitz::classify_robust(box.params, box.alpha_radius, box.beta_radius);
  if (!tag) {
    const bool in_T = toeplitz::classify_robust(box.params, box.alpha_radius, box.beta_radius,
                                                /*membership_only=*/true)
                          .has_value();
    if (!in_T) throw IndeterminateVerdict("trick2: symbol parameters sit on the boundary of T");
    return trick2_on_subregion_boundary(table, sum_exact, box, std::move(r));
  }
  add_region(r, *tag);
  if (!(tag->in_T && tag->subregion == toeplitz::Subregion::R2)) return r;

  std::string route;
  const Interval rest = abs_sum_excluding(table, {1, 9}, sum_exact, &route);
  const Coef a1 = coef(table, 1);
  const Coef a9 = coef(table, 9);
  const Interval rhs{a1.lo() + a9.lo(), a1.hi() + a9.hi()};
  r.detail["route"] = route;
  r.detail["sum_rest_lo"] = rest.lo;
  r.detail["sum_rest_hi"] = rest.hi;
  r.hypotheses_hold = decide_less(rest, rhs, "trick2");
  r.invertible = r.hypotheses_hold;
  if (r.hypotheses_hold) {
    const double total = a1.hi() + std::fabs(a9.value) + a9.error + rest.hi;
    r.riesz_upper = total / (rhs.lo - rest.hi);
  }
  return r;
}

CriterionReport trick3(const CoeffTable& table, const std::optional<Estimate>& sum_exact) {
  require_k(table, 9, "trick3");
  CriterionReport r = base_report(CriterionId::TRICK3, table);
  r.detail["setting"] = std::string("r=2");
  const auto box = ratios(table);
  r.detail["alpha"] = box.params.alpha;
  r.detail["beta"] = box.params.beta;
  const auto tag = toeplitz::classify_robust(box.params, box.alpha_radius, box.beta_radius);
  if (!tag) {
    const bool in_T = toeplitz::classify_robust(box.params, box.alpha_radius, box.beta_radius,
                                                /*membership_only=*/true)
                          .has_value();
    if (!in_T) throw IndeterminateVerdict("trick3: symbol parameters sit on the boundary of T");
    // Membership in R1 cannot be certified: not applicable.
    r.detail["in_T"] = true;
    r.detail["subregion"] = std::string("boundary");
    return r;
  }
  add_region(r, *tag);
  if (!(tag->in_T && tag->subregion == toeplitz::Subregion::R1)) return r;

  const Coef a1 = coef(table, 1);
  const Coef a3 = coef(table, 3);
  const Coef a9 = coef(table, 9);
  if (!(a1.lo() * a9.lo() > 0.0)) {
    throw DomainError("trick3: region R1 requires a_1 a_9 > 0");
  }
  std::string route;
  const Interval rest = abs_sum_excluding(table, {1, 3, 9}, sum_exact, &route);
  const Interval rhs = r1_min_enclosure(a1, a3, a9);
  r.detail["route"] = route;
  r.detail["sum_rest_lo"] = rest.lo;
  r.detail["sum_rest_hi"] = rest.hi;
  r.detail["symbol_min"] = 0.5 * (rhs.lo + rhs.hi);
  r.hypotheses_hold = decide_less(rest, rhs, "trick3");
  r.invertible = r.hypotheses_hold;
  if (r.hypotheses_hold) {
    const double total = a1.hi() + std::fabs(a3.value) + a3.error + std::fabs(a9.value) +
                         a9.error + rest.hi;
    r.riesz_upper = total / (rhs.lo - rest.hi);
  }
  return r;
}

double thm53a_threshold() { return 2.0 * kSqrt2 * kPi * kPi / (kPi * kPi - 8.0); }

CriterionReport theorem53(const CoeffTable& table, Thm53Variant variant) {
  const double pi_pq = table.pair().pi_pq();
  const Coef a1 = coef(table, 1);
  if (variant == Thm53Variant::A) {
    CriterionReport r = base_report(CriterionId::THM53A, table);
    r.detail["setting"] = std::string("r>1");
    const double lhs = pi_pq / a1.lo();
    const double rhs = thm53a_threshold();
    r.detail["lhs"] = pi_pq / a1.value;
    r.detail["rhs"] = rhs;
    r.hypotheses_hold = lhs < rhs;
    r.invertible = r.hypotheses_hold;
    return r;
  }

  require_k(table, 9, "theorem53");
  const Coef a3 = coef(table, 3);
  const Coef a9 = coef(table, 9);
  const bool b_variant = variant == Thm53Variant::B;
  CriterionReport r =
      base_report(b_variant ? CriterionId::THM53B : CriterionId::THM53C, table);
  r.detail["setting"] = std::string("r=2");
  const bool signs = a3.lo() > 0.0 && a9.lo() > 0.0;
  // a_3 (a_1 + a_9) - 4 a_9 a_1 and a bound on its propagated error.
  const double wedge = wedge_margin(table);
  const double wedge_err = a3.error * (a1.value + a9.value) +
                           std::fabs(a3.value) * (a1.error + a9.error) +
                           4.0 * (a9.error * a1.value + std::fabs(a9.value) * a1.error);
  r.detail["wedge_margin"] = wedge;
  r.detail["wedge_boundary_hit"] = std::fabs(wedge) <= wedge_err;
  r.detail["signs_positive"] = signs;

  if (b_variant) {
    const bool wedge_ok = wedge - wedge_err >= 0.0;
    const double rhs = kPi * kPi / ((kPi * kPi / 8.0 - 82.0 / 81.0) * 2.0 * kSqrt2);
    const double lhs_hi = pi_pq / (a1.lo() + a9.lo());
    r.detail["lhs"] = pi_pq / (a1.value + a9.value);
    r.detail["rhs"] = rhs;
    r.hypotheses_hold = signs && wedge_ok && lhs_hi < rhs;
  } else {
    const bool wedge_ok = wedge + wedge_err < 0.0;
    const double rhs = kPi * kPi / ((kPi * kPi / 8.0 - 91.0 / 81.0) * 2.0 * kSqrt2);
    r.detail["rhs"] = rhs;
    bool ineq = false;
    if (signs && wedge_ok) {
      const Interval denom = r1_min_enclosure(a1, a3, a9);
      r.detail["lhs"] = pi_pq / (0.5 * (denom.lo + denom.hi));
      ineq = denom.lo > 0.0 && pi_pq / denom.lo < rhs;
    }
    r.hypotheses_hold = signs && wedge_ok && ineq;
  }
  r.invertible = r.hypotheses_hold;
  return r;
}

double resolved(const CoeffTable& table, int j) {
  const double v = table.at(j);
  return std::fabs(v) <= table.error_at(j) ? 0.0 : v;
}

toeplitz::SymbolParams symbol_params(const CoeffTable& table) {
  require_k(table, 9, "symbol_params");
  const double a1 = table.at(1);
  return {resolved(table, 3) / a1, resolved(table, 9) / a1};
}

double wedge_margin(const CoeffTable& table) {
  require_k(table, 9, "wedge_margin");
  const double a1 = table.at(1);
  const double a3 = resolved(table, 3);
  const double a9 = resolved(table, 9);
  return a3 * (a1 + a9) - 4.0 * a9 * a1;
}

namespace {

struct Prop71Sides {
  double rhs;
  double rhs_error;
};

Prop71Sides prop71_sides(const CoeffTable& table, int k) {
  double middle = 0.0;
  double err = table.error_at(1) + table.error_at(9);
  for (int j = k; j >= 3; j -= 2) {
    if (j == 9) continue;
    middle += table.at(j);
    err += table.error_at(j);
  }
  const double numer = table.at(1) + table.at(9) - middle;
  const double factor =
      kPi * kPi / (2.0 * kSqrt2 * (kPi * kPi / 8.0 - fourier::odd_inverse_square_sum(k)));
  return {numer * factor, err * factor};
}

void check_prop71_k(const CoeffTable& table, int k, int k_min) {
  if (k < k_min || k % 2 == 0) {
    throw DomainError("prop71: k must be odd and >= " + std::to_string(k_min));
  }
  require_k(table, std::max(k, 9), "prop71");
}

}  // namespace

double prop71_margin(const CoeffTable& table, int k) {
  check_prop71_k(table, k, 3);
  return prop71_sides(table, k).rhs - table.pair().pi_pq();
}

CriterionReport prop71(const CoeffTable& table, int k) {
  check_prop71_k(table, k, 5);
  CriterionReport r = base_report(CriterionId::PROP71, table);
  r.k_used = k;
  r.detail["setting"] = std::string("r=2");
  const Coef a3 = coef(table, 3);
  const Coef a9 = coef(table, 9);
  const bool signs = a3.lo() > 0.0 && a9.lo() > 0.0;
  bool rest_nonneg = true;
  for (int j = 5; j <= k; j += 2) {
    if (j == 9) continue;
    if (table.at(j) - table.error_at(j) < 0.0) rest_nonneg = false;
  }
  const double wedge = wedge_margin(table);
  const double a1 = table.at(1);
  const double wedge_err = a3.error * (a1 + a9.value) +
                           std::fabs(a3.value) * (table.error_at(1) + a9.error) +
                           4.0 * (a9.error * a1 + std::fabs(a9.value) * table.error_at(1));
  const auto sides = prop71_sides(table, k);
  const double pi_pq = table.pair().pi_pq();
  r.detail["signs_positive"] = signs;
  r.detail["higher_nonnegative"] = rest_nonneg;
  r.detail["wedge_margin"] = wedge;
  r.detail["rhs"] = sides.rhs;
  r.detail["margin"] = sides.rhs - pi_pq;
  r.hypotheses_hold =
      signs && rest_nonneg && wedge - wedge_err > 0.0 && pi_pq < sides.rhs - sides.rhs_error;
  r.invertible = r.hypotheses_hold;
  return r;
}

std::map<CriterionId, std::optional<CriterionReport>> evaluate_all(
    const CoeffTable& table, const std::optional<Estimate>& sum_exact, int k) {
  std::map<CriterionId, std::optional<CriterionReport>> out;
  auto attempt = [&](CriterionId id, auto&& fn) {
    try {
      out[id] = fn();
    } catch (const IndeterminateVerdict&) {
      out[id] = std::nullopt;
    }
  };
  attempt(CriterionId::TRICK1, [&] { return trick1(table, sum_exact); });
  attempt(CriterionId::TRICK2, [&] { return trick2(table, sum_exact); });
  attempt(CriterionId::TRICK3, [&] { return trick3(table, sum_exact); });
  attempt(CriterionId::THM53A, [&] { return theorem53(table, Thm53Variant::A); });
  attempt(CriterionId::THM53B, [&] { return theorem53(table, Thm53Variant::B); });
  attempt(CriterionId::THM53C, [&] { return theorem53(table, Thm53Variant::C); });
  attempt(CriterionId::PROP71, [&] { return prop71(table, k); });
  return out;
}

}  // namespace pqbasis::criteria
