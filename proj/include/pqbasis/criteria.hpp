#pragma once

// Sufficient conditions for invertibility of the change of coordinates
// A = sum_j a_j M_j and the resulting bounds on the Riesz constant
// r = ||A|| ||A^-1||.
//
// Every strict inequality in a hypothesis is tested at the adverse end of
// its numeric interval (quadrature error, tail bound), so a report with
// hypotheses_hold == true does not depend on roundoff. A failing criterion is
// inconclusive: it never certifies that A is singular.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "pqbasis/fourier.hpp"
#include "pqbasis/toeplitz.hpp"

namespace pqbasis::criteria {

enum class CriterionId { TRICK1, TRICK2, TRICK3, THM53A, THM53B, THM53C, PROP71 };

inline constexpr CriterionId kAllCriteria[] = {
    CriterionId::TRICK1, CriterionId::TRICK2, CriterionId::TRICK3, CriterionId::THM53A,
    CriterionId::THM53B, CriterionId::THM53C, CriterionId::PROP71};

std::string_view to_string(CriterionId id);
std::optional<CriterionId> criterion_from_string(std::string_view name);

using DetailValue = std::variant<bool, double, std::string>;

struct CriterionReport {
  CriterionId criterion_id = CriterionId::TRICK1;
  std::optional<int> k_used;
  bool hypotheses_hold = false;
  bool invertible = false;
  std::optional<double> riesz_upper;
  /// Named intermediate quantities, sorted by key.
  std::map<std::string, DetailValue> detail;

  bool operator==(const CriterionReport&) const = default;
};

/// Closed interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Enclosure of sum_{j not in excluded} |a_j| over all j >= 1.
///
/// With `sum_exact` and no stored coefficient negative beyond its error,
/// the exact coefficient sum is used (this assumes a_j >= 0 for every j, the
/// same assumption the log-cot sum formula rests on). Otherwise the stored
/// partial sum is widened by the quadrature errors and the tail bound.
/// `route` receives "exact-sum" or "partial+tail".
Interval abs_sum_excluding(const fourier::CoeffTable& table, std::initializer_list<int> excluded,
                           const std::optional<fourier::Estimate>& sum_exact,
                           std::string* route = nullptr);

/// sum_{j>=3} |a_j| < a_1  =>  A invertible on every L^r, and
/// r <= sum |a_j| / (a_1 - sum_{j>=3} |a_j|).
/// Throws IndeterminateVerdict when the enclosure straddles a_1.
CriterionReport trick1(const fourier::CoeffTable& table,
                       const std::optional<fourier::Estimate>& sum_exact);

/// (a_3/a_1, a_9/a_1) in R2 n T and sum_{j not in {1,9}} |a_j| < a_1 + a_9
/// => A invertible on L^2, r <= sum |a_j| / (a_1 + a_9 - sum_{j not in {1,9}} |a_j|).
CriterionReport trick2(const fourier::CoeffTable& table,
                       const std::optional<fourier::Estimate>& sum_exact);

/// (a_3/a_1, a_9/a_1) in R1 n T and
/// sum_{j not in {1,3,9}} |a_j| < (a_1 - a_9) sqrt(1 - a_3^2 / (4 a_1 a_9))
/// => A invertible on L^2 with the matching Riesz bound.
CriterionReport trick3(const fourier::CoeffTable& table,
                       const std::optional<fourier::Estimate>& sum_exact);

enum class Thm53Variant { A, B, C };

/// The three closed-form sufficient conditions built from a_1, a_3, a_9 and
/// pi_{p,q} alone (variant A holds for every r > 1, B and C for r = 2).
CriterionReport theorem53(const fourier::CoeffTable& table, Thm53Variant variant);

/// Truncated test at odd k >= 5: a_3, a_9 > 0, a_j >= 0 for odd 5 <= j <= k,
/// a_3 (a_1 + a_9) > 4 a_9 a_1 and
/// pi_{p,q} < (a_1 + a_9 - sum_{3<=j<=k, j != 9} a_j) pi^2 /
///            (2 sqrt(2) (pi^2/8 - sum_{odd j<=k} 1/j^2)).
/// Requires table.k_max() >= max(k, 9).
CriterionReport prop71(const fourier::CoeffTable& table, int k);

/// Right side minus left side of the last inequality of prop71 (nominal
/// values, no error widening). Positive where that inequality holds. Accepts
/// odd k >= 3.
double prop71_margin(const fourier::CoeffTable& table, int k);

/// a_j, or exactly 0 when |a_j| does not exceed its quadrature error (at
/// p = q = 2 every a_j with j >= 3 is zero up to rounding).
double resolved(const fourier::CoeffTable& table, int j);

/// (a_3 / a_1, a_9 / a_1) built from resolved coefficients.
toeplitz::SymbolParams symbol_params(const fourier::CoeffTable& table);

/// a_3 (a_1 + a_9) - 4 a_9 a_1 from resolved coefficients. Negative inside
/// the wedge where the symbol parameters fall in R1.
double wedge_margin(const fourier::CoeffTable& table);

/// 2 sqrt(2) pi^2 / (pi^2 - 8): the threshold for pi_{p,q} / a_1 in variant A.
double thm53a_threshold();

/// All seven reports for one table. Criteria whose verdict cannot be decided
/// at the available accuracy are returned as std::nullopt.
std::map<CriterionId, std::optional<CriterionReport>> evaluate_all(
    const fourier::CoeffTable& table, const std::optional<fourier::Estimate>& sum_exact, int k);

}  // namespace pqbasis::criteria
