#pragma once

// Fourier sine coefficients of s_1(x) = sin_{p,q}(pi_{p,q} x) against the
// orthonormal family e_j(x) = sqrt(2) sin(j pi x) on (0, 1):
//
//   a_j = (2 sqrt(2) / (j pi)) int_0^1 cos((j pi / 2) I(1/q, (p-1)/p; x^q)) dx
//
// and their sum
//
//   sum_j a_j = (sqrt(2) / pi) int_0^1 log cot((pi / 4) I(1/q, (p-1)/p; x^q)) dx.
//
// a_j vanishes for even j. |a_j| <= 2 sqrt(2) pi_{p,q} / (j^2 pi^2), which
// gives the tail bound used throughout the criteria.

#include <cstddef>
#include <vector>

#include "pqbasis/pqtrig.hpp"
#include "pqbasis/quadrature.hpp"

namespace pqbasis::fourier {

using trig::PqPair;

inline constexpr int kDefaultKMax = 35;
inline constexpr double kDefaultTol = 1e-12;

/// A computed quantity with its quadrature error estimate.
struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

/// a_j(p, q) with its error estimate. Even j returns exact zero without
/// quadrature. Throws DomainError for j < 1 or tol < 1e-13.
Estimate coeff_eval(const PqPair& pair, int j, double tol = kDefaultTol,
                    std::size_t budget = quad::kDefaultBudget);

double coeff(const PqPair& pair, int j, double tol = kDefaultTol,
             std::size_t budget = quad::kDefaultBudget);

/// sum_{j >= 1} a_j(p, q) from the log-cot integral.
Estimate coeff_sum_eval(const PqPair& pair, double tol = kDefaultTol,
                        std::size_t budget = quad::kDefaultBudget);

double coeff_sum(const PqPair& pair, double tol = kDefaultTol,
                 std::size_t budget = quad::kDefaultBudget);

/// 2 sqrt(2) pi_{p,q} / (j^2 pi^2).
double coeff_magnitude_bound(const PqPair& pair, int j);

/// sum over odd j <= k of 1 / j^2.
double odd_inverse_square_sum(int k);

/// Upper bound on sum_{odd j > k} |a_j|:
/// (2 sqrt(2) pi_{p,q} / pi^2) (pi^2 / 8 - sum_{odd j <= k} 1 / j^2).
double tail_bound(const PqPair& pair, int k);

/// Coefficients a_j for odd j <= k_max plus the tail bound beyond k_max.
class CoeffTable {
 public:
  CoeffTable(PqPair pair, int k_max, std::vector<Estimate> odd_coefficients);

  const PqPair& pair() const noexcept { return pair_; }
  int k_max() const noexcept { return k_max_; }

  /// a_j; zero for even j. Throws DomainError for j < 1 or j > k_max.
  double at(int j) const;
  /// Quadrature error of a_j (zero for even j).
  double error_at(int j) const;

  /// Bound on sum_{odd j > k_max} |a_j|.
  double tail_bound() const noexcept { return tail_bound_; }
  /// sum_{odd j <= k_max} |a_j|.
  double abs_partial_sum() const noexcept { return abs_partial_sum_; }
  /// Sum of the quadrature errors of all stored coefficients.
  double total_error() const noexcept { return total_error_; }

  /// True if every stored a_j is >= 0 beyond its quadrature error.
  bool all_nonnegative() const;
  /// Same check restricted to odd j in [from, to].
  bool nonnegative_between(int from, int to) const;

  /// Stored odd-index values a_1, a_3, ..., a_{k_max}.
  const std::vector<Estimate>& odd_coefficients() const noexcept { return odd_; }

 private:
  PqPair pair_;
  int k_max_;
  std::vector<Estimate> odd_;
  double tail_bound_;
  double abs_partial_sum_;
  double total_error_;
};

/// Build a CoeffTable for odd j <= k_max (k_max odd, >= 1).
CoeffTable coeff_table(const PqPair& pair, int k_max = kDefaultKMax, double tol = kDefaultTol,
                       std::size_t budget = quad::kDefaultBudget);

/// sqrt(2)/2 on (1, 2)^2, otherwise 4 sqrt(2) / pi^2. Never exceeds a_1.
double a1_lower_bound(const PqPair& pair);

}  // namespace pqbasis::fourier
