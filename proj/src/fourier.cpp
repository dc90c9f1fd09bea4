#include "pqbasis/fourier.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "pqbasis/errors.hpp"
#include "pqbasis/specfun.hpp"

namespace pqbasis::fourier {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kMinTol = 1e-13;

// I(1/q, (p-1)/p; x^q) given x and 1 - x, both at full relative precision.
double ratio_at(const PqPair& pair, double x, double xc) {
  double z = 0.0;
  double zc = 0.0;
  if (x <= 0.5) {
    const double lx = std::log(x);
    z = std::exp(pair.q() * lx);
    zc = -std::expm1(pair.q() * lx);
  } else {
    const double lx = std::log1p(-xc);
    z = std::exp(pair.q() * lx);
    zc = -std::expm1(pair.q() * lx);
  }
  return specfun::betainc_reg(pair.beta_a(), pair.beta_b(), z, zc);
}

void check_tol(double tol) {
  if (!(tol >= kMinTol)) throw DomainError("fourier: tolerance must be at least 1e-13");
}

}  // namespace

Estimate coeff_eval(const PqPair& pair, int j, double tol, std::size_t budget) {
  if (j < 1) throw DomainError("coeff: index must be a positive integer");
  check_tol(tol);
  if (j % 2 == 0) return {0.0, 0.0};
  const double scale = 2.0 * kSqrt2 / (j * kPi);
  const double half_freq = 0.5 * j * kPi;
  const auto r = quad::integrate_split(
      [&](double x, double xc) { return std::cos(half_freq * ratio_at(pair, x, xc)); },
      tol / scale, budget);
  return {scale * r.value, scale * r.error_estimate};
}

double coeff(const PqPair& pair, int j, double tol, std::size_t budget) {
  return coeff_eval(pair, j, tol, budget).value;
}

Estimate coeff_sum_eval(const PqPair& pair, double tol, std::size_t budget) {
  check_tol(tol);
  const double scale = kSqrt2 / kPi;
  const auto r = quad::integrate_split(
      [&](double x, double xc) {
        const double t = 0.25 * kPi * ratio_at(pair, x, xc);
        // log cot t = log cos t - log sin t
        return std::log(std::cos(t)) - std::log(std::sin(t));
      },
      tol / scale, budget);
  return {scale * r.value, scale * r.error_estimate};
}

double coeff_sum(const PqPair& pair, double tol, std::size_t budget) {
  return coeff_sum_eval(pair, tol, budget).value;
}

double coeff_magnitude_bound(const PqPair& pair, int j) {
  if (j < 1) throw DomainError("coeff_magnitude_bound: index must be positive");
  return 2.0 * kSqrt2 * pair.pi_pq() / (static_cast<double>(j) * j * kPi * kPi);
}

double odd_inverse_square_sum(int k) {
  double s = 0.0;
  // Smallest terms first.
  int top = k % 2 == 0 ? k - 1 : k;
  for (int j = top; j >= 1; j -= 2) s += 1.0 / (static_cast<double>(j) * j);
  return s;
}

double tail_bound(const PqPair& pair, int k) {
  const double rest = kPi * kPi / 8.0 - odd_inverse_square_sum(k);
  return 2.0 * kSqrt2 * pair.pi_pq() / (kPi * kPi) * std::fmax(rest, 0.0);
}

CoeffTable::CoeffTable(PqPair pair, int k_max, std::vector<Estimate> odd_coefficients)
    : pair_(pair),
      k_max_(k_max),
      odd_(std::move(odd_coefficients)),
      tail_bound_(0.0),
      abs_partial_sum_(0.0),
      total_error_(0.0) {
  if (k_max < 1 || k_max % 2 == 0) throw DomainError("CoeffTable: k_max must be odd and >= 1");
  if (odd_.size() != static_cast<std::size_t>((k_max + 1) / 2)) {
    throw DomainError("CoeffTable: need one coefficient per odd index up to k_max");
  }
  tail_bound_ = fourier::tail_bound(pair_, k_max_);
  for (auto it = odd_.rbegin(); it != odd_.rend(); ++it) {
    abs_partial_sum_ += std::fabs(it->value);
    total_error_ += it->error;
  }
}

double CoeffTable::at(int j) const {
  if (j < 1 || j > k_max_) throw DomainError("CoeffTable: index outside the table");
  if (j % 2 == 0) return 0.0;
  return odd_[static_cast<std::size_t>((j - 1) / 2)].value;
}

double CoeffTable::error_at(int j) const {
  if (j < 1 || j > k_max_) throw DomainError("CoeffTable: index outside the table");
  if (j % 2 == 0) return 0.0;
  return odd_[static_cast<std::size_t>((j - 1) / 2)].error;
}

bool CoeffTable::nonnegative_between(int from, int to) const {
  for (int j = from % 2 == 0 ? from + 1 : from; j <= to && j <= k_max_; j += 2) {
    const auto& e = odd_[static_cast<std::size_t>((j - 1) / 2)];
    if (e.value + e.error < 0.0) return false;
  }
  return true;
}

bool CoeffTable::all_nonnegative() const { return nonnegative_between(1, k_max_); }

CoeffTable coeff_table(const PqPair& pair, int k_max, double tol, std::size_t budget) {
  if (k_max < 1 || k_max % 2 == 0) throw DomainError("coeff_table: k_max must be odd and >= 1");
  std::vector<Estimate> odd;
  odd.reserve(static_cast<std::size_t>((k_max + 1) / 2));
  for (int j = 1; j <= k_max; j += 2) odd.push_back(coeff_eval(pair, j, tol, budget));
  return CoeffTable(pair, k_max, std::move(odd));
}

double a1_lower_bound(const PqPair& pair) {
  if (pair.p() < 2.0 && pair.q() < 2.0) return kSqrt2 / 2.0;
  return 4.0 * kSqrt2 / (kPi * kPi);
}

}  // namespace pqbasis::fourier
