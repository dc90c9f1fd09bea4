#pragma once

// Generalized p,q-trigonometric functions.
//
// F_{p,q}(y) = int_0^y (1 - t^q)^(-1/p) dt maps [0, 1] onto [0, pi_{p,q}/2];
// sin_{p,q} is its inverse, extended to the real line as an odd function,
// even about pi_{p,q}/2 and 2 pi_{p,q}-periodic. For p = q = 2 these are the
// classical sine and pi.

namespace pqbasis::trig {

/// A parameter point (p, q) with p, q > 1 and its cached half-period pi_{p,q}.
class PqPair {
 public:
  /// Throws DomainError unless p > 1 and q > 1 (both finite).
  PqPair(double p, double q);

  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }
  double pi_pq() const noexcept { return pi_pq_; }

  /// Parameters of the incomplete beta representation
  /// F_{p,q}(y) = (pi_{p,q} / 2) I(1/q, (p - 1)/p; y^q).
  double beta_a() const noexcept { return 1.0 / q_; }
  double beta_b() const noexcept { return (p_ - 1.0) / p_; }

  bool operator==(const PqPair&) const = default;

 private:
  double p_;
  double q_;
  double pi_pq_;
};

/// pi_{p,q} = 2 B(1/q, (p - 1)/p) / q.
double pi_pq(const PqPair& pair);

/// arcsin_{p,q}(y) = F_{p,q}(y) for y in [0, 1], through the regularized
/// incomplete beta function. arcsin_pq(pair, 1) is exactly pi_pq / 2.
double arcsin_pq(const PqPair& pair, double y);

/// arcsin_{p,q}(y) = y 2F1(1/p, 1/q; 1 + 1/q; y^q), y in [0, 1). Independent
/// of arcsin_pq; intended for y well away from 1.
double arcsin_pq_series(const PqPair& pair, double y);

/// sin_{p,q}(x) for any real x.
double sin_pq(const PqPair& pair, double x);

/// Reduce x to [0, pi_{p,q}/2] using the symmetries of sin_{p,q}.
/// Returns the reduced argument and the sign to apply to sin_{p,q} there.
struct Reduced {
  double x;
  int sign;
};
Reduced reduce_argument(const PqPair& pair, double x);

/// max over a dense grid of [delta, 1 - delta] of |s_1(x) - sgn(sin(pi x))|,
/// with s_1(x) = sin_{p,q}(pi_{p,q} x). delta must lie in (0, 1/4).
double square_wave_distance(const PqPair& pair, double delta);

}  // namespace pqbasis::trig
