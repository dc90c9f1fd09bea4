#pragma once

// Real special functions on the positive parameter ranges used by the
// p,q-trigonometric layer: gamma, log-gamma, beta, the regularized
// incomplete beta function and the hypergeometric series 2F1.
//
// All functions are pure and thread-safe. Domain violations throw
// pqbasis::DomainError.

namespace pqbasis::specfun {

/// A value together with an estimate of its absolute error.
struct EvalResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
};

/// Gamma function for 0 < x <= 171.6 (Stirling series after upward
/// recurrence to x >= 12).
double gamma(double x);

/// log(Gamma(x)) for x > 0.
double lgamma(double x);

/// Beta function B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b), a, b > 0.
double beta(double a, double b);

/// log(B(a, b)), a, b > 0.
double lbeta(double a, double b);

/// Regularized incomplete beta I_x(a, b) for a, b > 0 and x in [0, 1].
///
/// Continued fraction (modified Lentz) with the usual switch to
/// 1 - I_{1-x}(b, a) when x > (a + 1) / (a + b + 2). Stable for b down to
/// about 1e-3, which is the p -> 1 regime of the Fourier coefficients.
double betainc_reg(double a, double b, double x);

/// Same as betainc_reg(a, b, x), but the caller also supplies xc = 1 - x
/// computed without cancellation (for x close to 1).
double betainc_reg(double a, double b, double x, double xc);

/// betainc_reg with an error estimate.
EvalResult betainc_reg_eval(double a, double b, double x, double xc);

/// Gauss hypergeometric 2F1(a, b; c; z) by direct summation of the power
/// series, for c > 0 and z in [0, 1). No analytic continuation: z >= 1 is a
/// domain error. Convergence slows as z -> 1; callers should keep z well
/// below 1.
double hyp2f1(double a, double b, double c, double z);

/// hyp2f1 with a bound on the truncated tail of the series.
EvalResult hyp2f1_eval(double a, double b, double c, double z);

}  // namespace pqbasis::specfun
