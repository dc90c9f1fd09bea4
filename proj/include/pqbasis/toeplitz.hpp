#pragma once

// Scalar Toeplitz symbol b(z) = 1 + alpha z + beta z^2 of the three-term
// operator B = I + alpha M_3 + beta M_9 on L^2(0, 1).
//
// B is invertible iff (alpha, beta) lies in
//   T = { beta < 1, beta - alpha + 1 > 0, beta + alpha + 1 > 0 },
// and ||B||, ||B^-1||^-1 are the max and min of |b| on the unit circle.

#include <optional>
#include <string_view>

namespace pqbasis::toeplitz {

struct SymbolParams {
  double alpha = 0.0;
  double beta = 0.0;
};

enum class Subregion { R1, R2, R3 };

std::string_view to_string(Subregion s);

/// R1: |alpha (beta + 1)| < |4 beta| and beta > 0.
/// R3: |alpha (beta + 1)| < |4 beta| and beta < 0.
/// R2: everything else (the boundary |alpha (beta + 1)| = |4 beta| included).
struct RegionTag {
  bool in_T = false;
  Subregion subregion = Subregion::R2;

  bool operator==(const RegionTag&) const = default;
};

/// Extrema of |b| on the unit circle. norm_B is ||B||. inv_norm_B is the
/// circle minimum, which equals ||B^-1||^-1 when (alpha, beta) is in T.
/// disk_min is the minimum of |b| over the closed unit disk: inv_norm_B inside
/// T and 0 outside (a root of b lies in the closed disk).
struct SymbolNorms {
  double norm_B = 0.0;
  double inv_norm_B = 0.0;
  double disk_min = 0.0;
};

RegionTag classify(const SymbolParams& params);

/// Region tag that is stable under perturbations of alpha and beta by up to
/// the given radii: every corner of the box gets the same tag. nullopt when
/// the box straddles a region boundary. With membership_only, only the
/// in_T flag has to agree.
std::optional<RegionTag> classify_robust(const SymbolParams& params, double alpha_radius,
                                         double beta_radius, bool membership_only = false);

/// Extrema of b(theta) = |1 + alpha e^{i theta} + beta e^{2 i theta}|^2 over
/// the critical set { sin theta = 0 } u { cos theta = -alpha (beta + 1) / (4 beta) }.
///
/// The candidate values are (1 + beta + alpha)^2, (1 + beta - alpha)^2 and, when
/// the interior critical point exists, (1 - alpha^2 / (4 beta)) (beta - 1)^2.
/// Evaluating the candidates directly avoids the sign slip in the printed
/// R3 entry for ||B|| (whose radicand alpha^2/(4 beta) - 1 is negative for
/// beta < 0); the R3 maximum is (1 - beta) sqrt(1 - alpha^2 / (4 beta)).
SymbolNorms symbol_extrema(const SymbolParams& params);

bool is_invertible(const SymbolParams& params);

}  // namespace pqbasis::toeplitz
