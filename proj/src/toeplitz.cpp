#include "pqbasis/toeplitz.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace pqbasis::toeplitz {

std::string_view to_string(Subregion s) {
  switch (s) {
    case Subregion::R1:
      return "R1";
    case Subregion::R2:
      return "R2";
    case Subregion::R3:
      return "R3";
  }
  return "R2";
}

RegionTag classify(const SymbolParams& params) {
  const double a = params.alpha;
  const double b = params.beta;
  RegionTag tag;
  tag.in_T = b < 1.0 && b - a + 1.0 > 0.0 && b + a + 1.0 > 0.0;
  const bool inner = std::fabs(a * (b + 1.0)) < std::fabs(4.0 * b);
  if (inner && b > 0.0) {
    tag.subregion = Subregion::R1;
  } else if (inner && b < 0.0) {
    tag.subregion = Subregion::R3;
  } else {
    tag.subregion = Subregion::R2;
  }
  return tag;
}

std::optional<RegionTag> classify_robust(const SymbolParams& params, double alpha_radius,
                                         double beta_radius, bool membership_only) {
  const RegionTag center = classify(params);
  // T is an intersection of half-planes, so its corners decide membership.
  // The R1/R3 cone |alpha (beta + 1)| < |4 beta| also changes across beta = 0
  // and alpha = 0, hence the extra axis points.
  const double alphas[] = {params.alpha - alpha_radius, params.alpha, params.alpha + alpha_radius};
  const double betas[] = {params.beta - beta_radius, params.beta, params.beta + beta_radius};
  for (double a : alphas) {
    for (double b : betas) {
      const RegionTag t = classify({a, b});
      if (t.in_T != center.in_T) return std::nullopt;
      if (!membership_only && t.subregion != center.subregion) return std::nullopt;
    }
  }
  if (!membership_only) {
    const bool crosses_alpha = (alphas[0] < 0.0) != (alphas[2] < 0.0);
    const bool crosses_beta = (betas[0] < 0.0) != (betas[2] < 0.0);
    if (crosses_alpha || crosses_beta) {
      for (double a : crosses_alpha ? std::initializer_list<double>{0.0, params.alpha}
                                    : std::initializer_list<double>{params.alpha}) {
        for (double b : crosses_beta ? std::initializer_list<double>{0.0, params.beta}
                                     : std::initializer_list<double>{params.beta}) {
          if (classify({a, b}).subregion != center.subregion) return std::nullopt;
        }
      }
    }
  }
  return center;
}

SymbolNorms symbol_extrema(const SymbolParams& params) {
  const double a = params.alpha;
  const double b = params.beta;
  double hi = std::max((1.0 + b + a) * (1.0 + b + a), (1.0 + b - a) * (1.0 + b - a));
  double lo = std::min((1.0 + b + a) * (1.0 + b + a), (1.0 + b - a) * (1.0 + b - a));
  if (b != 0.0) {
    const double c = -a * (b + 1.0) / (4.0 * b);
    if (std::fabs(c) <= 1.0) {
      const double interior = (1.0 - a * a / (4.0 * b)) * (b - 1.0) * (b - 1.0);
      hi = std::max(hi, interior);
      lo = std::min(lo, interior);
    }
  }
  const double circle_min = std::sqrt(std::max(lo, 0.0));
  return {std::sqrt(std::max(hi, 0.0)), circle_min, classify(params).in_T ? circle_min : 0.0};
}

bool is_invertible(const SymbolParams& params) { return classify(params).in_T; }

}  // namespace pqbasis::toeplitz
