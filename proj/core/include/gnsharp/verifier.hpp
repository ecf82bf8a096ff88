#pragma once

#include <optional>

#include "gnsharp/constants.hpp"
#include "gnsharp/extremizer.hpp"
#include "gnsharp/report.hpp"
#include "gnsharp/spectral.hpp"

/**
 * End-to-end numerical verification of the supnorm inequalities: the
 * interpolation bound, the embedding bound, the Young step relating them,
 * the lambda-scaling argument, and the sharpness of the constants on the
 * extremizing family.
 */

namespace gnsharp {

/// sup |u| <= gn_constant * l2^{1-n/2s} * hs_semi^{n/2s}.
InequalityReport check_interpolation(const GridFunction& u, const SobolevIndex& idx,
                                     double tolerance = 1e-9);
InequalityReport check_interpolation(const NormBundle& nb, const GridSpec& g,
                                     const SobolevIndex& idx, double tolerance = 1e-9);

/// sup |u| <= embedding_constant * hs_full.
InequalityReport check_embedding(const GridFunction& u, const SobolevIndex& idx,
                                 double tolerance = 1e-9);
InequalityReport check_embedding(const NormBundle& nb, const GridSpec& g,
                                 const SobolevIndex& idx, double tolerance = 1e-9);

/// young_factor * a^{1-n/2s} b^{n/2s} <= (a^2 + b^2)^{1/2}, exact arithmetic.
InequalityReport check_young(double a, double b, const SobolevIndex& idx,
                             double tolerance = 1e-12);

/// Samples f(lambda) = lambda^{-n} A^2 + lambda^{2s-n} B^2 on a log-spaced
/// grid spanning [lambda*/10, 10 lambda*], where (A, B) are the L^2 and
/// Hdot^s norms of u.  points >= 16.
ScalingSweepResult lambda_sweep(const GridFunction& u, const SobolevIndex& idx,
                                int points);

/// Same sweep from already-known norms A, B (e.g. the exact extremizer norms).
ScalingSweepResult lambda_sweep(double a, double b, const SobolevIndex& idx,
                                int points);

enum class SharpnessMethod { grid, exact };

/// Ratio lhs/rhs of the interpolation inequality for the extremizer.
/// method == exact evaluates the Beta closed forms (no grid and returns 1 to
/// ~1e-13); method == grid samples the extremizer spectrum on the given grid
/// (default: N = 256 for n in {1,2}, N = 64 for n = 3, L = 60) where the
/// deviation from 1 is set by the spectrum tail beyond the resolved band.
double sharpness_ratio(const SobolevIndex& idx, SharpnessMethod method,
                       std::optional<GridSpec> grid = std::nullopt);

/// Default verification grid for a given dimension.
GridSpec default_grid(int n, double box_length = 60.0);

}  // namespace gnsharp
