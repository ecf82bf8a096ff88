#pragma once

#include "gnsharp/sobolev_index.hpp"

/**
 * Closed-form sharp constants of the supnorm inequalities:
 *
 *   K(n,s)  -- interpolation constant:
 *              {4pi}^{-n/4} {(n/2)Gamma(n/2)}^{-1/2} {sinc_sigma(n/2s)}^{-1/2}
 *              {n/(2s-n)}^{-n/(4s)} {2s/(2s-n)}^{1/2}
 *   C(n,s)  -- embedding constant (first three factors of K),
 *   Y(n,s)  -- Young factor (last two factors of K), so K = C * Y.
 *
 * Powers are evaluated as exp(log) with the per-factor logs accumulated in
 * extended precision, keeping the relative error flat as s -> n/2 where the
 * individual factors blow up.
 */

namespace gnsharp {

/// Sharp constant of  ||u||_inf <= K(n,s) ||u||_2^{1-n/2s} ||u||_{Hdot^s}^{n/2s}.
double gn_constant(const SobolevIndex& idx);

/// Sharp constant of  ||u||_inf <= C(n,s) ||u||_{H^s}.
double embedding_constant(const SobolevIndex& idx);

/// The factor converting the geometric-mean bound into the full H^s bound:
/// Y(n,s) ||u||_2^{1-n/2s} ||u||_{Hdot^s}^{n/2s} <= ||u||_{H^s},
/// with equality exactly when n ||u||_2^2 = (2s-n) ||u||_{Hdot^s}^2.
double young_factor(const SobolevIndex& idx);

/// Minimizer of f(lambda) = lambda^{-n} a^2 + lambda^{2s-n} b^2 over lambda > 0.
/// For a = 0 the objective is monotone; the result carries value 0 and the
/// degenerate flag instead of a minimizer.
struct OptimalLambda {
    double value = 0.0;
    bool degenerate = false;
};

/// lambda* = (n a^2 / ((2s-n) b^2))^{1/(2s)}.  Requires a >= 0 and b > 0.
OptimalLambda optimal_lambda(const SobolevIndex& idx, double a, double b);

}  // namespace gnsharp
