#pragma once

/**
 * Real-valued special functions used by every constant in the library:
 * Gamma, Beta, the normalized sinc at sigma(r) = r*pi, and unit-sphere
 * surface areas.  All functions are pure and thread-safe.
 */

namespace gnsharp {

/// Gamma function for x > 0.  Relative error <= 1e-13 on (0, 50].
/// Throws std::domain_error for non-finite or non-positive x.
double gamma(double x);

/// log(Gamma(x)) for x > 0.
double log_gamma(double x);

/// Beta function B(a, b) = Gamma(a)Gamma(b)/Gamma(a+b), a > 0, b > 0.
double beta(double a, double b);

/// sin(r*pi)/(r*pi) for r in [0, 1), with sinc_sigma(0) == 1 exactly.
/// r >= 1 (equivalently s <= n/2 in the callers) is a domain error.
double sinc_sigma(double r);

/// Surface area of the unit sphere in R^n: omega_n = 2 pi^{n/2} / Gamma(n/2).
double unit_sphere_area(int n);

}  // namespace gnsharp
