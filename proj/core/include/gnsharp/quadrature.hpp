#pragma once

#include <functional>
#include <stdexcept>

#include "gnsharp/sobolev_index.hpp"

/**
 * High-accuracy evaluation of the radial integrals
 *
 *   I(n, s, p, q) = int_0^inf r^{n-1+2sq} (1 + r^{2s})^{-p} dr
 *
 * used as an independent oracle against the Beta closed form
 * (1/2s) B((n+2sq)/2s, p - (n+2sq)/2s), and of the Lorentzian mass
 * int_{R^n} (1 + |xi|^{2s})^{-1} dxi.
 */

namespace gnsharp {

/// Thrown when adaptive refinement hits the depth cap before the two finest
/// estimates agree; carries those last two estimates.
class QuadratureError : public std::runtime_error {
  public:
    QuadratureError(double coarse, double fine);
    double coarse_estimate() const { return coarse_; }
    double fine_estimate() const { return fine_; }

  private:
    double coarse_;
    double fine_;
};

class RadialIntegralSpec {
  public:
    /// power_p >= 1 is the exponent of (1+r^{2s})^{-p}; weight_q >= 0 adds an
    /// r^{2s q} factor.  The constructor rejects non-integrable combinations:
    /// the decay margin delta = 2s p - n - 2s q must exceed 1e-6.
    RadialIntegralSpec(const SobolevIndex& idx, int power_p, int weight_q);

    const SobolevIndex& index() const { return idx_; }
    int power_p() const { return p_; }
    int weight_q() const { return q_; }

    /// delta = 2s p - n - 2s q, the algebraic decay rate of the tail.
    double decay_margin() const;

  private:
    SobolevIndex idx_;
    int p_;
    int q_;
};

/// I(n, s, p, q) to absolute error <= 1e-10 * (1 + result).
double radial_integral(const RadialIntegralSpec& spec);

/// int_{R^n} (1+|xi|^{2s})^{-1} dxi, computed by quadrature as
/// unit_sphere_area(n) * I(n, s, 1, 0), with the closed form
/// (omega_n / n) * sigma / sin(sigma), sigma = pi n/(2s), returned alongside.
struct LorentzianMass {
    double quadrature = 0.0;
    double closed_form = 0.0;
};

LorentzianMass lorentzian_mass(const SobolevIndex& idx);

namespace detail {

/// Adaptive 15-point Gauss-Legendre with interval bisection: an interval is
/// accepted once the whole-interval and split estimates agree within the
/// local tolerance; recursion deeper than max_depth throws QuadratureError.
/// Subinterval results accumulate in recursion-tree order, so the sum is
/// deterministic for a fixed refinement path.
double adaptive_gauss_legendre(const std::function<double(double)>& f,
                               double a, double b,
                               double abs_tol, double rel_tol,
                               int max_depth = 30);

}  // namespace detail

}  // namespace gnsharp
