#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "gnsharp/grid_spec.hpp"
#include "gnsharp/report.hpp"

/**
 * Physical-space samples, Fourier coefficients and norms on the periodic box.
 *
 * Transform convention: the forward transform folds (2 pi)^{-n/2} h^n into
 * the coefficients,
 *
 *   uhat(xi_k) = (2 pi)^{-n/2} h^n sum_j e^{-i x_j . xi_k} u(x_j),
 *
 * so SpectralField directly approximates the continuum transform
 * uhat(xi) = (2 pi)^{-n/2} int e^{-i x.xi} u(x) dx, and every frequency-side
 * quadrature uses the plain (delta xi)^n Riemann weight.  With these weights
 * the discrete transform is exactly unitary: inverse(forward(u)) == u and
 * the physical and spectral L^2 norms agree to rounding.
 */

namespace gnsharp {

using complex = std::complex<double>;

class SpectralField;

/// Complex samples u(x_j) on a GridSpec, row-major over axes, all finite.
class GridFunction {
  public:
    GridFunction(GridSpec spec, std::vector<complex> samples);

    const GridSpec& spec() const { return spec_; }
    std::span<const complex> samples() const { return samples_; }
    std::vector<complex>& mutable_samples() { return samples_; }

  private:
    GridSpec spec_;
    std::vector<complex> samples_;
};

/// Coefficients uhat(xi_k), stored in DFT index order (same row-major layout
/// as GridFunction; component m of a storage index means k = m or m - N).
class SpectralField {
  public:
    SpectralField(GridSpec spec, std::vector<complex> coefficients);

    const GridSpec& spec() const { return spec_; }
    std::span<const complex> coefficients() const { return coefficients_; }
    std::vector<complex>& mutable_coefficients() { return coefficients_; }

    /// |xi_k|^2 for the storage index `flat` (decoded per axis).
    double freq_norm_sq(std::size_t flat) const;

  private:
    GridSpec spec_;
    std::vector<complex> coefficients_;
};

/// The five norms of one function, with the regularity order s it was
/// computed at recorded alongside.  degenerate marks the zero function.
struct NormBundle {
    double l2 = 0.0;          // (h^n sum |u_j|^2)^{1/2}
    double hs_semi = 0.0;     // (dxi^n sum |xi_k|^{2s} |uhat_k|^2)^{1/2}
    double hs_full = 0.0;     // (dxi^n sum (1+|xi_k|^{2s}) |uhat_k|^2)^{1/2}
    double sup = 0.0;         // max_j |u_j|
    double l1_fourier = 0.0;  // dxi^n sum |uhat_k|
    double s = 0.0;
    bool degenerate = false;
};

SpectralField forward_transform(const GridFunction& u);
GridFunction inverse_transform(const SpectralField& f);

/// All five norms; transforms internally.  Requires s > 0.
NormBundle norms(const GridFunction& u, double s);

/// Same, reusing an already-computed transform of u.
NormBundle norms(const GridFunction& u, const SpectralField& uhat, double s);

/// Checks  sup |u| <= (2 pi)^{-n/2} ||uhat||_{L^1}  on the grid.  The bound
/// holds exactly for any grid function; the ratio is 1 (to rounding) when
/// the coefficients are real and nonnegative.
InequalityReport l1_bound_check(const GridFunction& u, double tolerance = 1e-9);
InequalityReport l1_bound_check(const GridFunction& u, const SpectralField& uhat,
                                double tolerance = 1e-9);

/// The dilated function u(lambda x), represented on the box rescaled to
/// L/lambda with the sample array unchanged.  Physical weights and the
/// frequency lattice rescale with the box, so the continuum dilation laws
///   ||u_lambda||_2 = lambda^{-n/2} ||u||_2,
///   ||u_lambda||_{Hdot^s} = lambda^{s-n/2} ||u||_{Hdot^s},
///   sup |u_lambda| = sup |u|
/// hold exactly for arbitrary real lambda > 0, and every inequality ratio is
/// invariant under dilation to rounding accuracy.
GridFunction dilate(const GridFunction& u, double lambda);

/// Samples f at the grid nodes (f receives the coordinates of one node).
GridFunction sample_physical(const GridSpec& g,
                             const std::function<complex(std::span<const double>)>& f);

/// Samples f on the frequency lattice (f receives xi_k).
SpectralField sample_spectral(const GridSpec& g,
                              const std::function<complex(std::span<const double>)>& f);

namespace detail {

/// Pairwise (tree) reduction; deterministic and accurate to O(eps log n).
double pairwise_sum(std::span<double> terms);

}  // namespace detail

}  // namespace gnsharp
