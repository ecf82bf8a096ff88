#pragma once

#include <cstdint>

#include "gnsharp/sobolev_index.hpp"
#include "gnsharp/spectral.hpp"

/**
 * The extremizing family  what(xi) = c / (1 + |xi|^{2s})  that turns the
 * L^1-bound, embedding and interpolation inequalities into equalities, plus
 * the deterministic test-function corpus (Gaussians and seeded random
 * band-limited functions).
 */

namespace gnsharp {

struct ExtremizerSpec {
    ExtremizerSpec(const SobolevIndex& index, double c);

    SobolevIndex idx;
    double amplitude;  // c >= 0
};

/// Coefficients c / (1 + |xi_k|^{2s}) sampled on the frequency lattice of g.
/// g.n() must equal spec.idx.n().
SpectralField bessel_potential_spectrum(const ExtremizerSpec& spec, const GridSpec& g);

/// Grid-free norms of the extremizer from the Beta closed forms:
///   l2^2      = c^2 omega_n (1/2s) B(n/2s, 2 - n/2s)
///   hs_semi^2 = c^2 omega_n (1/2s) B(n/2s + 1, 1 - n/2s)
///   l1        = c * lorentzian mass,   sup = w(0) = (2 pi)^{-n/2} l1.
/// c = 0 yields the degenerate flag.
NormBundle extremizer_norms_exact(const ExtremizerSpec& spec);

/// Samples of e^{-a |x|^2}, a > 0.
GridFunction gaussian(const GridSpec& g, double a);

/// Deterministic function of the seed: coefficients with independent
/// pseudo-random phases and magnitudes under an e^{-decay |xi|^2} envelope,
/// zero beyond |xi| > cutoff, conjugate-symmetrized so the physical samples
/// are real.  Requires 0 < cutoff < nyquist.
GridFunction random_band_limited(const GridSpec& g, std::uint64_t seed,
                                 double cutoff, double decay);

/// Corpus defaults: cutoff = 3/4 of the Nyquist frequency and
/// decay = 0.05 / nyquist^2 (negligible energy near the band edge).
double default_cutoff(const GridSpec& g);
double default_decay(const GridSpec& g);

}  // namespace gnsharp
