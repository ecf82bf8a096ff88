#include "gnsharp/extremizer.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "gnsharp/quadrature.hpp"
#include "gnsharp/special_functions.hpp"

namespace gnsharp {

ExtremizerSpec::ExtremizerSpec(const SobolevIndex& index, double c) : idx(index), amplitude(c) {
    if (!std::isfinite(c) || c < 0.0) {
        throw std::domain_error("ExtremizerSpec requires amplitude c >= 0");
    }
}

SpectralField bessel_potential_spectrum(const ExtremizerSpec& spec, const GridSpec& g) {
    if (g.n() != spec.idx.n()) {
        throw std::domain_error("bessel_potential_spectrum: grid dimension does not match the index");
    }
    const double s = spec.idx.s();
    const double c = spec.amplitude;
    return sample_spectral(g, [s, c](std::span<const double> xi) {
        double norm_sq = 0.0;
        for (double component : xi) {
            norm_sq += component * component;
        }
        return complex(c / (1.0 + std::pow(norm_sq, s)), 0.0);
    });
}

NormBundle extremizer_norms_exact(const ExtremizerSpec& spec) {
    NormBundle nb;
    nb.s = spec.idx.s();
    if (spec.amplitude == 0.0) {
        nb.degenerate = true;
        return nb;
    }
    const int n = spec.idx.n();
    const double s = spec.idx.s();
    const double c = spec.amplitude;
    const double alpha = spec.idx.n_over_2s();
    const double omega = unit_sphere_area(n);

    const double l2_sq = c * c * omega / (2.0 * s) * beta(alpha, 2.0 - alpha);
    const double hs_sq = c * c * omega / (2.0 * s) * beta(alpha + 1.0, 1.0 - alpha);
    const double sigma = alpha * pi;
    const double mass = omega / n * sigma / std::sin(sigma);

    nb.l2 = std::sqrt(l2_sq);
    nb.hs_semi = std::sqrt(hs_sq);
    nb.hs_full = std::sqrt(l2_sq + hs_sq);
    nb.l1_fourier = c * mass;
    // what >= 0, so the maximum sits at the origin: w(0) = (2 pi)^{-n/2} ||what||_1.
    nb.sup = std::pow(two_pi, -0.5 * n) * nb.l1_fourier;
    return nb;
}

GridFunction gaussian(const GridSpec& g, double a) {
    if (!std::isfinite(a) || a <= 0.0) {
        throw std::domain_error("gaussian requires a > 0");
    }
    return sample_physical(g, [a](std::span<const double> x) {
        double norm_sq = 0.0;
        for (double component : x) {
            norm_sq += component * component;
        }
        return complex(std::exp(-a * norm_sq), 0.0);
    });
}

double default_cutoff(const GridSpec& g) { return 0.75 * g.nyquist(); }

double default_decay(const GridSpec& g) { return 0.05 / (g.nyquist() * g.nyquist()); }

namespace {

double next_uniform(std::mt19937_64& rng) {
    // Top 53 bits mapped to [0, 1); avoids the library-defined distributions
    // so the corpus is identical across standard library implementations.
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

GridFunction random_band_limited(const GridSpec& g, std::uint64_t seed, double cutoff,
                                 double decay) {
    if (!std::isfinite(cutoff) || cutoff <= 0.0 || cutoff >= g.nyquist()) {
        throw std::domain_error("random_band_limited requires 0 < cutoff < pi N / L");
    }
    if (!std::isfinite(decay) || decay <= 0.0) {
        throw std::domain_error("random_band_limited requires decay > 0");
    }

    const int n = g.n();
    const int points = g.points_per_axis();
    std::mt19937_64 rng(seed);
    std::vector<complex> coeffs(g.size(), complex(0.0, 0.0));

    int idx[3];
    const double cutoff_sq = cutoff * cutoff;
    for (std::size_t flat = 0; flat < coeffs.size(); ++flat) {
        std::size_t rest = flat;
        for (int d = n - 1; d >= 0; --d) {
            idx[d] = static_cast<int>(rest % points);
            rest /= points;
        }
        double freq_sq = 0.0;
        std::size_t partner = 0;
        for (int d = 0; d < n; ++d) {
            const double xi = g.frequency(idx[d]);
            freq_sq += xi * xi;
            const int mirrored = (points - idx[d]) % points;
            partner = partner * points + static_cast<std::size_t>(mirrored);
        }
        if (freq_sq > cutoff_sq) {
            continue;
        }
        if (flat == partner) {
            // Self-conjugate lattice point: the coefficient must be real.
            coeffs[flat] = complex(next_uniform(rng) * std::exp(-decay * freq_sq), 0.0);
        } else if (flat < partner) {
            const double magnitude = next_uniform(rng) * std::exp(-decay * freq_sq);
            const double phase = two_pi * next_uniform(rng);
            const complex value(magnitude * std::cos(phase), magnitude * std::sin(phase));
            coeffs[flat] = value;
            coeffs[partner] = std::conj(value);
        }
    }

    return inverse_transform(SpectralField(g, std::move(coeffs)));
}

}  // namespace gnsharp
