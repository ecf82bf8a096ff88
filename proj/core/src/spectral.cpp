#include "gnsharp/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gnsharp {

namespace {

bool is_power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

void validate_samples(const GridSpec& spec, const std::vector<complex>& values,
                      const char* what) {
    if (values.size() != spec.size()) {
        throw std::invalid_argument(std::string(what) + ": expected " +
                                    std::to_string(spec.size()) + " values, got " +
                                    std::to_string(values.size()));
    }
    for (const complex& v : values) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw std::invalid_argument(std::string(what) + ": non-finite value");
        }
    }
}

// Decodes the per-axis storage indices of a flat row-major index.
void decode(std::size_t flat, int n, int points, int out[3]) {
    for (int d = n - 1; d >= 0; --d) {
        out[d] = static_cast<int>(flat % points);
        flat /= points;
    }
}

// ---------------------------------------------------------------------------
// Radix-2 FFT (power-of-two sizes only, which GridSpec guarantees).

void bit_reverse(complex* a, int n) {
    for (int i = 1, j = 0; i < n; ++i) {
        int bit = n >> 1;
        for (; j & bit; bit >>= 1) {
            j ^= bit;
        }
        j ^= bit;
        if (i < j) {
            std::swap(a[i], a[j]);
        }
    }
}

// roots[j] = exp(sign * 2 pi i j / n) for j < n/2.
std::vector<complex> root_table(int n, int sign) {
    std::vector<complex> roots(n / 2);
    for (int j = 0; j < n / 2; ++j) {
        const double angle = sign * two_pi * j / n;
        roots[j] = complex(std::cos(angle), std::sin(angle));
    }
    return roots;
}

void fft_line(complex* a, int n, const std::vector<complex>& roots) {
    bit_reverse(a, n);
    for (int len = 2; len <= n; len <<= 1) {
        const int stride = n / len;
        for (int block = 0; block < n; block += len) {
            for (int j = 0; j < len / 2; ++j) {
                const complex w = roots[j * stride];
                const complex even = a[block + j];
                const complex odd = a[block + j + len / 2] * w;
                a[block + j] = even + odd;
                a[block + j + len / 2] = even - odd;
            }
        }
    }
}

// Transforms every axis of the row-major array in place.
void fft_nd(std::vector<complex>& data, const GridSpec& spec, int sign) {
    const int n = spec.n();
    const int points = spec.points_per_axis();
    const auto roots = root_table(points, sign);
    std::vector<complex> line(points);

    std::size_t stride = 1;
    for (int axis = n - 1; axis >= 0; --axis) {
        const std::size_t block = stride * points;
        for (std::size_t base = 0; base < data.size(); base += block) {
            for (std::size_t offset = 0; offset < stride; ++offset) {
                complex* origin = data.data() + base + offset;
                for (int j = 0; j < points; ++j) {
                    line[j] = origin[j * stride];
                }
                fft_line(line.data(), points, roots);
                for (int j = 0; j < points; ++j) {
                    origin[j * stride] = line[j];
                }
            }
        }
        stride *= points;
    }
}

// Parity of the summed storage indices; e^{i pi k} per axis reduces to this
// because N is even.
bool odd_parity(std::size_t flat, int n, int points) {
    int idx[3];
    decode(flat, n, points, idx);
    int sum = 0;
    for (int d = 0; d < n; ++d) {
        sum += idx[d];
    }
    return (sum & 1) != 0;
}

}  // namespace

GridSpec::GridSpec(int dimension, int points_per_axis, double box_length)
    : n_(dimension), points_(points_per_axis), length_(box_length) {
    if (n_ < 1 || n_ > 3) {
        throw std::domain_error("GridSpec requires n in {1,2,3}, got " + std::to_string(n_));
    }
    if (!is_power_of_two(points_) || points_ < 8) {
        throw std::domain_error("GridSpec requires a power-of-two point count >= 8, got " +
                                std::to_string(points_));
    }
    if (!std::isfinite(length_) || length_ <= 0.0) {
        throw std::domain_error("GridSpec requires a positive box length");
    }
}

std::size_t GridSpec::size() const {
    std::size_t total = 1;
    for (int d = 0; d < n_; ++d) {
        total *= static_cast<std::size_t>(points_);
    }
    return total;
}

GridFunction::GridFunction(GridSpec spec, std::vector<complex> samples)
    : spec_(spec), samples_(std::move(samples)) {
    validate_samples(spec_, samples_, "GridFunction");
}

SpectralField::SpectralField(GridSpec spec, std::vector<complex> coefficients)
    : spec_(spec), coefficients_(std::move(coefficients)) {
    validate_samples(spec_, coefficients_, "SpectralField");
}

double SpectralField::freq_norm_sq(std::size_t flat) const {
    int idx[3];
    decode(flat, spec_.n(), spec_.points_per_axis(), idx);
    double acc = 0.0;
    for (int d = 0; d < spec_.n(); ++d) {
        const double xi = spec_.frequency(idx[d]);
        acc += xi * xi;
    }
    return acc;
}

namespace detail {

double pairwise_sum(std::span<double> terms) {
    if (terms.size() <= 16) {
        double acc = 0.0;
        for (double t : terms) {
            acc += t;
        }
        return acc;
    }
    const std::size_t half = terms.size() / 2;
    return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

}  // namespace detail

SpectralField forward_transform(const GridFunction& u) {
    const GridSpec& g = u.spec();
    std::vector<complex> data(u.samples().begin(), u.samples().end());
    fft_nd(data, g, -1);
    const double scale = std::pow(two_pi, -0.5 * g.n()) * std::pow(g.spacing(), g.n());
    for (std::size_t i = 0; i < data.size(); ++i) {
        data[i] *= odd_parity(i, g.n(), g.points_per_axis()) ? -scale : scale;
    }
    return SpectralField(g, std::move(data));
}

GridFunction inverse_transform(const SpectralField& f) {
    const GridSpec& g = f.spec();
    std::vector<complex> data(f.coefficients().begin(), f.coefficients().end());
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (odd_parity(i, g.n(), g.points_per_axis())) {
            data[i] = -data[i];
        }
    }
    fft_nd(data, g, +1);
    const double scale = std::pow(two_pi, -0.5 * g.n()) * std::pow(g.freq_spacing(), g.n());
    for (complex& v : data) {
        v *= scale;
    }
    return GridFunction(g, std::move(data));
}

NormBundle norms(const GridFunction& u, const SpectralField& uhat, double s) {
    if (!(s > 0.0) || !std::isfinite(s)) {
        throw std::domain_error("norms requires s > 0");
    }
    if (uhat.spec() != u.spec()) {
        throw std::invalid_argument("norms: transform belongs to a different grid");
    }
    const GridSpec& g = u.spec();
    const std::size_t total = g.size();

    NormBundle nb;
    nb.s = s;

    std::vector<double> terms(total);

    for (std::size_t i = 0; i < total; ++i) {
        terms[i] = std::norm(u.samples()[i]);
    }
    const double phys_weight = std::pow(g.spacing(), g.n());
    nb.l2 = std::sqrt(phys_weight * detail::pairwise_sum(terms));

    double sup = 0.0;
    for (const complex& v : u.samples()) {
        sup = std::max(sup, std::abs(v));
    }
    nb.sup = sup;

    const double freq_weight = std::pow(g.freq_spacing(), g.n());

    for (std::size_t i = 0; i < total; ++i) {
        terms[i] = std::abs(uhat.coefficients()[i]);
    }
    nb.l1_fourier = freq_weight * detail::pairwise_sum(terms);

    std::vector<double> full_terms(total);
    for (std::size_t i = 0; i < total; ++i) {
        const double mag_sq = std::norm(uhat.coefficients()[i]);
        const double weight = std::pow(uhat.freq_norm_sq(i), s);
        terms[i] = weight * mag_sq;
        full_terms[i] = (1.0 + weight) * mag_sq;
    }
    nb.hs_semi = std::sqrt(freq_weight * detail::pairwise_sum(terms));
    nb.hs_full = std::sqrt(freq_weight * detail::pairwise_sum(full_terms));

    nb.degenerate = nb.sup == 0.0 && nb.l2 == 0.0;
    return nb;
}

NormBundle norms(const GridFunction& u, double s) {
    return norms(u, forward_transform(u), s);
}

InequalityReport l1_bound_check(const GridFunction& u, const SpectralField& uhat,
                                double tolerance) {
    if (uhat.spec() != u.spec()) {
        throw std::invalid_argument("l1_bound_check: transform belongs to a different grid");
    }
    const GridSpec& g = u.spec();
    double sup = 0.0;
    for (const complex& v : u.samples()) {
        sup = std::max(sup, std::abs(v));
    }
    std::vector<double> terms(g.size());
    for (std::size_t i = 0; i < terms.size(); ++i) {
        terms[i] = std::abs(uhat.coefficients()[i]);
    }
    const double l1 = std::pow(g.freq_spacing(), g.n()) * detail::pairwise_sum(terms);
    const double constant = std::pow(two_pi, -0.5 * g.n());

    InequalityReport report;
    report.id = InequalityId::l1_bound;
    report.lhs = sup;
    report.rhs = constant * l1;
    report.constant_used = constant;
    report.tolerance = tolerance;
    report.grid = g;
    report.n = g.n();
    report.s = 0.0;  // not involved in this bound
    if (report.rhs == 0.0) {
        report.degenerate = true;
        report.ratio = 0.0;
        report.passed = true;
    } else {
        report.ratio = report.lhs / report.rhs;
        report.passed = report.ratio <= 1.0 + tolerance;
    }
    return report;
}

InequalityReport l1_bound_check(const GridFunction& u, double tolerance) {
    return l1_bound_check(u, forward_transform(u), tolerance);
}

GridFunction dilate(const GridFunction& u, double lambda) {
    if (!std::isfinite(lambda) || lambda <= 0.0) {
        throw std::domain_error("dilate requires lambda > 0");
    }
    // u(lambda x) sampled on the box rescaled to L/lambda reuses the sample
    // array unchanged: the node x_j of the new box satisfies
    // lambda x_j = (old node j).  Both the physical weights h^n and the
    // frequency lattice rescale with the box, so the dilation laws for the
    // L^2, Hdot^s and sup norms hold exactly, for arbitrary real lambda.
    const GridSpec& g = u.spec();
    const GridSpec rescaled(g.n(), g.points_per_axis(), g.box_length() / lambda);
    return GridFunction(rescaled, std::vector<complex>(u.samples().begin(), u.samples().end()));
}

GridFunction sample_physical(const GridSpec& g,
                             const std::function<complex(std::span<const double>)>& f) {
    std::vector<complex> samples(g.size());
    int idx[3];
    double coords[3];
    for (std::size_t i = 0; i < samples.size(); ++i) {
        decode(i, g.n(), g.points_per_axis(), idx);
        for (int d = 0; d < g.n(); ++d) {
            coords[d] = g.coordinate(idx[d]);
        }
        samples[i] = f(std::span<const double>(coords, static_cast<std::size_t>(g.n())));
    }
    return GridFunction(g, std::move(samples));
}

SpectralField sample_spectral(const GridSpec& g,
                              const std::function<complex(std::span<const double>)>& f) {
    std::vector<complex> coeffs(g.size());
    int idx[3];
    double freqs[3];
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        decode(i, g.n(), g.points_per_axis(), idx);
        for (int d = 0; d < g.n(); ++d) {
            freqs[d] = g.frequency(idx[d]);
        }
        coeffs[i] = f(std::span<const double>(freqs, static_cast<std::size_t>(g.n())));
    }
    return SpectralField(g, std::move(coeffs));
}

const char* to_string(InequalityId id) {
    switch (id) {
        case InequalityId::l1_bound: return "l1_bound";
        case InequalityId::embedding: return "embedding";
        case InequalityId::interpolation: return "interpolation";
        case InequalityId::young: return "young";
    }
    return "unknown";
}

}  // namespace gnsharp
