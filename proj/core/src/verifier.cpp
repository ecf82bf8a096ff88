#include "gnsharp/verifier.hpp"

#include <cmath>
#include <stdexcept>

namespace gnsharp {

namespace {

InequalityReport make_degenerate(InequalityId id, const std::optional<GridSpec>& grid,
                                 const SobolevIndex& idx, double tolerance) {
    InequalityReport report;
    report.id = id;
    report.tolerance = tolerance;
    report.degenerate = true;
    report.passed = true;
    report.grid = grid;
    report.n = idx.n();
    report.s = idx.s();
    return report;
}

InequalityReport interpolation_report(const NormBundle& nb, const std::optional<GridSpec>& grid,
                                      const SobolevIndex& idx, double tolerance) {
    // A zero right side (the zero function, or a constant one whose seminorm
    // vanishes) cannot produce a finite ratio; flag it instead of throwing.
    if (nb.degenerate || nb.hs_semi == 0.0 || nb.l2 == 0.0) {
        return make_degenerate(InequalityId::interpolation, grid, idx, tolerance);
    }
    const double alpha = idx.n_over_2s();
    const double constant = gn_constant(idx);
    InequalityReport report;
    report.id = InequalityId::interpolation;
    report.lhs = nb.sup;
    report.rhs = constant * std::pow(nb.l2, 1.0 - alpha) * std::pow(nb.hs_semi, alpha);
    report.ratio = report.lhs / report.rhs;
    report.constant_used = constant;
    report.tolerance = tolerance;
    report.passed = report.ratio <= 1.0 + tolerance;
    report.grid = grid;
    report.n = idx.n();
    report.s = idx.s();
    return report;
}

InequalityReport embedding_report(const NormBundle& nb, const std::optional<GridSpec>& grid,
                                  const SobolevIndex& idx, double tolerance) {
    if (nb.degenerate) {
        return make_degenerate(InequalityId::embedding, grid, idx, tolerance);
    }
    const double constant = embedding_constant(idx);
    InequalityReport report;
    report.id = InequalityId::embedding;
    report.lhs = nb.sup;
    report.rhs = constant * nb.hs_full;
    report.ratio = report.lhs / report.rhs;
    report.constant_used = constant;
    report.tolerance = tolerance;
    report.passed = report.ratio <= 1.0 + tolerance;
    report.grid = grid;
    report.n = idx.n();
    report.s = idx.s();
    return report;
}

void check_dimension(const GridFunction& u, const SobolevIndex& idx) {
    if (u.spec().n() != idx.n()) {
        throw std::domain_error("grid function dimension does not match the Sobolev index");
    }
}

}  // namespace

InequalityReport check_interpolation(const GridFunction& u, const SobolevIndex& idx,
                                     double tolerance) {
    check_dimension(u, idx);
    return interpolation_report(norms(u, idx.s()), u.spec(), idx, tolerance);
}

InequalityReport check_interpolation(const NormBundle& nb, const GridSpec& g,
                                     const SobolevIndex& idx, double tolerance) {
    return interpolation_report(nb, g, idx, tolerance);
}

InequalityReport check_embedding(const GridFunction& u, const SobolevIndex& idx,
                                 double tolerance) {
    check_dimension(u, idx);
    return embedding_report(norms(u, idx.s()), u.spec(), idx, tolerance);
}

InequalityReport check_embedding(const NormBundle& nb, const GridSpec& g,
                                 const SobolevIndex& idx, double tolerance) {
    return embedding_report(nb, g, idx, tolerance);
}

InequalityReport check_young(double a, double b, const SobolevIndex& idx, double tolerance) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
        throw std::domain_error("check_young requires a > 0 and b > 0");
    }
    const double alpha = idx.n_over_2s();
    const double constant = young_factor(idx);
    InequalityReport report;
    report.id = InequalityId::young;
    report.lhs = constant * std::pow(a, 1.0 - alpha) * std::pow(b, alpha);
    report.rhs = std::sqrt(a * a + b * b);
    report.ratio = report.lhs / report.rhs;
    report.constant_used = constant;
    report.tolerance = tolerance;
    report.passed = report.ratio <= 1.0 + tolerance;
    report.n = idx.n();
    report.s = idx.s();
    return report;
}

ScalingSweepResult lambda_sweep(double a, double b, const SobolevIndex& idx, int points) {
    if (points < 16) {
        throw std::domain_error("lambda_sweep requires points >= 16");
    }
    ScalingSweepResult result;
    if (a == 0.0 && b == 0.0) {
        result.degenerate = true;
        return result;
    }
    const OptimalLambda star = optimal_lambda(idx, a, b);
    if (star.degenerate) {
        result.degenerate = true;
        return result;
    }

    const double n = idx.n();
    const double exponent = idx.gap();  // 2s - n
    const auto objective = [&](double lambda) {
        return std::pow(lambda, -n) * a * a + std::pow(lambda, exponent) * b * b;
    };

    result.lambda_star = star.value;
    const double log_lo = std::log(star.value / 10.0);
    const double log_hi = std::log(star.value * 10.0);
    result.lambdas.resize(points);
    result.objective.resize(points);
    double best = 0.0;
    double best_value = 0.0;
    for (int i = 0; i < points; ++i) {
        const double t = log_lo + (log_hi - log_lo) * i / (points - 1);
        const double lambda = std::exp(t);
        const double value = objective(lambda);
        result.lambdas[i] = lambda;
        result.objective[i] = value;
        if (i == 0 || value < best_value) {
            best = lambda;
            best_value = value;
        }
    }
    result.argmin_sampled = best;

    const double alpha = idx.n_over_2s();
    const double yf = young_factor(idx);
    result.min_value_closed_form =
        yf * yf * std::pow(a, 2.0 * (1.0 - alpha)) * std::pow(b, n / idx.s());
    return result;
}

ScalingSweepResult lambda_sweep(const GridFunction& u, const SobolevIndex& idx, int points) {
    check_dimension(u, idx);
    const NormBundle nb = norms(u, idx.s());
    if (nb.degenerate) {
        ScalingSweepResult result;
        result.degenerate = true;
        return result;
    }
    return lambda_sweep(nb.l2, nb.hs_semi, idx, points);
}

GridSpec default_grid(int n, double box_length) {
    return GridSpec(n, n == 3 ? 64 : 256, box_length);
}

double sharpness_ratio(const SobolevIndex& idx, SharpnessMethod method,
                       std::optional<GridSpec> grid) {
    if (method == SharpnessMethod::exact) {
        const NormBundle nb = extremizer_norms_exact(ExtremizerSpec(idx, 1.0));
        const double alpha = idx.n_over_2s();
        return nb.sup /
               (gn_constant(idx) * std::pow(nb.l2, 1.0 - alpha) * std::pow(nb.hs_semi, alpha));
    }
    const GridSpec g = grid.value_or(default_grid(idx.n()));
    const SpectralField field = bessel_potential_spectrum(ExtremizerSpec(idx, 1.0), g);
    const GridFunction w = inverse_transform(field);
    return check_interpolation(norms(w, field, idx.s()), g, idx).ratio;
}

}  // namespace gnsharp
