#include "gnsharp/constants.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "gnsharp/grid_spec.hpp"
#include "gnsharp/special_functions.hpp"

namespace gnsharp {

SobolevIndex::SobolevIndex(int dimension, double order) : n_(dimension), s_(order) {
    if (n_ < 1) {
        throw std::domain_error("SobolevIndex requires n >= 1, got " + std::to_string(n_));
    }
    if (!std::isfinite(s_) || s_ <= 0.5 * n_) {
        throw std::domain_error("SobolevIndex requires s > n/2, got s = " + std::to_string(s_) +
                                " with n = " + std::to_string(n_));
    }
}

namespace {

constexpr long double pi_l = 3.14159265358979323846264338327950288L;

// Logs of the three embedding factors:
//   {4 pi}^{-n/4} {(n/2) Gamma(n/2)}^{-1/2} {sin(sigma)/sigma}^{-1/2}.
long double log_embedding(const SobolevIndex& idx) {
    const long double n = idx.n();
    const long double s = idx.s();
    const long double sigma = n / (2.0L * s) * pi_l;
    const long double log_sinc = std::log(std::sin(sigma)) - std::log(sigma);
    return -n / 4.0L * std::log(4.0L * pi_l)
           - 0.5L * (std::log(n / 2.0L) + std::lgamma(n / 2.0L))
           - 0.5L * log_sinc;
}

// Logs of the two Young factors:
//   {n/(2s-n)}^{-n/(4s)} {2s/(2s-n)}^{1/2}.
long double log_young(const SobolevIndex& idx) {
    const long double n = idx.n();
    const long double s = idx.s();
    const long double gap = 2.0L * s - n;
    return -n / (4.0L * s) * (std::log(n) - std::log(gap))
           + 0.5L * (std::log(2.0L * s) - std::log(gap));
}

}  // namespace

double gn_constant(const SobolevIndex& idx) {
    return static_cast<double>(std::exp(log_embedding(idx) + log_young(idx)));
}

double embedding_constant(const SobolevIndex& idx) {
    return static_cast<double>(std::exp(log_embedding(idx)));
}

double young_factor(const SobolevIndex& idx) {
    return static_cast<double>(std::exp(log_young(idx)));
}

OptimalLambda optimal_lambda(const SobolevIndex& idx, double a, double b) {
    if (!std::isfinite(a) || a < 0.0) {
        throw std::domain_error("optimal_lambda requires a >= 0");
    }
    if (!std::isfinite(b) || b <= 0.0) {
        throw std::domain_error("optimal_lambda requires b > 0");
    }
    if (a == 0.0) {
        return {0.0, true};
    }
    const double n = idx.n();
    const double s = idx.s();
    const double t = std::log(n) + 2.0 * std::log(a) - std::log(idx.gap()) - 2.0 * std::log(b);
    return {std::exp(t / (2.0 * s)), false};
}

}  // namespace gnsharp
