#include <doctest.h>

#include <cmath>
#include <vector>

#include "gnsharp/grid_spec.hpp"
#include "gnsharp/quadrature.hpp"
#include "gnsharp/special_functions.hpp"

using namespace gnsharp;

namespace {

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

// Beta closed form the quadrature is checked against:
// I(n,s,p,q) = (1/2s) B((n+2sq)/2s, p - (n+2sq)/2s).
double beta_form(const RadialIntegralSpec& spec) {
    const double s = spec.index().s();
    const double a = (spec.index().n() + 2.0 * s * spec.weight_q()) / (2.0 * s);
    return beta(a, spec.power_p() - a) / (2.0 * s);
}

// Brute-force oracle: composite midpoint on [0,1] plus the 1/r-compactified
// tail, 10^6 panels each.  Low order but entirely independent of both the
// adaptive integrator and the Beta identity.
double brute_force(int n, double s, int p, int q) {
    const int panels = 1000000;
    double acc = 0.0;
    const double h = 1.0 / panels;
    for (int i = 0; i < panels; ++i) {
        const double r = (i + 0.5) * h;
        acc += std::pow(r, n - 1.0 + 2.0 * s * q) * std::pow(1.0 + std::pow(r, 2.0 * s), -p) * h;
    }
    const double delta = 2.0 * s * (p - q) - n;
    for (int i = 0; i < panels; ++i) {
        const double t = (i + 0.5) * h;
        acc += std::pow(t, delta - 1.0) * std::pow(1.0 + std::pow(t, 2.0 * s), -p) * h;
    }
    return acc;
}

std::vector<SobolevIndex> sweep_indices() {
    std::vector<SobolevIndex> list;
    for (int n = 1; n <= 3; ++n) {
        for (double s : {0.5 * n + 0.1, 1.0, 2.0, 3.0, 5.0, 10.0}) {
            if (s > 0.5 * n) {
                list.emplace_back(n, s);
            }
        }
    }
    return list;
}

}  // namespace

TEST_SUITE("quadrature") {

TEST_CASE("RadialIntegralSpec rejects non-integrable combinations") {
    CHECK_THROWS_AS(RadialIntegralSpec(SobolevIndex(2, 1.2), 1, 1), std::domain_error);
    CHECK_THROWS_AS(RadialIntegralSpec(SobolevIndex(3, 2.0), 1, 1), std::domain_error);
    // delta = 2s - n barely below the 1e-6 convergence margin
    CHECK_THROWS_AS(RadialIntegralSpec(SobolevIndex(1, 0.5 + 4e-7), 1, 0), std::domain_error);
    CHECK_THROWS_AS(RadialIntegralSpec(SobolevIndex(1, 1.0), 0, 0), std::domain_error);
    CHECK_THROWS_AS(RadialIntegralSpec(SobolevIndex(1, 1.0), 1, -1), std::domain_error);
    CHECK_NOTHROW(RadialIntegralSpec(SobolevIndex(1, 0.5 + 1e-3), 1, 0));
}

TEST_CASE("arctangent anchor: I(1,1,1,0) = pi/2") {
    CHECK(rel_err(radial_integral(RadialIntegralSpec(SobolevIndex(1, 1.0), 1, 0)),
                  1.5707963267948966) < 1e-10);
}

TEST_CASE("I(1,2,1,0) against the brute-force oracle") {
    const double value = radial_integral(RadialIntegralSpec(SobolevIndex(1, 2.0), 1, 0));
    // (1/4) B(1/4, 3/4) = pi / (4 sin(pi/4)), frozen from the oracle below.
    CHECK(rel_err(value, 1.1107207345395916) < 1e-10);
    CHECK(rel_err(value, brute_force(1, 2.0, 1, 0)) < 1e-8);
}

TEST_CASE("I(2,2,2,1) = pi/8") {
    const double value = radial_integral(RadialIntegralSpec(SobolevIndex(2, 2.0), 2, 1));
    CHECK(rel_err(value, 0.39269908169872415) < 1e-10);
    CHECK(rel_err(value, brute_force(2, 2.0, 2, 1)) < 1e-8);
}

TEST_CASE("accuracy holds down to the decay-margin construction limit") {
    // The integral grows like 1/delta as the margin shrinks; the relative
    // agreement with the Beta form must survive all the way to the 1e-6 gate.
    for (double delta : {2e-6, 1e-4, 1e-2}) {
        const RadialIntegralSpec spec(SobolevIndex(1, 0.5 * (1.0 + delta)), 1, 0);
        CHECK(rel_err(radial_integral(spec), beta_form(spec)) < 1e-9);
    }
}

TEST_CASE("Beta consistency across the parameter sweep") {
    for (const SobolevIndex& idx : sweep_indices()) {
        for (int p = 1; p <= 3; ++p) {
            for (int q = 0; q <= 1; ++q) {
                if (2.0 * idx.s() * (p - q) - idx.n() <= 1e-6) {
                    continue;
                }
                const RadialIntegralSpec spec(idx, p, q);
                CHECK(rel_err(radial_integral(spec), beta_form(spec)) < 1e-9);
            }
        }
    }
}

TEST_CASE("lorentzian mass anchors") {
    const LorentzianMass m11 = lorentzian_mass(SobolevIndex(1, 1.0));
    CHECK(rel_err(m11.quadrature, pi) < 1e-10);
    CHECK(rel_err(m11.closed_form, pi) < 1e-14);

    const LorentzianMass m22 = lorentzian_mass(SobolevIndex(2, 2.0));
    CHECK(rel_err(m22.quadrature, 4.9348022005446793) < 1e-10);
    CHECK(rel_err(m22.closed_form, 4.9348022005446793) < 1e-14);

    const LorentzianMass m32 = lorentzian_mass(SobolevIndex(3, 2.0));
    CHECK(rel_err(m32.closed_form, 13.957728399277759) < 1e-14);
    CHECK(rel_err(m32.quadrature, m32.closed_form) < 1e-10);
}

TEST_CASE("quadrature agrees with the closed form across the sweep") {
    for (const SobolevIndex& idx : sweep_indices()) {
        const LorentzianMass m = lorentzian_mass(idx);
        CHECK(rel_err(m.quadrature, m.closed_form) < 1e-8);
    }
}

TEST_CASE("lorentzian mass decreases in s") {
    for (int n = 1; n <= 3; ++n) {
        double previous = 0.0;
        bool first = true;
        for (double s : {0.5 * n + 0.1, 0.5 * n + 0.5, 2.0 + 0.5 * n, 5.0, 10.0, 20.0}) {
            const double mass = lorentzian_mass(SobolevIndex(n, s)).quadrature;
            if (!first) {
                CHECK(mass < previous);
            }
            previous = mass;
            first = false;
        }
    }
}

TEST_CASE("non-convergence raises QuadratureError with the last two estimates") {
    // x^{-0.9999} is integrable but too singular for bisection within 30 levels.
    const auto f = [](double x) { return std::pow(x, -0.9999); };
    try {
        detail::adaptive_gauss_legendre(f, 0.0, 1.0, 1e-12, 1e-10);
        FAIL("expected QuadratureError");
    } catch (const QuadratureError& e) {
        CHECK(std::isfinite(e.coarse_estimate()));
        CHECK(std::isfinite(e.fine_estimate()));
        CHECK(e.fine_estimate() != e.coarse_estimate());
    }
}

}  // TEST_SUITE
