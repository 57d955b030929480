#include <doctest.h>

#include <cmath>
#include <random>

#include "deowave/primitives.hpp"
#include "deowave/quadrature.hpp"

using namespace deowave;

TEST_CASE("sa: values and removable singularity") {
    CHECK(sa(0.0) == 1.0);
    CHECK(std::abs(sa(pi)) < 1e-15);
    CHECK(sa(pi / 2.0) == doctest::Approx(2.0 / pi).epsilon(1e-15));
    // continuity across 0
    CHECK(std::abs(sa(1e-7) - sa(0.0)) < 1e-13);
    CHECK(std::abs(sa(-1e-7) - sa(1e-7)) == 0.0);
}

TEST_CASE("sinc: values and integer zeros") {
    CHECK(sinc(0.0) == 1.0);
    CHECK(std::abs(sinc(3.0)) < 1e-15);
    CHECK(sinc(0.5) == doctest::Approx(2.0 / pi).epsilon(1e-15));
    for (int n = 1; n <= 20; ++n)
        CHECK(std::abs(sinc(static_cast<double>(n))) < 1e-14);
}

TEST_CASE("special_H: scaling, zeros, unit integral") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> ts(-20.0, 20.0);
    for (int i = 0; i < 200; ++i) {
        const double t = ts(rng);
        CHECK(special_H(BandParam(1.0), t) == doctest::Approx(sinc(t)).epsilon(1e-15));
    }
    CHECK(special_H(BandParam(0.4), 0.0) == doctest::Approx(0.4));
    CHECK(std::abs(special_H(BandParam(0.7), 1.0 / 0.7)) < 1e-14);
    CHECK(special_H(BandParam(0.0), 3.21) == 0.0);

    // integral over [-T, T] approaches 1 (slow 1/t tail)
    const double v = 0.8;
    const double T = 256.0;
    const double got = integrate([&](double t) { return special_H(BandParam(v), t); },
                                 -T, T, 4096);
    CHECK(got == doctest::Approx(1.0).epsilon(1e-2));
}

TEST_CASE("special_M: trivial value, scaling-term identity and symmetry") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> as(0.05, 0.33);
    std::uniform_real_distribution<double> ts(-16.0, 16.0);
    for (int i = 0; i < 500; ++i) {
        const double a = as(rng);
        const double t = ts(rng);
        const MPair p(1.0 + a, 1.0 - a);
        // literal transcription of the scaling-function roll-off term
        const double lit = (4.0 * a / pi) / (1.0 - (4.0 * a * t) * (4.0 * a * t)) *
                           (std::cos(pi * (1.0 + a) * t) +
                            4.0 * a * t * std::sin(pi * (1.0 - a) * t));
        if (std::abs(1.0 - (4.0 * a * t) * (4.0 * a * t)) > 1e-3) {
            CHECK(special_M(p, t) == doctest::Approx(lit).epsilon(1e-12));
        }
        // even in t
        CHECK(special_M(p, t) == doctest::Approx(special_M(p, -t)).epsilon(1e-12));
    }
    const MPair q(2.1, 1.7);
    CHECK(special_M(q, 0.0) == doctest::Approx(2.0 * 0.4 / pi).epsilon(1e-14));
    CHECK_THROWS_AS(MPair(1.3, 1.3), std::invalid_argument);
}

TEST_CASE("special_M / special_Mbar: finite limit at the denominator zero") {
    for (const auto& [v1, v2] : {std::pair{1.25, 0.75}, {0.75, 1.25}, {2.5, 1.5}}) {
        const MPair p(v1, v2);
        const double ts = 1.0 / (2.0 * std::abs(v1 - v2));
        for (const double sgn : {1.0, -1.0}) {
            const double at = sgn * ts;
            const double center_m = special_M(p, at);
            const double center_mb = special_Mbar(p, at);
            CHECK(std::isfinite(center_m));
            CHECK(std::isfinite(center_mb));
            for (const double eps : {1e-6, 1e-7, 1e-8, 1e-9}) {
                CHECK(std::abs(special_M(p, at + eps) - center_m) < 100.0 * eps + 1e-13);
                CHECK(std::abs(special_M(p, at - eps) - center_m) < 100.0 * eps + 1e-13);
                CHECK(std::abs(special_Mbar(p, at + eps) - center_mb) < 100.0 * eps + 1e-13);
            }
        }
    }
}

TEST_CASE("special_Hbar: zeros, pole, oddness") {
    CHECK(std::abs(special_Hbar(BandParam(0.6), 1.0 / 1.2)) < 1e-14);
    CHECK(special_Hbar(BandParam(1.0), 1.0) == doctest::Approx(-1.0 / pi).epsilon(1e-14));
    CHECK_THROWS_AS(special_Hbar(BandParam(1.0), 0.0), std::domain_error);

    std::mt19937 rng(3);
    std::uniform_real_distribution<double> ts(0.01, 10.0);
    for (int i = 0; i < 200; ++i) {
        const double t = ts(rng);
        CHECK(special_Hbar(BandParam(1.3), -t) ==
              doctest::Approx(-special_Hbar(BandParam(1.3), t)).epsilon(1e-13));
    }
    // residue of the t->0 pole is 1/pi for any v
    for (const double v : {0.5, 1.0, 1.9}) {
        const double t = 1e-9;
        CHECK(t * special_Hbar(BandParam(v), t) == doctest::Approx(1.0 / pi).epsilon(1e-9));
    }
}

TEST_CASE("special_Hbar_diff: pole cancellation") {
    // matches the separate evaluation away from 0...
    for (const double t : {0.5, -1.3, 2.7}) {
        const double sep = special_Hbar(BandParam(1.2), t) - special_Hbar(BandParam(1.6), t);
        CHECK(special_Hbar_diff(1.2, 1.6, t) == doctest::Approx(sep).epsilon(1e-12));
    }
    // ...and stays finite and linear through it
    const double slope = (special_Hbar_diff(1.2, 1.6, 1e-6) -
                          special_Hbar_diff(1.2, 1.6, -1e-6)) / 2e-6;
    CHECK(std::abs(special_Hbar_diff(1.2, 1.6, 0.0)) == 0.0);
    CHECK(std::isfinite(slope));
    CHECK(std::abs(special_Hbar_diff(1.2, 1.6, 1e-8) - slope * 1e-8) < 1e-12);
}

TEST_CASE("special_Mbar: odd, zero at origin") {
    const MPair p(1.1, 0.7);
    CHECK(special_Mbar(p, 0.0) == 0.0);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> ts(-12.0, 12.0);
    for (int i = 0; i < 300; ++i) {
        const double t = ts(rng);
        CHECK(special_Mbar(p, -t) == doctest::Approx(-special_Mbar(p, t)).epsilon(1e-12));
    }
}
