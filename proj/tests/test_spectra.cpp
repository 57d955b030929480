#include <doctest.h>

#include <cmath>
#include <random>

#include "deowave/quadrature.hpp"
#include "deowave/spectra.hpp"

using namespace deowave;

TEST_CASE("RollOff validation and capability flag") {
    CHECK_THROWS_AS(RollOff(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(RollOff(1.0), std::invalid_argument);
    CHECK(RollOff(0.0).is_shannon_limit());
    CHECK(RollOff(1.0 / 3.0).orthogonal_mra());
    CHECK_FALSE(RollOff(0.34).orthogonal_mra());
    CHECK_THROWS_AS(RollOff(0.4).require_orthogonal(), std::invalid_argument);
}

TEST_CASE("raised_cosine: branch values") {
    const RollOff r(0.5);
    CHECK(raised_cosine(0.0, r) == doctest::Approx(1.0 / (2.0 * pi)).epsilon(1e-15));
    for (const double a : {0.1, 0.25, 0.4}) {
        const RollOff rr(a);
        CHECK(raised_cosine(pi, rr) == doctest::Approx(1.0 / (4.0 * pi)).epsilon(1e-14));
        CHECK(raised_cosine((1.0 + a) * pi, rr) == 0.0);
        CHECK(raised_cosine((1.0 + a) * pi + 0.7, rr) == 0.0);
        CHECK(raised_cosine(-1.3, rr) == raised_cosine(1.3, rr));
    }
}

TEST_CASE("sqrt_raised_cosine: branch values and exact square identity") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> ws(-5.0 * pi, 5.0 * pi);
    for (const double a : {1.0 / 15.0, 0.25, 0.5, 0.9}) {
        const RollOff r(a);
        CHECK(sqrt_raised_cosine(0.0, r) == doctest::Approx(1.0 / sqrt_two_pi).epsilon(1e-15));
        CHECK(sqrt_raised_cosine((1.0 + a) * pi, r) == 0.0);
        CHECK(sqrt_raised_cosine(pi, r) ==
              doctest::Approx(1.0 / (2.0 * std::sqrt(pi))).epsilon(1e-14));
        for (int i = 0; i < 500; ++i) {
            const double w = ws(rng);
            const double phi = sqrt_raised_cosine(w, r);
            CHECK(raised_cosine(w, r) == doctest::Approx(phi * phi).epsilon(1e-13));
        }
    }
}

TEST_CASE("normalization: the raised cosine integrates to one") {
    for (const double a : {1.0 / 15.0, 0.25, 0.6}) {
        const RollOff r(a);
        const double total = integrate([&](double w) { return raised_cosine(w, r); },
                                       -(1.0 + a) * pi, (1.0 + a) * pi, 64);
        CHECK(std::abs(total - 1.0) < 1e-10);
    }
}

TEST_CASE("nyquist_sum: partition of unity for P, not for sqrt(P)") {
    const RollOff r(0.25);
    auto P = [&](double w) { return raised_cosine(w, r); };
    auto Phi = [&](double w) { return sqrt_raised_cosine(w, r); };
    double worst = 0.0;
    for (int i = 0; i <= 1000; ++i) {
        const double w = -pi + 2.0 * pi * i / 1000.0;
        worst = std::max(worst, std::abs(nyquist_sum(P, w, 2) - 1.0 / (2.0 * pi)));
    }
    CHECK(worst < 1e-14);
    // on the roll-off, cos != cos^2, so the plain sum of sqrt(P) misses 1/2pi
    const double w_roll = pi;
    CHECK(std::abs(nyquist_sum(Phi, w_roll, 2) - 1.0 / (2.0 * pi)) > 1e-3);
    CHECK(nyquist_sum([](double) { return 0.0; }, 0.3, 2) == 0.0);
}

TEST_CASE("meyer_sum: orthogonality certificate and its failure for P") {
    const RollOff r(0.25);
    auto Phi = [&](double w) { return sqrt_raised_cosine(w, r); };
    double worst = 0.0;
    for (int i = 0; i <= 10000; ++i) {
        const double w = -pi + 2.0 * pi * i / 10000.0;
        worst = std::max(worst, std::abs(meyer_sum(Phi, w, 2) - 1.0 / (2.0 * pi)));
    }
    CHECK(worst < 1e-13);

    // using P itself as Phi witnesses the non-orthogonal MRA
    auto P = [&](double w) { return raised_cosine(w, r); };
    const double at_pi = meyer_sum(P, pi, 2);
    CHECK(at_pi == doctest::Approx(2.0 / (16.0 * pi * pi)).epsilon(1e-10));
    CHECK(std::abs(at_pi - 1.0 / (2.0 * pi)) > 1e-2);
    CHECK(meyer_sum([](double) { return 0.0; }, 1.0, 2) == 0.0);
}

TEST_CASE("shaping_pulse: branches, support, evenness, product form") {
    for (const double a : {1.0 / 15.0, 0.25, 1.0 / 3.0}) {
        const RollOff r(a);
        const double flat_w = 1.5 * pi * (1.0 - a / 3.0);
        if (a < 1.0 / 3.0)
            CHECK(shaping_pulse(flat_w, r) == doctest::Approx(1.0 / sqrt_two_pi).epsilon(1e-15));
        CHECK(shaping_pulse(0.0, r) == 0.0);
        CHECK(shaping_pulse(0.9 * (1.0 - a) * pi, r) == 0.0);
        CHECK(shaping_pulse(2.0 * (1.0 + a) * pi + 0.5, r) == 0.0);
        CHECK(shaping_pulse(-1.7, r) == shaping_pulse(1.7, r));

        // the filter-bank product route agrees branch for branch
        for (int i = 0; i <= 2000; ++i) {
            const double w = 1e-9 + (2.0 * (1.0 + a) * pi) * i / 2000.0;
            const double product = sqrt_two_pi * sqrt_raised_cosine(w - 2.0 * pi, r) *
                                   sqrt_raised_cosine(0.5 * w, r);
            CHECK(shaping_pulse(w, r) == doctest::Approx(product).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(shaping_pulse(pi, RollOff(0.4)), std::invalid_argument);
}

TEST_CASE("wavelet_spectrum: modulus and phase split") {
    const RollOff r(0.2);
    CHECK(wavelet_spectrum(0.0, r) == std::complex<double>(0.0, 0.0));
    for (double w = 0.3; w < 8.0; w += 0.173) {
        const auto psi = wavelet_spectrum(w, r);
        const double s = shaping_pulse(w, r);
        CHECK(std::abs(psi) == doctest::Approx(s).epsilon(1e-14));
        if (s > 1e-12)
            CHECK(std::abs(psi / s - std::polar(1.0, -0.5 * w)) < 1e-13);
    }
}

TEST_CASE("shaping_pulse_pcos_decomposition: parameters and reconstruction") {
    const double a = 0.2;
    const RollOff r(a);
    const auto parts = shaping_pulse_pcos_decomposition(r);

    // middle gate: centered on the midpoint of the flat band, half-width
    // (pi/2)(1-3a)
    const double lo = pi * (1.0 + a), hi = 2.0 * pi * (1.0 - a);
    CHECK(parts[1].w0 == doctest::Approx(0.5 * (lo + hi)).epsilon(1e-15));
    CHECK(parts[1].half_bandwidth == doctest::Approx(0.5 * pi * (1.0 - 3.0 * a)).epsilon(1e-15));
    CHECK(parts[1].t0 == 0.0);
    CHECK(parts[1].theta0 == 0.0);

    double worst = 0.0;
    for (int i = 1; i <= 20000; ++i) {
        const double w = 3.0 * pi * i / 20000.0;
        double acc = 0.0;
        for (const auto& p : parts)
            acc += pcos_spectrum(w, p);
        worst = std::max(worst, std::abs(acc - sqrt_two_pi * shaping_pulse(w, r)));
    }
    CHECK(worst < 1e-12);

    CHECK_THROWS_AS(shaping_pulse_pcos_decomposition(RollOff(1.0 / 3.0)),
                    std::invalid_argument);
}

TEST_CASE("refinement_filter: normalization, support, periodicity, two-scale") {
    const RollOff r(0.25);
    CHECK(refinement_filter(0.0, r) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    // support edge: zero on (1+a)pi/2 <= |v| <= pi
    CHECK(refinement_filter(0.5 * (1.0 + 0.25) * pi, r) == 0.0);
    CHECK(refinement_filter(0.9 * pi, r) == 0.0);
    for (const double v : {0.3, -1.1, 2.0}) {
        CHECK(refinement_filter(v + 2.0 * pi, r) ==
              doctest::Approx(refinement_filter(v, r)).epsilon(1e-12));
    }
    CHECK(two_scale_residual(RollOff(0.25)) < 1e-12);
    CHECK(two_scale_residual(RollOff(1.0 / 3.0)) < 1e-12);
    CHECK(two_scale_residual(RollOff(0.4)) > 1e-3);
}

TEST_CASE("vsb_check: pass and fail cases") {
    const SpectralGrid grid(-pi, 2.0 * pi / 4096.0, 4097);
    const RollOff r(0.2);
    auto P = [&](double w) { return raised_cosine(w, r); };
    CHECK(vsb_check(P, grid).pass);

    // constant split: gate of width 4pi and height 1/(4pi)
    auto gate = [](double w) { return std::abs(w) < 2.0 * pi ? 1.0 / (4.0 * pi) : 0.0; };
    CHECK(vsb_check(gate, grid).pass);

    auto scaled = [&](double w) { return 1.01 * raised_cosine(w, r); };
    const auto rep = vsb_check(scaled, grid);
    CHECK_FALSE(rep.pass);
    CHECK(rep.max_residual == doctest::Approx(0.01 / (2.0 * pi)).epsilon(1e-6));
}
