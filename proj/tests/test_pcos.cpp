#include <doctest.h>

#include <cmath>
#include <random>

#include "deowave/pcos.hpp"
#include "oracles.hpp"

using namespace deowave;

namespace {

PcosParams random_params(std::mt19937& rng) {
    std::uniform_real_distribution<double> t0s(-3.0, 3.0);
    std::uniform_real_distribution<double> ths(-pi, pi);
    std::uniform_real_distribution<double> w0s(0.0, 6.0);
    std::uniform_real_distribution<double> bs(0.3, 5.0);
    return PcosParams(t0s(rng), ths(rng), w0s(rng), bs(rng));
}

} // namespace

TEST_CASE("pcos_spectrum: gate cases") {
    const PcosParams gate(0.0, 0.0, 0.0, 2.0);
    CHECK(pcos_spectrum(1.2, gate) == 1.0);
    CHECK(pcos_spectrum(-1.9, gate) == 1.0);
    CHECK(pcos_spectrum(2.5, gate) == 0.0);
    CHECK(pcos_spectrum(-2.0, gate) == 1.0); // closed left edge
    CHECK(pcos_spectrum(2.0, gate) == 0.0);  // open right edge

    const PcosParams shifted(0.0, 0.0, 5.0, 2.0);
    CHECK(pcos_spectrum(5.9, shifted) == 1.0);
    CHECK(pcos_spectrum(2.9, shifted) == 0.0);

    const PcosParams full(0.7, 0.3, 4.0, 1.0);
    CHECK(pcos_spectrum(4.0, full) == doctest::Approx(std::cos(4.0 * 0.7 + 0.3)));
}

TEST_CASE("pcos_time: particular cases and errors") {
    const double b = 2.4;
    const PcosParams gate(0.0, 0.0, 0.0, b);
    CHECK(pcos_time(0.0, gate).real() == doctest::Approx(b / pi).epsilon(1e-15));
    for (const double t : {0.3, -1.7, 4.1}) {
        const auto v = pcos_time(t, gate);
        CHECK(v.imag() == doctest::Approx(0.0));
        CHECK(v.real() == doctest::Approx(b / pi * sa(b * t)).epsilon(1e-14));
    }
    CHECK_THROWS_AS(pcos_time(0.1, PcosParams::infinite_cosine(1.0, 0.0)),
                    std::domain_error);
}

TEST_CASE("pcos_time matches the spectral inversion of its gate") {
    std::mt19937 rng(17);
    for (int rep = 0; rep < 3; ++rep) {
        const auto p = random_params(rng);
        auto spec = [&](double w) {
            return oracle::pcos_spectrum(w, p.t0, p.theta0, p.w0, p.half_bandwidth);
        };
        const std::vector<double> breaks{p.w0 - p.half_bandwidth, p.w0 + p.half_bandwidth};
        for (double t = -8.0; t <= 8.0; t += 0.37) {
            const auto expect = oracle::invert(spec, breaks, t, std::abs(p.t0));
            const auto got = pcos_time(t, p);
            CHECK(std::abs(got - expect) < 1e-10);
        }
    }
}

TEST_CASE("pcos_shifted: identity and two-path equality") {
    std::mt19937 rng(23);
    const auto p = random_params(rng);
    std::uniform_real_distribution<double> ts(-5.0, 5.0);
    for (int i = 0; i < 100; ++i) {
        const double t = ts(rng);
        const double T = ts(rng);
        CHECK(pcos_shifted(t, 0.0, p) == pcos_time(t, p));
        const auto a = pcos_shifted(t, T, p);
        const auto b2 = pcos_time(t - T, p);
        CHECK(std::abs(a - b2) < 1e-15 * (1.0 + std::abs(b2)));
    }
}

TEST_CASE("PcosAux: wavelet roll-off parameters and inversion") {
    const double a = 0.2;
    const PcosParams left(1.0 / (4.0 * a), -pi * (1.0 + a) / (4.0 * a), pi, pi * a);
    const PcosAux aux(left);
    CHECK(aux.dw_plus == doctest::Approx(pi * (1.0 + a)).epsilon(1e-15));
    CHECK(aux.dw_minus == doctest::Approx(pi * (1.0 - a)).epsilon(1e-15));
    CHECK(aux.dth_plus == doctest::Approx(0.0));
    CHECK(aux.dth_minus == doctest::Approx(pi / 2.0).epsilon(1e-15));

    const auto back = aux.params();
    CHECK(back.t0 == doctest::Approx(left.t0));
    CHECK(back.theta0 == doctest::Approx(left.theta0));
    CHECK(back.w0 == doctest::Approx(left.w0));
    CHECK(back.half_bandwidth == doctest::Approx(left.half_bandwidth));
}

TEST_CASE("rcos/icos: decomposition equals pcos_time everywhere") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> ts(-6.0, 6.0);
    for (int rep = 0; rep < 5; ++rep) {
        const auto p = random_params(rng);
        const PcosAux aux(p);
        for (int i = 0; i < 200; ++i) {
            const double t = ts(rng);
            if (std::abs(t * t - p.t0 * p.t0) < 1e-6)
                continue;
            const auto direct = pcos_time(t, p);
            CHECK(std::abs(rcos(t, aux) - direct.real()) < 1e-10);
            CHECK(std::abs(icos(t, aux) - direct.imag()) < 1e-10);
        }
        // near the singular points the fallback takes over seamlessly
        for (const double eps : {0.0, 1e-9, -1e-9, 1e-8}) {
            const double t = p.t0 + eps;
            const auto direct = pcos_time(t, p);
            CHECK(std::abs(rcos(t, aux) - direct.real()) < 1e-6);
            CHECK(std::abs(icos(t, aux) - direct.imag()) < 1e-6);
        }
    }
}

TEST_CASE("icos is odd when t0 = 0 and theta0 = 0") {
    const PcosParams p(0.0, 0.0, 3.0, 1.5);
    const PcosAux aux(p);
    for (const double t : {0.4, 1.3, 2.9}) {
        CHECK(icos(-t, aux) == doctest::Approx(-icos(t, aux)).epsilon(1e-12));
    }
    CHECK(icos(0.0, aux) == doctest::Approx(0.0));
}

TEST_CASE("forward DFT of sampled pcos_time reproduces the spectrum off the gate edges") {
    // Time truncation of a discontinuous gate rings like 1/(pi T dw) around
    // the two jump frequencies (Gibbs), so bins within a 2 rad/s guard band
    // of the edges are excluded; everywhere else the pair holds to 1e-3 of
    // the unit peak.
    std::mt19937 rng(41);
    const auto p = random_params(rng);
    const std::size_t n = 1 << 14;
    const double dt = 512.0 / static_cast<double>(n);
    std::vector<std::complex<double>> samples(n);
    for (std::size_t k = 0; k < n; ++k)
        samples[k] = pcos_time(-256.0 + static_cast<double>(k) * dt, p);
    const auto spec = oracle::forward_dft(samples, -256.0, dt);
    const double dw = 2.0 * pi / 512.0;
    double worst = 0.0;
    for (std::size_t m = 0; m < n; ++m) {
        const double w = (static_cast<double>(m) - static_cast<double>(n / 2)) * dw;
        const double guard_lo = std::abs(w - (p.w0 - p.half_bandwidth));
        const double guard_hi = std::abs(w - (p.w0 + p.half_bandwidth));
        if (guard_lo < 2.0 || guard_hi < 2.0)
            continue;
        worst = std::max(worst, std::abs(spec[m] - pcos_spectrum(w, p)));
    }
    CHECK(worst < 1e-3);
}
