// Time-domain closed forms: the generalized Shannon scaling function, the
// orthogonal-MRA scaling function, the real/imaginary shaping pulses and the
// complex wavelet psi(t) = s(t - 1/2), plus uniform tabulation.
#pragma once

#include <complex>
#include <vector>

#include "deowave/spectra.hpp"

namespace deowave {

// Uniformly sampled time series.  `complex_valued` records whether the
// imaginary parts are meaningful (drives CSV column layout).
struct SampledSignal {
    double t_start = 0.0;
    double dt = 0.0;
    std::vector<std::complex<double>> samples;
    bool complex_valued = false;

    SampledSignal() = default;
    SampledSignal(double start, double step, std::size_t n, bool complex_vals = false)
        : t_start(start), dt(step), samples(n), complex_valued(complex_vals) {
        if (!(step > 0.0))
            throw std::invalid_argument("SampledSignal: dt must be > 0");
        if (n < 1)
            throw std::invalid_argument("SampledSignal: need at least one sample");
    }

    std::size_t size() const { return samples.size(); }
    double t_at(std::size_t i) const { return t_start + static_cast<double>(i) * dt; }
};

// Tabulated complex wavelet.  The family's effective support is [-12, 12];
// the magnitude outside it is small relative to the peak (about 1% for
// mid-range roll-offs; the alpha = 0 Shannon limit decays only like 1/t and
// tops out near 5%).
struct WaveletTable {
    RollOff alpha;
    SampledSignal grid;

    static constexpr double effective_support = 12.0;
};

// Generalized Shannon scaling function (non-orthogonal MRA):
//   cos(a pi t) / (1 - (2 a t)^2) * Sinc(t).
// alpha = 0 reduces to Sinc; zero at every nonzero integer for all alpha.
double gsha_scaling(double t, const RollOff& r);

// Orthogonal-MRA scaling function:
//   (1/sqrt(2pi)) [ H_{1-a}(t) + M(1+a, 1-a)(t) ].
double deo_scaling(double t, const RollOff& r);

// Re s(t) = (1/(2 sqrt(2pi))) [ H_{2(1-a)} - H_{1+a}
//                               + M(1-a, 1+a) + M(2(1+a), 2(1-a)) ].
// Even in t.  Requires alpha <= 1/3.
double shaping_real(double t, const RollOff& r);

// Im s(t) = (1/(2 sqrt(2pi))) [ Hbar_{1+a} - Hbar_{2(1-a)}
//                               + Mbar(1-a, 1+a) + Mbar(2(1+a), 2(1-a)) ].
// Odd in t.  The two Hbar poles at t = 0 cancel; near the origin the pair is
// evaluated jointly.  Requires alpha <= 1/3.
double shaping_imag(double t, const RollOff& r);

// Complex shaping pulse s(t) = Re s + j Im s (inverse transform of the
// one-sided S(w)).
std::complex<double> shaping_time(double t, const RollOff& r);

// The complex wavelet psi(t) = s(t - 1/2).
std::complex<double> deo_wavelet(double t, const RollOff& r);

// Samples psi on t_start + k dt, k = 0..n-1.  n >= 2, dt > 0.
WaveletTable tabulate(const RollOff& r, double t_start, double dt, std::size_t n);

} // namespace deowave
