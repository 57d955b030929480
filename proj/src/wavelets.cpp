#include "deowave/wavelets.hpp"

#include <cmath>

namespace deowave {

double gsha_scaling(double t, const RollOff& r) {
    const double a = r.alpha();
    if (r.is_shannon_limit())
        return sinc(t);
    const double den = 1.0 - (2.0 * a * t) * (2.0 * a * t);
    if (std::abs(den) >= 1e-7)
        return std::cos(a * pi * t) / den * sinc(t);
    // Removable singularity at ts = +-1/(2a), where a pi ts = +-pi/2: there
    // cos(a pi t) = -sign(ts) sin(a pi (t - ts)) exactly, which exposes the
    // zero as a factor.  Denominator splits as -4a^2 (t - ts)(t + ts).
    const double ts = (t >= 0.0 ? 1.0 : -1.0) / (2.0 * a);
    const double u = t - ts;
    const double cos_over_u = (ts > 0.0 ? -1.0 : 1.0) * a * pi * sa(a * pi * u);
    return cos_over_u / (-4.0 * a * a * (t + ts)) * sinc(t);
}

double deo_scaling(double t, const RollOff& r) {
    const double a = r.alpha();
    if (r.is_shannon_limit())
        return sinc(t) / sqrt_two_pi;
    const double flat = special_H(BandParam(1.0 - a), t);
    const double roll = special_M(MPair(1.0 + a, 1.0 - a), t);
    return (flat + roll) / sqrt_two_pi;
}

namespace {

// Joint evaluation of Hbar_{1+a} - Hbar_{2(1-a)}: the individual terms have
// 1/(pi t) poles of equal residue, the difference is entire.  Beyond the
// origin band the terms are evaluated separately through special_Hbar.
double hbar_pair(double a, double t) {
    if (std::abs(t) < 1e-4)
        return special_Hbar_diff(1.0 + a, 2.0 * (1.0 - a), t);
    return special_Hbar(BandParam(1.0 + a), t) - special_Hbar(BandParam(2.0 * (1.0 - a)), t);
}

} // namespace

double shaping_real(double t, const RollOff& r) {
    r.require_orthogonal();
    const double a = r.alpha();
    const double gates =
        special_H(BandParam(2.0 * (1.0 - a)), t) - special_H(BandParam(1.0 + a), t);
    if (r.is_shannon_limit())
        return 0.5 * gates / sqrt_two_pi;
    const double rolls = special_M(MPair(1.0 - a, 1.0 + a), t) +
                         special_M(MPair(2.0 * (1.0 + a), 2.0 * (1.0 - a)), t);
    return 0.5 * (gates + rolls) / sqrt_two_pi;
}

double shaping_imag(double t, const RollOff& r) {
    r.require_orthogonal();
    const double a = r.alpha();
    const double gates = hbar_pair(a, t);
    if (r.is_shannon_limit())
        return 0.5 * gates / sqrt_two_pi;
    const double rolls = special_Mbar(MPair(1.0 - a, 1.0 + a), t) +
                         special_Mbar(MPair(2.0 * (1.0 + a), 2.0 * (1.0 - a)), t);
    return 0.5 * (gates + rolls) / sqrt_two_pi;
}

std::complex<double> shaping_time(double t, const RollOff& r) {
    return {shaping_real(t, r), shaping_imag(t, r)};
}

std::complex<double> deo_wavelet(double t, const RollOff& r) {
    return shaping_time(t - 0.5, r);
}

WaveletTable tabulate(const RollOff& r, double t_start, double dt, std::size_t n) {
    if (n < 2)
        throw std::invalid_argument("tabulate: need at least 2 samples");
    WaveletTable table{r, SampledSignal(t_start, dt, n, true)};
    for (std::size_t k = 0; k < n; ++k)
        table.grid.samples[k] = deo_wavelet(table.grid.t_at(k), r);
    return table;
}

} // namespace deowave
