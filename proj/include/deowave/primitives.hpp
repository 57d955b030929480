// Elementary special functions used throughout the library: the sampling
// kernels Sa and Sinc, the band kernels H_v and Hbar_v, and the mixed
// cosine/sine kernels M and Mbar.  All removable singularities are evaluated
// by local series so every function is smooth across its singular points.
#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace deowave {

inline constexpr double pi = 3.14159265358979323846;
inline const double sqrt_two_pi = std::sqrt(2.0 * pi);

// Sa(x) = sin(x)/x, Sa(0) = 1.  Even.
inline double sa(double x) {
    const double ax = std::abs(x);
    if (ax < 1e-4) {
        // |x| < 1e-4 keeps the truncation error below 1e-21.
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0);
    }
    return std::sin(x) / x;
}

// Sinc(x) = sin(pi x)/(pi x).  Zero at every nonzero integer.
inline double sinc(double x) { return sa(pi * x); }

// Normalized bandwidth index for H_v / Hbar_v.  The composed call sites pass
// v up to 2(1+alpha), so any finite v >= 0 is accepted.
struct BandParam {
    double v;

    explicit BandParam(double v_) : v(v_) {
        if (!std::isfinite(v) || v < 0.0)
            throw std::invalid_argument("BandParam: v must be finite and >= 0");
    }
};

// Frequency pair for the M / Mbar kernels.  v1 drives the leading factor
// (the cosine in M, the sine in Mbar) and v2 the companion factor;
// |v1 - v2| sets the amplitude, so v1 == v2 degenerates.
struct MPair {
    double v1;
    double v2;

    MPair(double v1_, double v2_) : v1(v1_), v2(v2_) {
        if (!std::isfinite(v1) || !std::isfinite(v2))
            throw std::invalid_argument("MPair: frequencies must be finite");
        if (v1 == v2)
            throw std::invalid_argument("MPair: v1 == v2 is degenerate");
    }
};

// H_v(t) = v Sinc(v t) = sin(pi v t)/(pi t).  Even in t; integrates to 1.
inline double special_H(const BandParam& b, double t) {
    return b.v * sinc(b.v * t);
}

// Hbar_v(t) = cos(v pi t)/(pi t).  Odd in t, with a genuine 1/t pole at the
// origin whose residue 1/pi is independent of v; the pole only cancels in
// sums of Hbar terms, so evaluation at t = 0 is an error here.
inline double special_Hbar(const BandParam& b, double t) {
    if (b.v <= 0.0)
        throw std::invalid_argument("special_Hbar: v must be > 0");
    if (t == 0.0)
        throw std::domain_error("special_Hbar: pole at t = 0");
    return std::cos(b.v * pi * t) / (pi * t);
}

// Difference Hbar_{v1}(t) - Hbar_{v2}(t), finite for all t: the 1/t poles
// cancel.  Uses cos a - cos b = -2 sin((a+b)/2) sin((a-b)/2) so no
// subtraction of diverging terms ever happens.
inline double special_Hbar_diff(double v1, double v2, double t) {
    const double s = 0.5 * pi * (v1 + v2);
    const double d = 0.5 * (v1 - v2);
    return -std::sin(s * t) * d * sa(pi * d * t);
}

namespace detail {

// Shared rational-kernel evaluator for M and Mbar.
//
//   numer(t) = cos(pi v1 t) + 2 d t sin(pi v2 t)      (cosine flavour)
//   numer(t) = sin(pi v1 t) - 2 d t cos(pi v2 t)      (sine flavour)
//   value(t) = (2|d|/pi) * numer(t) / (1 - (2 d t)^2),   d = v1 - v2.
//
// The denominator vanishes at ts = +-1/(2|d|) and so does the numerator:
// with sigma := 2 d ts = +-1 the oscillation phases there differ by exactly
// sigma pi/2.  Within |1-(2dt)^2| < 1e-7 the quotient is evaluated through
// the exact factorizations
//   cos X + sigma sin Y = -2 sin((X+Y)/2 + sigma pi/4) sin(pi d u / 2)
//   sin X - sigma cos Y = -2 sigma sin((X+Y)/2 - sigma pi/4) sin(pi d u / 2)
// (X = pi v1 t, Y = pi v2 t, u = t - ts), which expose the u-zero as an
// explicit factor instead of a numeric cancellation, together with the exact
// denominator split 1-(2dt)^2 = -4 d^2 (t - ts)(t + ts).
template <bool SineFlavour>
double m_kernel(double v1, double v2, double t) {
    const double d = v1 - v2;
    const double den = 1.0 - (2.0 * t * d) * (2.0 * t * d);
    const double amp = 2.0 * std::abs(d) / pi;

    if (std::abs(den) >= 1e-7) {
        double numer;
        if constexpr (SineFlavour)
            numer = std::sin(pi * v1 * t) - 2.0 * d * t * std::cos(pi * v2 * t);
        else
            numer = std::cos(pi * v1 * t) + 2.0 * d * t * std::sin(pi * v2 * t);
        return amp * numer / den;
    }

    const double ts = (t >= 0.0 ? 1.0 : -1.0) / (2.0 * std::abs(d));
    const double sigma = (2.0 * d * ts > 0.0) ? 1.0 : -1.0;
    const double u = t - ts;
    const double mean = 0.5 * pi * (v1 + v2) * t;
    // sin(pi d u / 2) / u, finite at u = 0.
    const double zero_factor = 0.5 * pi * d * sa(0.5 * pi * d * u);
    double numer_over_u;
    if constexpr (SineFlavour)
        numer_over_u = -2.0 * sigma * std::sin(mean - sigma * pi / 4.0) * zero_factor -
                       2.0 * d * std::cos(pi * v2 * t);
    else
        numer_over_u = -2.0 * std::sin(mean + sigma * pi / 4.0) * zero_factor +
                       2.0 * d * std::sin(pi * v2 * t);
    const double den_over_u = -4.0 * d * d * (t + ts);
    return amp * numer_over_u / den_over_u;
}

} // namespace detail

// M kernel: (2|v1-v2|/pi) {cos(pi v1 t) + 2(v1-v2) t sin(pi v2 t)} / (1 - [2t(v1-v2)]^2).
// v1 is the cosine frequency, v2 the sine frequency.  Even in t.
inline double special_M(const MPair& p, double t) {
    return detail::m_kernel<false>(p.v1, p.v2, t);
}

// Mbar kernel: sine/cosine-swapped counterpart of M.  v1 drives the sine,
// v2 the cosine.  Odd in t.
inline double special_Mbar(const MPair& p, double t) {
    return detail::m_kernel<true>(p.v1, p.v2, t);
}

} // namespace deowave
