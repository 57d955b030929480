// The cosine-pulse transform pair: PCOS spectra (a cosine riding on a
// frequency gate), their closed-form inverse transforms pcos, the time-shift
// property, and the real/imaginary decompositions rcos/icos.
#pragma once

#include <array>
#include <complex>
#include <limits>
#include <stdexcept>

#include "deowave/primitives.hpp"

namespace deowave {

// Parameters of a cosine pulse spectrum: cos(w t0 + theta0) inside the gate
// [w0 - B, w0 + B), zero outside.  B = +inf is the infinite-cosine sentinel;
// it has a spectrum but no pointwise inverse transform (distributional pair).
struct PcosParams {
    double t0 = 0.0;
    double theta0 = 0.0;
    double w0 = 0.0;
    double half_bandwidth = 0.0; // B

    PcosParams(double t0_, double theta0_, double w0_, double b)
        : t0(t0_), theta0(theta0_), w0(w0_), half_bandwidth(b) {
        if (!std::isfinite(t0) || !std::isfinite(theta0))
            throw std::invalid_argument("PcosParams: t0/theta0 must be finite");
        if (!(w0 >= 0.0) || !std::isfinite(w0))
            throw std::invalid_argument("PcosParams: w0 must be finite and >= 0");
        if (!(b > 0.0)) // +inf allowed
            throw std::invalid_argument("PcosParams: B must be > 0");
    }

    static PcosParams infinite_cosine(double t0_, double theta0_) {
        return PcosParams(t0_, theta0_, 0.0, std::numeric_limits<double>::infinity());
    }

    bool is_infinite() const { return std::isinf(half_bandwidth); }
};

// Auxiliary parameters of the rcos/icos closed forms:
//   dw+ = w0 + B,  dw- = w0 - B,
//   dth+ = B t0 + w0 t0 + theta0,  dth- = B t0 - w0 t0 - theta0.
struct PcosAux {
    double dw_plus;
    double dw_minus;
    double dth_plus;
    double dth_minus;
    double t0;

    explicit PcosAux(const PcosParams& p)
        : dw_plus(p.w0 + p.half_bandwidth),
          dw_minus(p.w0 - p.half_bandwidth),
          dth_plus(p.half_bandwidth * p.t0 + p.w0 * p.t0 + p.theta0),
          dth_minus(p.half_bandwidth * p.t0 - p.w0 * p.t0 - p.theta0),
          t0(p.t0) {
        if (p.is_infinite())
            throw std::invalid_argument("PcosAux: infinite-B pcos has no closed form");
    }

    // Recovers the generating parameters (the map is invertible).
    PcosParams params() const {
        const double b = 0.5 * (dw_plus - dw_minus);
        const double w0 = 0.5 * (dw_plus + dw_minus);
        const double theta0 = dth_plus - dw_plus * t0;
        return PcosParams(t0, theta0, w0, b);
    }
};

// Spectrum value: cos(w t0 + theta0) on [w0 - B, w0 + B), 0 elsewhere.
// The gate is half-open (closed left edge) so grid semantics are unambiguous.
inline double pcos_spectrum(double w, const PcosParams& p) {
    if (!p.is_infinite() &&
        !(w >= p.w0 - p.half_bandwidth && w < p.w0 + p.half_bandwidth))
        return 0.0;
    return std::cos(w * p.t0 + p.theta0);
}

// Closed-form inverse transform (1/2pi convention):
//   pcos(t) = (B/2pi) { e^{j(w0 t + w0 t0 + th0)} Sa[B(t+t0)]
//                     + e^{j(w0 t - w0 t0 - th0)} Sa[B(t-t0)] }.
std::complex<double> pcos_time(double t, const PcosParams& p);

// Time-shift property: pcos(t - T; t0, ...) evaluated as pcos(t; t0 - T, ...).
std::complex<double> pcos_shifted(double t, double shift, const PcosParams& p);

// Real part of pcos_time via the rational closed form over (t^2 - t0^2);
// falls back to direct Re(pcos_time) within |t^2 - t0^2| < 1e-7.
double rcos(double t, const PcosAux& aux);

// Imaginary part, same structure.
double icos(double t, const PcosAux& aux);

} // namespace deowave
