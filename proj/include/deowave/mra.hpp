// Orthogonal-MRA constructions beyond the raised cosine: roll-off-weighted
// spectral mixtures and the vestigial-sideband admission test.
#pragma once

#include <functional>
#include <vector>

#include "deowave/spectra.hpp"

namespace deowave {

// Discretized probability density over roll-off values: quadrature nodes in
// (0, 1) with nonnegative weights summing to 1.
struct RollOffDensity {
    std::vector<double> nodes;
    std::vector<double> weights;

    RollOffDensity(std::vector<double> nodes_, std::vector<double> weights_);

    // Uniform density on [lo, hi] discretized with an n-point Gauss-Legendre
    // rule (weights normalized to total mass 1).
    static RollOffDensity uniform(double lo, double hi, std::size_t n);
};

// Phi(w) = sqrt( sum_i weight_i P(w; alpha_i) ): real, nonnegative,
// supported on |w| < (1 + max alpha) pi, and Meyer-orthogonal because each
// P(.; alpha_i) is a Nyquist spectrum.
double weighted_scaling_spectrum(double w, const RollOffDensity& d);

struct MraBundle {
    SpectralGrid phi;        // sqrt(P) samples (empty when vsb fails)
    VsbReport vsb;           // vestigial-sideband residual report
    double meyer_max_dev = 0.0; // max |meyer_sum - 1/(2pi)| over the sweep
    bool pass = false;
};

// Admits a candidate spectrum P (real, nonnegative, zero for |w| > 2pi):
// runs vsb_check on the grid; on PASS emits Phi = sqrt(P) samples plus a
// Meyer-condition verification, on FAIL reports the worst-offending w.
// Negative P values are rejected before any square root is taken.
MraBundle build_mra_from_vsb(const SpectrumFn& p, const SpectralGrid& grid);

} // namespace deowave
