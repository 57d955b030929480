// The invariant check suite behind `deowave check`: every analytically
// provable property of the family, evaluated numerically with a residual and
// a tolerance.  Spectral inner products are exact per-branch quadratures.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deowave/mra.hpp"
#include "deowave/spectra.hpp"

namespace deowave {

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct CheckOptions {
    // Restrict the sweep to one roll-off (default: all shipped defaults).
    std::optional<double> alpha;
    // Multiplies every tolerance (values < 1 tighten the suite).
    double tolerance_scale = 1.0;
    // Optional candidate spectrum for the vestigial-sideband MRA admission.
    const SpectrumFn* vsb_candidate = nullptr;
};

// Runs the full suite; results come back in a fixed deterministic order.
std::vector<CheckResult> run_checks(const CheckOptions& opt = {});

// Spectral inner products (exact-quadrature route).  `delta` is the integer
// translate distance n - m.
double scaling_inner_product(const RollOff& r, int delta);
double wavelet_inner_product(const RollOff& r, int delta);
double cross_inner_product(const RollOff& r, int delta); // <psi, phi(.-n)>
double gsha_inner_product(double alpha, int delta);      // non-orthogonal witness

} // namespace deowave
