// Continuous wavelet transform engine: complex coefficient matrices over a
// scale list and shift grid, modulus/phase views, and single-scale
// coefficient lines.
#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "deowave/wavelets.hpp"

namespace deowave {

// Ordered list of analysis scales; every scale must be nonzero.
struct ScaleList {
    std::vector<double> scales;

    explicit ScaleList(std::vector<double> s);

    // min..max with a fixed step, e.g. {1, 1.5, 2}.
    static ScaleList range(double min, double step, double max);

    std::size_t size() const { return scales.size(); }
};

// Uniform grid of shift positions b.
struct ShiftGrid {
    double b_start = 0.0;
    double db = 0.0;
    std::size_t n = 0;

    ShiftGrid(double start, double step, std::size_t count)
        : b_start(start), db(step), n(count) {
        if (!(step > 0.0) || count < 1)
            throw std::invalid_argument("ShiftGrid: need db > 0 and n >= 1");
    }

    double b_at(std::size_t i) const { return b_start + static_cast<double>(i) * db; }
};

// Complex coefficient matrix C[scale][shift] with a per-cell validity mask.
// A cell is valid when the wavelet footprint [b - 12a, b + 12a] lies inside
// the signal support (cone-of-influence bookkeeping).
struct Scalogram {
    ScaleList scales;
    double b_start = 0.0;
    double db = 0.0;
    std::size_t n_shifts = 0;
    std::vector<std::vector<std::complex<double>>> coeffs; // [scale][shift]
    std::vector<std::vector<std::uint8_t>> valid;          // parallel mask

    double b_at(std::size_t i) const { return b_start + static_cast<double>(i) * db; }
};

struct CwtOptions {
    // Eq-form switch: the standard inner-product form conjugates the
    // analyzing wavelet (default); `conjugate = false` gives the literal
    // unconjugated transform.
    bool conjugate = true;
    // Worker count; results are bitwise identical for any value.
    unsigned threads = 1;
};

// C_{a,b} = (1/sqrt|a|) sum_k f(t_k) conj(psi((t_k - b)/a)) dt, trapezoid
// rule on the signal grid, wavelet evaluated analytically and truncated to
// its effective support |(t-b)/a| <= 12.  Requires alpha <= 1/3.
Scalogram cwt(const SampledSignal& f, const RollOff& r, const ScaleList& scales,
              const ShiftGrid& shifts, const CwtOptions& opt = {});

// Same transform with the wavelet linearly interpolated from a table
// instead of evaluated in closed form.
Scalogram cwt_tabulated(const SampledSignal& f, const WaveletTable& table,
                        const ScaleList& scales, const ShiftGrid& shifts,
                        const CwtOptions& opt = {});

// Extracts the row C_{a,.}; `a` must be present in the scale list.
SampledSignal coefficient_line(const Scalogram& s, double a);

// Elementwise |C| and atan2 phase in (-pi, pi] (phase 0 for zero cells).
std::pair<std::vector<std::vector<double>>, std::vector<std::vector<double>>>
modulus_phase(const Scalogram& s);

} // namespace deowave
