// Frequency-domain side of the library: the raised-cosine Nyquist spectrum
// P(w), its square root Phi(w), the wavelet shaping pulse S(w) and spectrum
// Psi(w), the two-scale refinement filter H, and the vestigial-sideband
// orthogonality check.
#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "deowave/pcos.hpp"
#include "deowave/primitives.hpp"

namespace deowave {

// Validated roll-off parameter.  alpha = 0 is the Shannon limit (flat
// spectra, no roll-off branch); 0 < alpha < 1 is the general raised cosine.
// Translate orthonormality of the wavelet construction additionally needs
// alpha <= 1/3, tracked by the orthogonal_mra flag.
class RollOff {
  public:
    explicit RollOff(double alpha) : alpha_(alpha) {
        if (!(alpha >= 0.0 && alpha < 1.0))
            throw std::invalid_argument("RollOff: alpha must lie in [0, 1)");
    }

    double alpha() const { return alpha_; }
    bool is_shannon_limit() const { return alpha_ == 0.0; }
    bool orthogonal_mra() const { return alpha_ <= 1.0 / 3.0; }

    // Requires the orthogonal-MRA range; used by the wavelet-side operations.
    void require_orthogonal() const {
        if (!orthogonal_mra())
            throw std::invalid_argument("RollOff: operation requires alpha <= 1/3");
    }

  private:
    double alpha_;
};

// Default roll-off values shipped with the family.  The source article
// announces five defaults but lists these six; all six are kept.
inline const std::vector<double> default_rolloffs{
    0.0, 1.0 / 15.0, 2.0 / 15.0, 1.0 / 4.0, 4.0 / 15.0, 1.0 / 3.0};

// Uniformly sampled spectrum: w(i) = w_start + i * w_step.
struct SpectralGrid {
    double w_start = 0.0;
    double w_step = 0.0;
    std::vector<std::complex<double>> values;

    SpectralGrid() = default;
    SpectralGrid(double start, double step, std::size_t n)
        : w_start(start), w_step(step), values(n) {
        if (!(step > 0.0))
            throw std::invalid_argument("SpectralGrid: w_step must be > 0");
    }

    std::size_t size() const { return values.size(); }
    double w_at(std::size_t i) const { return w_start + static_cast<double>(i) * w_step; }
};

using SpectrumFn = std::function<double(double)>;

// Raised cosine P(w): flat 1/(2pi) on |w| < (1-a)pi, cosine roll-off down to
// zero across (1-a)pi <= |w| < (1+a)pi.  Even, nonnegative, integrates to 1.
double raised_cosine(double w, const RollOff& r);

// Phi(w) = sqrt(P(w)): flat 1/sqrt(2pi), quarter-cosine roll-off.
double sqrt_raised_cosine(double w, const RollOff& r);

// Sum of 2pi-translates of P: sum_{|l| <= n_terms} P(w + 2 pi l).  Equals
// 1/(2pi) for every w when P is a Nyquist spectrum.
double nyquist_sum(const SpectrumFn& p, double w, int n_terms);

// Meyer central condition: sum_{|n| <= n_terms} |Phi(w + 2 pi n)|^2.
double meyer_sum(const SpectrumFn& phi, double w, int n_terms);

// Wavelet shaping pulse S(w): one-sided five-branch profile on w > 0
// (zero below (1-a)pi, quarter-cosine up, flat 1/sqrt(2pi), eighth-cosine
// down, zero above 2(1+a)pi), extended evenly to w < 0.
// Requires alpha <= 1/3.
double shaping_pulse(double w, const RollOff& r);

// Complex wavelet spectrum Psi(w) = e^{-jw/2} S(w).
std::complex<double> wavelet_spectrum(double w, const RollOff& r);

// Splits sqrt(2pi) S(w), w > 0, into three cosine-pulse spectra (left
// roll-off, flat middle gate, right roll-off).  Requires alpha < 1/3
// strictly: at 1/3 the middle gate degenerates to zero width.
std::array<PcosParams, 3> shaping_pulse_pcos_decomposition(const RollOff& r);

// Two-scale refinement filter: H(v) = 2 sqrt(pi) Phi(2v) on |v| <= pi,
// extended 2pi-periodically.  H(0) = sqrt(2).  The two-scale identity
// Phi(w) = (1/sqrt 2) H(w/2) Phi(w/2) holds exactly iff alpha <= 1/3; the
// filter itself evaluates for any roll-off so the failure is observable.
double refinement_filter(double v, const RollOff& r);

// Residual of the two-scale identity over a symmetric grid covering
// |w| <= w_max: max |Phi(w) - (1/sqrt 2) H(w/2) Phi(w/2)|.
double two_scale_residual(const RollOff& r, double w_max = 4.0 * pi,
                          std::size_t n_points = 1 << 15);

struct VsbReport {
    double max_residual = 0.0;
    double worst_w = 0.0;
    bool pass = false;
};

// Vestigial-sideband symmetry check: max over |w| < pi of
// |P(w) + P(w - 2pi) - 1/(2pi)|; PASS iff <= 1e-12.
VsbReport vsb_check(const SpectrumFn& p, const SpectralGrid& grid);

} // namespace deowave
