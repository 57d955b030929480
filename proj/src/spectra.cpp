#include "deowave/spectra.hpp"

#include <algorithm>
#include <cmath>

namespace deowave {

double raised_cosine(double w, const RollOff& r) {
    const double a = r.alpha();
    const double aw = std::abs(w);
    if (r.is_shannon_limit())
        return aw < pi ? 1.0 / (2.0 * pi) : 0.0;
    if (aw < (1.0 - a) * pi)
        return 1.0 / (2.0 * pi);
    if (aw < (1.0 + a) * pi)
        return (1.0 + std::cos((aw - (1.0 - a) * pi) / (2.0 * a))) / (4.0 * pi);
    return 0.0;
}

double sqrt_raised_cosine(double w, const RollOff& r) {
    const double a = r.alpha();
    const double aw = std::abs(w);
    if (r.is_shannon_limit())
        return aw < pi ? 1.0 / sqrt_two_pi : 0.0;
    if (aw < (1.0 - a) * pi)
        return 1.0 / sqrt_two_pi;
    if (aw < (1.0 + a) * pi)
        return std::cos((aw - (1.0 - a) * pi) / (4.0 * a)) / sqrt_two_pi;
    return 0.0;
}

double nyquist_sum(const SpectrumFn& p, double w, int n_terms) {
    double acc = 0.0;
    // Fixed summation order keeps the result bitwise reproducible.
    for (int l = -n_terms; l <= n_terms; ++l)
        acc += p(w + 2.0 * pi * l);
    return acc;
}

double meyer_sum(const SpectrumFn& phi, double w, int n_terms) {
    double acc = 0.0;
    for (int n = -n_terms; n <= n_terms; ++n) {
        const double v = phi(w + 2.0 * pi * n);
        acc += v * v;
    }
    return acc;
}

double shaping_pulse(double w, const RollOff& r) {
    r.require_orthogonal();
    const double a = r.alpha();
    const double aw = std::abs(w); // even extension
    if (r.is_shannon_limit())
        return (aw >= pi && aw < 2.0 * pi) ? 1.0 / sqrt_two_pi : 0.0;
    if (aw < (1.0 - a) * pi)
        return 0.0;
    if (aw < (1.0 + a) * pi)
        return std::cos((aw - pi * (1.0 + a)) / (4.0 * a)) / sqrt_two_pi;
    if (aw < 2.0 * pi * (1.0 - a))
        return 1.0 / sqrt_two_pi;
    if (aw < 2.0 * pi * (1.0 + a))
        return std::cos((aw - 2.0 * pi * (1.0 - a)) / (8.0 * a)) / sqrt_two_pi;
    return 0.0;
}

std::complex<double> wavelet_spectrum(double w, const RollOff& r) {
    const double s = shaping_pulse(w, r);
    if (s == 0.0)
        return {0.0, 0.0};
    return std::polar(s, -0.5 * w);
}

std::array<PcosParams, 3> shaping_pulse_pcos_decomposition(const RollOff& r) {
    const double a = r.alpha();
    if (!(a > 0.0 && a < 1.0 / 3.0))
        throw std::invalid_argument(
            "shaping_pulse_pcos_decomposition: needs 0 < alpha < 1/3 "
            "(the flat middle gate degenerates at 1/3)");
    // Left roll-off, flat middle gate, right roll-off of sqrt(2pi) S(w).
    return {
        PcosParams(1.0 / (4.0 * a), -pi * (1.0 + a) / (4.0 * a), pi, pi * a),
        PcosParams(0.0, 0.0, 1.5 * pi * (1.0 - a / 3.0), 0.5 * pi * (1.0 - 3.0 * a)),
        PcosParams(1.0 / (8.0 * a), -2.0 * pi * (1.0 - a) / (8.0 * a), 2.0 * pi,
                   2.0 * pi * a),
    };
}

double refinement_filter(double v, const RollOff& r) {
    // Fold into the base interval [-pi, pi).
    double base = std::remainder(v, 2.0 * pi);
    if (base >= pi)
        base -= 2.0 * pi;
    // 2 sqrt(pi) Phi(2v) makes the two-scale identity exact: the flat value
    // of (1/sqrt 2) H Phi(w/2) is then (1/sqrt 2) 2 sqrt(pi) / (2pi) ... = 1.
    return 2.0 * std::sqrt(pi) * sqrt_raised_cosine(2.0 * base, r);
}

double two_scale_residual(const RollOff& r, double w_max, std::size_t n_points) {
    double worst = 0.0;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (std::size_t i = 0; i < n_points; ++i) {
        const double w = -w_max + 2.0 * w_max * static_cast<double>(i) /
                                     static_cast<double>(n_points - 1);
        const double lhs = sqrt_raised_cosine(w, r);
        const double rhs =
            inv_sqrt2 * refinement_filter(0.5 * w, r) * sqrt_raised_cosine(0.5 * w, r);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

VsbReport vsb_check(const SpectrumFn& p, const SpectralGrid& grid) {
    VsbReport rep;
    const double target = 1.0 / (2.0 * pi);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double w = grid.w_at(i);
        if (!(std::abs(w) < pi))
            continue;
        // The complementary period copy sits at w -+ 2pi depending on the
        // sign of w; for an even spectrum the two give the same residual.
        const double shift = (w >= 0.0) ? -2.0 * pi : 2.0 * pi;
        const double res = std::abs(p(w) + p(w + shift) - target);
        if (res > rep.max_residual) {
            rep.max_residual = res;
            rep.worst_w = w;
        }
    }
    rep.pass = rep.max_residual <= 1e-12;
    return rep;
}

} // namespace deowave
