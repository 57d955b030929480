#include "deowave/pcos.hpp"

namespace deowave {

std::complex<double> pcos_time(double t, const PcosParams& p) {
    if (p.is_infinite())
        throw std::domain_error(
            "pcos_time: the infinite-cosine pulse is a delta pair without sample values");
    const double b = p.half_bandwidth;
    const std::complex<double> plus =
        std::polar(1.0, p.w0 * t + p.w0 * p.t0 + p.theta0) * sa(b * (t + p.t0));
    const std::complex<double> minus =
        std::polar(1.0, p.w0 * t - p.w0 * p.t0 - p.theta0) * sa(b * (t - p.t0));
    return b / (2.0 * pi) * (plus + minus);
}

std::complex<double> pcos_shifted(double t, double shift, const PcosParams& p) {
    PcosParams shifted = p;
    shifted.t0 = p.t0 - shift;
    return pcos_time(t, shifted);
}

namespace {

// Both closed forms share the denominator (t^2 - t0^2); near its roots the
// numerators vanish too and the direct Eq-form evaluation takes over.
constexpr double kSingularBand = 1e-7;

} // namespace

double rcos(double t, const PcosAux& aux) {
    const double den = t * t - aux.t0 * aux.t0;
    if (std::abs(den) < kSingularBand)
        return pcos_time(t, aux.params()).real();
    const double num =
        t * (std::cos(aux.dth_plus) * std::sin(aux.dw_plus * t) -
             std::cos(aux.dth_minus) * std::sin(aux.dw_minus * t)) -
        aux.t0 * (std::sin(aux.dth_plus) * std::cos(aux.dw_plus * t) +
                  std::sin(aux.dth_minus) * std::cos(aux.dw_minus * t));
    return num / (2.0 * pi * den);
}

double icos(double t, const PcosAux& aux) {
    const double den = t * t - aux.t0 * aux.t0;
    if (std::abs(den) < kSingularBand)
        return pcos_time(t, aux.params()).imag();
    const double num =
        t * (std::cos(aux.dth_minus) * std::cos(aux.dw_minus * t) -
             std::cos(aux.dth_plus) * std::cos(aux.dw_plus * t)) -
        aux.t0 * (std::sin(aux.dth_plus) * std::sin(aux.dw_plus * t) +
                  std::sin(aux.dth_minus) * std::sin(aux.dw_minus * t));
    return num / (2.0 * pi * den);
}

} // namespace deowave
