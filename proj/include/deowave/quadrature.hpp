// Gauss-Legendre quadrature over piecewise-smooth integrands.  Sweeps and
// inner products in this library integrate trigonometric polynomials per
// smooth spectral branch, so panels aligned to the branch breakpoints
// converge at machine precision.
#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace deowave {

struct GaussRule {
    std::vector<double> nodes;   // on [-1, 1]
    std::vector<double> weights;
};

// n-point Gauss-Legendre rule (Newton iteration on Legendre polynomials;
// deterministic, accurate to ~1 ulp).
const GaussRule& gauss_legendre(unsigned n);

// Integral over [a, b] split into `panels` equal panels, 16-point rule each.
double integrate(const std::function<double(double)>& f, double a, double b,
                 unsigned panels = 8);

std::complex<double>
integrate_complex(const std::function<std::complex<double>(double)>& f, double a,
                  double b, unsigned panels = 8);

// Integral over [breaks[0], breaks.back()] honoring interior breakpoints:
// each segment is split into enough panels that the phase of e^{j w t_max}
// advances at most ~2 per panel.
std::complex<double>
integrate_segmented(const std::function<std::complex<double>(double)>& f,
                    std::vector<double> breaks, double oscillation_rate);

} // namespace deowave
