#include "deowave/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace deowave {

namespace {

GaussRule compute_rule(unsigned n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (unsigned i = 0; i < (n + 1) / 2; ++i) {
        // Chebyshev-based initial guess, then Newton on P_n.
        double x = std::cos(3.14159265358979323846 * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (unsigned k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15)
                break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

} // namespace

const GaussRule& gauss_legendre(unsigned n) {
    static std::mutex mu;
    static std::map<unsigned, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, compute_rule(n)).first;
    return it->second;
}

namespace {

template <typename T, typename F>
T integrate_impl(const F& f, double a, double b, unsigned panels) {
    if (!(b > a))
        return T{};
    const GaussRule& rule = gauss_legendre(16);
    const double h = (b - a) / panels;
    T total{};
    for (unsigned p = 0; p < panels; ++p) {
        const double lo = a + p * h;
        const double mid = lo + 0.5 * h;
        T acc{};
        for (std::size_t k = 0; k < rule.nodes.size(); ++k)
            acc += rule.weights[k] * f(mid + 0.5 * h * rule.nodes[k]);
        total += 0.5 * h * acc;
    }
    return total;
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 unsigned panels) {
    return integrate_impl<double>(f, a, b, panels);
}

std::complex<double>
integrate_complex(const std::function<std::complex<double>(double)>& f, double a,
                  double b, unsigned panels) {
    return integrate_impl<std::complex<double>>(f, a, b, panels);
}

std::complex<double>
integrate_segmented(const std::function<std::complex<double>(double)>& f,
                    std::vector<double> breaks, double oscillation_rate) {
    if (breaks.size() < 2)
        throw std::invalid_argument("integrate_segmented: need >= 2 breakpoints");
    std::sort(breaks.begin(), breaks.end());
    // Panel length such that the fastest phase advances <= ~2 rad per panel;
    // a 16-point rule then resolves it to machine precision.
    const double max_len = 2.0 / std::max(1.0, std::abs(oscillation_rate));
    std::complex<double> total{};
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const double lo = breaks[i], hi = breaks[i + 1];
        if (!(hi > lo))
            continue; // duplicate breakpoints collapse the segment
        const auto panels =
            static_cast<unsigned>(std::ceil((hi - lo) / max_len));
        total += integrate_impl<std::complex<double>>(f, lo, hi, std::max(1u, panels));
    }
    return total;
}

} // namespace deowave
