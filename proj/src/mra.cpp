#include "deowave/mra.hpp"

#include <cmath>

#include "deowave/quadrature.hpp"

namespace deowave {

RollOffDensity::RollOffDensity(std::vector<double> nodes_, std::vector<double> weights_)
    : nodes(std::move(nodes_)), weights(std::move(weights_)) {
    if (nodes.size() != weights.size() || nodes.empty())
        throw std::invalid_argument("RollOffDensity: nodes/weights size mismatch");
    double mass = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!(nodes[i] > 0.0 && nodes[i] < 1.0))
            throw std::invalid_argument("RollOffDensity: nodes must lie in (0, 1)");
        if (!(weights[i] >= 0.0))
            throw std::invalid_argument("RollOffDensity: weights must be >= 0");
        mass += weights[i];
    }
    if (std::abs(mass - 1.0) > 1e-12)
        throw std::invalid_argument("RollOffDensity: weights must sum to 1");
}

RollOffDensity RollOffDensity::uniform(double lo, double hi, std::size_t n) {
    if (!(0.0 < lo && lo < hi && hi < 1.0))
        throw std::invalid_argument("RollOffDensity::uniform: need 0 < lo < hi < 1");
    const GaussRule& rule = gauss_legendre(static_cast<unsigned>(n));
    std::vector<double> nodes(n), weights(n);
    for (std::size_t i = 0; i < n; ++i) {
        nodes[i] = 0.5 * (lo + hi) + 0.5 * (hi - lo) * rule.nodes[i];
        weights[i] = 0.5 * rule.weights[i]; // GL weights sum to 2
    }
    return RollOffDensity(std::move(nodes), std::move(weights));
}

double weighted_scaling_spectrum(double w, const RollOffDensity& d) {
    double acc = 0.0;
    for (std::size_t i = 0; i < d.nodes.size(); ++i)
        acc += d.weights[i] * raised_cosine(w, RollOff(d.nodes[i]));
    return std::sqrt(acc);
}

MraBundle build_mra_from_vsb(const SpectrumFn& p, const SpectralGrid& grid) {
    MraBundle out;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (p(grid.w_at(i)) < 0.0)
            throw std::invalid_argument("build_mra_from_vsb: spectrum takes negative values");
    }
    out.vsb = vsb_check(p, grid);
    if (!out.vsb.pass)
        return out;

    out.phi = SpectralGrid(grid.w_start, grid.w_step, grid.size());
    double worst = 0.0;
    const double target = 1.0 / (2.0 * pi);
    auto phi_fn = [&](double w) { return std::sqrt(std::max(0.0, p(w))); };
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double w = grid.w_at(i);
        out.phi.values[i] = phi_fn(w);
        worst = std::max(worst, std::abs(meyer_sum(phi_fn, w, 2) - target));
    }
    out.meyer_max_dev = worst;
    out.pass = true;
    return out;
}

} // namespace deowave
