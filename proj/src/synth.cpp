#include "deowave/synth.hpp"

#include <cmath>
#include <random>

namespace deowave {

SampledSignal synth_signal(const SynthConfig& cfg) {
    const std::size_t n = cfg.cycles * cfg.samples_per_cycle;
    if (n == 0)
        throw std::invalid_argument("synth_signal: empty grid");
    if (cfg.fault && cfg.onset_index >= n)
        throw std::invalid_argument("synth_signal: onset beyond the signal");
    if (!(cfg.burst_decay_samples > 0.0))
        throw std::invalid_argument("synth_signal: decay must be > 0");

    const double dt = SynthConfig::fundamental_period /
                      static_cast<double>(cfg.samples_per_cycle);
    const double w_fund = 2.0 * pi / SynthConfig::fundamental_period;

    SampledSignal out(0.0, dt, n, false);
    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    for (std::size_t k = 0; k < n; ++k) {
        const double t = out.t_at(k);
        double v = std::sin(w_fund * t);
        if (cfg.fault && k >= cfg.onset_index) {
            const double rel = static_cast<double>(k - cfg.onset_index);
            const double t_rel = t - out.t_at(cfg.onset_index);
            v += cfg.burst_amplitude * std::exp(-rel / cfg.burst_decay_samples) *
                 std::sin(cfg.burst_frequency * t_rel);
        }
        if (cfg.noise_sigma > 0.0)
            v += cfg.noise_sigma * gauss(rng);
        out.samples[k] = v;
    }
    return out;
}

} // namespace deowave
