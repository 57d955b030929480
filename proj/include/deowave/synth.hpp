// Synthetic transient generator: a unit sinusoid carrying an additive damped
// high-frequency burst, standing in for externally simulated fault records.
#pragma once

#include <cstdint>
#include <optional>

#include "deowave/wavelets.hpp"

namespace deowave {

// Defaults: 8 cycles x 128 samples/cycle = 1024 samples.  The fundamental
// period is fixed at 8 time units (dt = 1/16), which puts the fundamental at
// w = pi/4 -- far below the wavelet passband at the default scales -- while
// the burst carrier at 4 rad/unit sits inside the passband.
struct SynthConfig {
    std::size_t cycles = 8;
    std::size_t samples_per_cycle = 128;
    bool fault = true;
    std::size_t onset_index = 512;
    double burst_amplitude = 0.3;
    double burst_decay_samples = 16.0;  // e-folding, in samples
    double burst_frequency = 4.0;       // rad per time unit
    double noise_sigma = 0.0;
    std::uint64_t seed = 0;

    static constexpr double fundamental_period = 8.0; // time units per cycle
};

SampledSignal synth_signal(const SynthConfig& cfg);

} // namespace deowave
