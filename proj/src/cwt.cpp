#include "deowave/cwt.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace deowave {

ScaleList::ScaleList(std::vector<double> s) : scales(std::move(s)) {
    if (scales.empty())
        throw std::invalid_argument("ScaleList: empty");
    for (double a : scales)
        if (a == 0.0 || !std::isfinite(a))
            throw std::invalid_argument("ScaleList: scales must be finite and nonzero");
    if (!std::is_sorted(scales.begin(), scales.end(),
                        [](double x, double y) { return x < y; }) ||
        std::adjacent_find(scales.begin(), scales.end()) != scales.end())
        throw std::invalid_argument("ScaleList: scales must be strictly increasing");
}

ScaleList ScaleList::range(double min, double step, double max) {
    if (!(step > 0.0) || !(max >= min))
        throw std::invalid_argument("ScaleList::range: need step > 0 and max >= min");
    std::vector<double> s;
    for (double a = min; a <= max + 1e-12 * step; a += step)
        s.push_back(a);
    return ScaleList(std::move(s));
}

namespace {

// Runs fn(i) for i in [0, n) over `threads` workers.  Each index writes its
// own cell, so the result does not depend on the worker count.
template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, const Fn& fn) {
    threads = std::max(1u, threads);
    if (threads == 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
                fn(i);
        });
    for (auto& th : pool)
        th.join();
}

template <typename WaveletFn>
Scalogram cwt_impl(const SampledSignal& f, const ScaleList& scales,
                   const ShiftGrid& shifts, const CwtOptions& opt,
                   const WaveletFn& psi) {
    if (f.samples.empty())
        throw std::invalid_argument("cwt: empty signal");

    Scalogram out{scales, shifts.b_start, shifts.db, shifts.n, {}, {}};
    out.coeffs.assign(scales.size(), std::vector<std::complex<double>>(shifts.n));
    out.valid.assign(scales.size(), std::vector<std::uint8_t>(shifts.n, 0));

    const double t0 = f.t_start;
    const double t1 = f.t_at(f.size() - 1);
    const double dt = f.dt;
    const double support = WaveletTable::effective_support;

    parallel_for(scales.size(), opt.threads, [&](std::size_t si) {
        const double a = scales.scales[si];
        const double half = support * std::abs(a);
        const double norm = dt / std::sqrt(std::abs(a));
        for (std::size_t bi = 0; bi < shifts.n; ++bi) {
            const double b = shifts.b_at(bi);
            // Integration restricted to the wavelet footprint and the
            // signal support; no padding is invented.
            const double lo = std::max(t0, b - half);
            const double hi = std::min(t1, b + half);
            std::complex<double> acc{};
            if (hi >= lo) {
                const auto k0 = static_cast<std::size_t>(std::ceil((lo - t0) / dt - 1e-9));
                const auto k1 = static_cast<std::size_t>(std::floor((hi - t0) / dt + 1e-9));
                for (std::size_t k = k0; k <= k1 && k < f.size(); ++k) {
                    const double u = (f.t_at(k) - b) / a;
                    std::complex<double> w = psi(u);
                    if (opt.conjugate)
                        w = std::conj(w);
                    // Trapezoid rule on the signal's native grid.
                    const double qw = (k == k0 || k == k1) ? 0.5 : 1.0;
                    acc += qw * f.samples[k] * w;
                }
            }
            out.coeffs[si][bi] = norm * acc;
            out.valid[si][bi] = (b - half >= t0 - 1e-9 && b + half <= t1 + 1e-9) ? 1 : 0;
        }
    });
    return out;
}

} // namespace

Scalogram cwt(const SampledSignal& f, const RollOff& r, const ScaleList& scales,
              const ShiftGrid& shifts, const CwtOptions& opt) {
    r.require_orthogonal();
    return cwt_impl(f, scales, shifts, opt,
                    [&r](double u) { return deo_wavelet(u, r); });
}

Scalogram cwt_tabulated(const SampledSignal& f, const WaveletTable& table,
                        const ScaleList& scales, const ShiftGrid& shifts,
                        const CwtOptions& opt) {
    const SampledSignal& g = table.grid;
    if (g.size() < 2)
        throw std::invalid_argument("cwt_tabulated: table needs >= 2 samples");
    auto psi = [&g](double u) -> std::complex<double> {
        const double x = (u - g.t_start) / g.dt;
        if (x < 0.0 || x > static_cast<double>(g.size() - 1))
            return {0.0, 0.0};
        const auto i = std::min(static_cast<std::size_t>(x), g.size() - 2);
        const double frac = x - static_cast<double>(i);
        return g.samples[i] * (1.0 - frac) + g.samples[i + 1] * frac;
    };
    return cwt_impl(f, scales, shifts, opt, psi);
}

SampledSignal coefficient_line(const Scalogram& s, double a) {
    if (a == 0.0)
        throw std::invalid_argument("coefficient_line: a = 0 is not a scale");
    const auto& sc = s.scales.scales;
    const auto it = std::find_if(sc.begin(), sc.end(),
                                 [a](double x) { return std::abs(x - a) <= 1e-12; });
    if (it == sc.end())
        throw std::invalid_argument("coefficient_line: scale not present in scalogram");
    const auto row = static_cast<std::size_t>(it - sc.begin());
    SampledSignal line(s.b_start, s.db, s.n_shifts, true);
    line.samples = s.coeffs[row];
    return line;
}

std::pair<std::vector<std::vector<double>>, std::vector<std::vector<double>>>
modulus_phase(const Scalogram& s) {
    std::vector<std::vector<double>> mod(s.coeffs.size()), ph(s.coeffs.size());
    for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
        mod[i].resize(s.n_shifts);
        ph[i].resize(s.n_shifts);
        for (std::size_t j = 0; j < s.n_shifts; ++j) {
            const auto c = s.coeffs[i][j];
            mod[i][j] = std::abs(c);
            // atan2(0, 0) = 0 keeps zero cells at phase 0; flip the
            // negative-real axis from -pi to pi.
            double p = std::atan2(c.imag(), c.real());
            if (p == -pi)
                p = pi;
            ph[i][j] = p;
        }
    }
    return {std::move(mod), std::move(ph)};
}

} // namespace deowave
