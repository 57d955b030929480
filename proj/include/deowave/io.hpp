// CSV and PGM serialization.  All writers emit shortest round-trip decimal
// ("%.17g"-style via std::to_chars) so repeated runs are byte-identical.
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "deowave/cwt.hpp"
#include "deowave/wavelets.hpp"

namespace deowave::io {

// Parse failures carry the offending line number.
struct ParseError : std::runtime_error {
    std::size_t line;
    ParseError(const std::string& msg, std::size_t line_)
        : std::runtime_error(msg), line(line_) {}
};

// Signal CSV: header `t,value` (real) or `t,re,im` (complex).
void write_signal_csv(const std::filesystem::path& path, const SampledSignal& s);
SampledSignal read_signal_csv(const std::filesystem::path& path);

// Wavelet table CSV: header `t,re,im`.
void write_wavelet_csv(const std::filesystem::path& path, const WaveletTable& t);
// Reads a `t,re,im` table; alpha records which wavelet produced it.
WaveletTable read_wavelet_csv(const std::filesystem::path& path, const RollOff& alpha);

// Scalogram CSV: header `a,b,re,im,valid`, row-major by scale then shift;
// `valid` is the 0/1 cone-of-influence mask.
void write_scalogram_csv(const std::filesystem::path& path, const Scalogram& s);

// Spectrum CSV: header `w,re,im`.
void write_spectrum_csv(const std::filesystem::path& path, const SpectralGrid& g);

// Two-column `w,P` spectrum with linear interpolation between samples
// (values outside the tabulated range are 0).
struct TabulatedSpectrum {
    std::vector<double> w;
    std::vector<double> p;
    double operator()(double at) const;
};
TabulatedSpectrum read_vsb_csv(const std::filesystem::path& path);

// 8-bit binary PGM (P5), one pixel per matrix cell, linear min-max mapping
// (extrema map to 0 and 255 exactly; constant matrices map to 0).
void write_pgm(const std::filesystem::path& path,
               const std::vector<std::vector<double>>& m);

} // namespace deowave::io
