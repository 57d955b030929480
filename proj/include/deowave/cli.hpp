// Command implementations behind the `deowave` executable.  They are plain
// functions so tests can drive the exact code paths the binary runs.
// Exit-code contract: 0 success / all-pass, 1 validation failure, 2 I/O or
// parse error.
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "deowave/checks.hpp"
#include "deowave/cwt.hpp"
#include "deowave/synth.hpp"

namespace deowave::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_validation = 1;
inline constexpr int exit_io = 2;

// Environment variable naming the default output directory (used when an
// output path is relative and has no directory component).
inline constexpr const char* out_dir_env = "DEOWAVE_OUT_DIR";

std::filesystem::path resolve_output(const std::filesystem::path& p);

struct WaveletCmd {
    double alpha = 1.0 / 3.0;
    double t_min = -12.0;
    double t_max = 12.0;
    std::size_t n = 1024;
    std::filesystem::path output = "wavelet.csv";
};
int cmd_wavelet(const WaveletCmd& cfg, std::ostream& log);

struct SpectrumCmd {
    double alpha = 1.0 / 3.0;
    std::string kind = "psi"; // p | phi | s | psi | h
    double w_min = -4.0 * pi;
    double w_max = 4.0 * pi;
    std::size_t n = 4097;
    std::filesystem::path output = "spectrum.csv";
};
int cmd_spectrum(const SpectrumCmd& cfg, std::ostream& log);

struct CheckCmd {
    std::optional<double> alpha;
    double tolerance_scale = 1.0;
    std::vector<std::string> expect_fail; // substrings of check names
    std::optional<std::filesystem::path> vsb_csv;
};
int cmd_check(const CheckCmd& cfg, std::ostream& log);

struct SynthCmd {
    SynthConfig synth;
    std::filesystem::path output = "synth.csv";
};
int cmd_synth(const SynthCmd& cfg, std::ostream& log);

struct CwtCmd {
    double alpha = 1.0 / 3.0;
    std::filesystem::path input;
    std::filesystem::path output = "scalogram.csv";
    double scale_min = 1.0;
    double scale_step = 0.5;
    double scale_max = 2.0;
    std::string format = "csv"; // csv | pgm | both
    bool conjugate = true;
    unsigned threads = 1;
    std::optional<std::filesystem::path> wavelet_table;
};
int cmd_cwt(const CwtCmd& cfg, std::ostream& log);

} // namespace deowave::cli
