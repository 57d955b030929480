// deowave: tabulation, invariant checks, synthetic transients and the
// continuous wavelet transform for the raised-cosine orthogonal wavelet
// family.
#include <iostream>

#include <CLI11.hpp>

#include "deowave/cli.hpp"

using namespace deowave;

int main(int argc, char** argv) {
    CLI::App app{
        "Orthogonal raised-cosine (Nyquist) wavelet toolkit.\n"
        "Shipped roll-off defaults: 0, 1/15, 2/15, 1/4, 4/15, 1/3 (the source\n"
        "article announces five defaults but lists these six; all six are kept).\n"
        "Set " + std::string(cli::out_dir_env) +
            " to redirect bare output filenames to a directory."};
    app.require_subcommand(1);

    cli::WaveletCmd wcfg;
    auto* wavelet = app.add_subcommand("wavelet", "Tabulate the complex wavelet to CSV");
    wavelet->add_option("--alpha", wcfg.alpha, "Roll-off in [0, 1/3]")->capture_default_str();
    wavelet->add_option("--range", [&wcfg](const std::vector<std::string>& v) {
        wcfg.t_min = std::stod(v.at(0));
        wcfg.t_max = std::stod(v.at(1));
        return true;
    }, "Time range t_min t_max (default -12 12)")->expected(2);
    wavelet->add_option("--n", wcfg.n, "Sample count")->capture_default_str();
    wavelet->add_option("-o,--output", wcfg.output, "Output CSV")->capture_default_str();

    cli::SpectrumCmd scfg;
    auto* spectrum = app.add_subcommand("spectrum", "Tabulate a spectrum to CSV");
    spectrum->add_option("--alpha", scfg.alpha, "Roll-off")->capture_default_str();
    spectrum->add_option("--kind", scfg.kind,
                         "p (raised cosine), phi, s (shaping), psi, h (filter)")
        ->capture_default_str();
    spectrum->add_option("--range", [&scfg](const std::vector<std::string>& v) {
        scfg.w_min = std::stod(v.at(0));
        scfg.w_max = std::stod(v.at(1));
        return true;
    }, "Frequency range w_min w_max (default -4pi 4pi)")->expected(2);
    spectrum->add_option("--n", scfg.n, "Sample count")->capture_default_str();
    spectrum->add_option("-o,--output", scfg.output, "Output CSV")->capture_default_str();

    cli::CheckCmd ccfg;
    double check_alpha = -1.0;
    auto* check = app.add_subcommand("check", "Run the invariant check suite");
    check->add_option("--alpha", check_alpha,
                      "Check a single roll-off instead of the default list");
    check->add_option("--tolerance-scale", ccfg.tolerance_scale,
                      "Multiply every tolerance by this factor")
        ->capture_default_str();
    check->add_option("--expect-fail", ccfg.expect_fail,
                      "Name substring of checks that are expected to fail");
    std::string vsb_path;
    check->add_option("--vsb", vsb_path, "Candidate spectrum CSV (w,P) for MRA admission");

    cli::SynthCmd ycfg;
    auto* synth = app.add_subcommand("synth", "Generate the synthetic transient signal");
    synth->add_option("--cycles", ycfg.synth.cycles, "Fundamental cycles")->capture_default_str();
    synth->add_option("--samples-per-cycle", ycfg.synth.samples_per_cycle, "Samples per cycle")
        ->capture_default_str();
    auto* nofault = synth->add_flag("--no-fault", "Pure sinusoid, no transient");
    synth->add_option("--onset", ycfg.synth.onset_index, "Transient onset sample")
        ->capture_default_str();
    synth->add_option("--amplitude", ycfg.synth.burst_amplitude, "Burst amplitude")
        ->capture_default_str();
    synth->add_option("--decay", ycfg.synth.burst_decay_samples, "Burst decay (samples)")
        ->capture_default_str();
    synth->add_option("--burst-freq", ycfg.synth.burst_frequency,
                      "Burst carrier (rad per time unit)")
        ->capture_default_str();
    synth->add_option("--noise", ycfg.synth.noise_sigma, "Gaussian noise sigma")
        ->capture_default_str();
    synth->add_option("--seed", ycfg.synth.seed, "Noise seed")->capture_default_str();
    synth->add_option("-o,--output", ycfg.output, "Output CSV")->capture_default_str();

    cli::CwtCmd xcfg;
    auto* cwt = app.add_subcommand("cwt", "Continuous wavelet transform of a signal CSV");
    cwt->add_option("input", xcfg.input, "Signal CSV (t,value or t,re,im)")->required();
    cwt->add_option("--alpha", xcfg.alpha, "Roll-off in [0, 1/3]")->capture_default_str();
    cwt->add_option("--scale-min", xcfg.scale_min, "Smallest scale")->capture_default_str();
    cwt->add_option("--scale-step", xcfg.scale_step, "Scale step")->capture_default_str();
    cwt->add_option("--scale-max", xcfg.scale_max, "Largest scale")->capture_default_str();
    cwt->add_option("--format", xcfg.format, "csv | pgm | both")->capture_default_str();
    auto* unconj = cwt->add_flag("--unconjugated",
                                 "Use the literal (unconjugated) transform kernel");
    cwt->add_option("--threads", xcfg.threads, "Worker count (output is identical for any)")
        ->capture_default_str();
    std::string table_path;
    cwt->add_option("--wavelet-table", table_path,
                    "Analyze with a tabulated wavelet (t,re,im CSV) instead of closed forms");
    cwt->add_option("-o,--output", xcfg.output, "Output CSV")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    if (wavelet->parsed())
        return cli::cmd_wavelet(wcfg, std::cout);
    if (spectrum->parsed())
        return cli::cmd_spectrum(scfg, std::cout);
    if (check->parsed()) {
        if (check_alpha >= 0.0)
            ccfg.alpha = check_alpha;
        if (!vsb_path.empty())
            ccfg.vsb_csv = vsb_path;
        return cli::cmd_check(ccfg, std::cout);
    }
    if (synth->parsed()) {
        ycfg.synth.fault = !*nofault;
        return cli::cmd_synth(ycfg, std::cout);
    }
    if (cwt->parsed()) {
        xcfg.conjugate = !*unconj;
        if (!table_path.empty())
            xcfg.wavelet_table = table_path;
        return cli::cmd_cwt(xcfg, std::cout);
    }
    return cli::exit_validation;
}
