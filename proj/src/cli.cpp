#include "deowave/cli.hpp"

#include <cstdlib>
#include <functional>
#include <iomanip>
#include <ostream>

#include "deowave/io.hpp"

namespace deowave::cli {

std::filesystem::path resolve_output(const std::filesystem::path& p) {
    if (p.is_absolute() || p.has_parent_path())
        return p;
    if (const char* dir = std::getenv(out_dir_env); dir && *dir)
        return std::filesystem::path(dir) / p;
    return p;
}

namespace {

int io_guard(std::ostream& log, const std::function<int()>& body) {
    try {
        return body();
    } catch (const io::ParseError& e) {
        log << "error: " << e.what() << " (line " << e.line << ")\n";
        return exit_io;
    } catch (const std::invalid_argument& e) {
        log << "error: " << e.what() << '\n';
        return exit_validation;
    } catch (const std::exception& e) {
        log << "error: " << e.what() << '\n';
        return exit_io;
    }
}

} // namespace

int cmd_wavelet(const WaveletCmd& cfg, std::ostream& log) {
    return io_guard(log, [&] {
        if (cfg.n < 2 || !(cfg.t_max > cfg.t_min)) {
            log << "error: need n >= 2 and t_max > t_min\n";
            return exit_validation;
        }
        const RollOff r(cfg.alpha);
        r.require_orthogonal();
        const double dt = (cfg.t_max - cfg.t_min) / static_cast<double>(cfg.n - 1);
        const auto table = tabulate(r, cfg.t_min, dt, cfg.n);
        const auto path = resolve_output(cfg.output);
        io::write_wavelet_csv(path, table);
        log << "wrote " << path.string() << " (" << cfg.n << " samples, alpha="
            << cfg.alpha << ")\n";
        return exit_ok;
    });
}

int cmd_spectrum(const SpectrumCmd& cfg, std::ostream& log) {
    return io_guard(log, [&] {
        if (cfg.n < 2 || !(cfg.w_max > cfg.w_min)) {
            log << "error: need n >= 2 and w_max > w_min\n";
            return exit_validation;
        }
        const RollOff r(cfg.alpha);
        SpectralGrid g(cfg.w_min,
                       (cfg.w_max - cfg.w_min) / static_cast<double>(cfg.n - 1), cfg.n);
        for (std::size_t i = 0; i < g.size(); ++i) {
            const double w = g.w_at(i);
            if (cfg.kind == "p")
                g.values[i] = raised_cosine(w, r);
            else if (cfg.kind == "phi")
                g.values[i] = sqrt_raised_cosine(w, r);
            else if (cfg.kind == "s")
                g.values[i] = shaping_pulse(w, r);
            else if (cfg.kind == "psi")
                g.values[i] = wavelet_spectrum(w, r);
            else if (cfg.kind == "h")
                g.values[i] = refinement_filter(w, r);
            else {
                log << "error: unknown spectrum kind '" << cfg.kind << "'\n";
                return exit_validation;
            }
        }
        const auto path = resolve_output(cfg.output);
        io::write_spectrum_csv(path, g);
        log << "wrote " << path.string() << " (" << cfg.kind << ", alpha=" << cfg.alpha
            << ")\n";
        return exit_ok;
    });
}

int cmd_check(const CheckCmd& cfg, std::ostream& log) {
    return io_guard(log, [&] {
        CheckOptions opt;
        opt.alpha = cfg.alpha;
        opt.tolerance_scale = cfg.tolerance_scale;
        SpectrumFn candidate;
        io::TabulatedSpectrum table;
        if (cfg.vsb_csv) {
            table = io::read_vsb_csv(*cfg.vsb_csv);
            candidate = [&table](double w) { return table(w); };
            opt.vsb_candidate = &candidate;
        }

        const auto results = run_checks(opt);
        bool all_ok = true;
        auto expected = [&](const std::string& name) {
            for (const auto& pat : cfg.expect_fail)
                if (name.find(pat) != std::string::npos)
                    return true;
            return false;
        };
        for (const auto& res : results) {
            const bool exp_fail = expected(res.name);
            const bool ok = exp_fail ? !res.pass : res.pass;
            all_ok = all_ok && ok;
            log << res.name << " residual=" << std::scientific << std::setprecision(3)
                << res.residual << " tol=" << res.tolerance << ' '
                << (res.pass ? "PASS" : "FAIL");
            if (exp_fail)
                log << (ok ? " (expected failure)" : " (expected a failure!)");
            log << '\n';
        }
        log.flush();
        return all_ok ? exit_ok : exit_validation;
    });
}

int cmd_synth(const SynthCmd& cfg, std::ostream& log) {
    return io_guard(log, [&] {
        const auto signal = synth_signal(cfg.synth);
        const auto path = resolve_output(cfg.output);
        io::write_signal_csv(path, signal);
        log << "wrote " << path.string() << " (" << signal.size() << " samples";
        if (cfg.synth.fault)
            log << ", transient onset at sample " << cfg.synth.onset_index;
        log << ")\n";
        return exit_ok;
    });
}

int cmd_cwt(const CwtCmd& cfg, std::ostream& log) {
    return io_guard(log, [&] {
        if (cfg.format != "csv" && cfg.format != "pgm" && cfg.format != "both") {
            log << "error: unknown format '" << cfg.format << "'\n";
            return exit_validation;
        }
        const auto signal = io::read_signal_csv(cfg.input);
        const auto scales = ScaleList::range(cfg.scale_min, cfg.scale_step, cfg.scale_max);
        const ShiftGrid shifts(signal.t_start, signal.dt, signal.size());
        CwtOptions opt;
        opt.conjugate = cfg.conjugate;
        opt.threads = cfg.threads;

        Scalogram sg = [&] {
            if (cfg.wavelet_table) {
                const auto table =
                    io::read_wavelet_csv(*cfg.wavelet_table, RollOff(cfg.alpha));
                return cwt_tabulated(signal, table, scales, shifts, opt);
            }
            return cwt(signal, RollOff(cfg.alpha), scales, shifts, opt);
        }();

        const auto path = resolve_output(cfg.output);
        if (cfg.format == "csv" || cfg.format == "both")
            io::write_scalogram_csv(path, sg);
        if (cfg.format == "pgm" || cfg.format == "both") {
            const auto [mod, phase] = modulus_phase(sg);
            auto stem = path;
            stem.replace_extension();
            io::write_pgm(stem.string() + "_mod.pgm", mod);
            io::write_pgm(stem.string() + "_phase.pgm", phase);
        }
        log << "wrote scalogram (" << scales.size() << " scales x " << shifts.n
            << " shifts) to " << path.string() << '\n';
        return exit_ok;
    });
}

} // namespace deowave::cli
