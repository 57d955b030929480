#include "deowave/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace deowave::io {

namespace {

// Shortest decimal that round-trips; deterministic across runs.
std::string fmt(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open for writing: " + path.string());
    return f;
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open for reading: " + path.string());
    return f;
}

std::vector<double> parse_row(const std::string& line, std::size_t lineno) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        const std::size_t comma = std::min(line.find(',', pos), line.size());
        const char* first = line.data() + pos;
        const char* last = line.data() + comma;
        while (first < last && (*first == ' ' || *first == '\t'))
            ++first;
        double v = 0.0;
        const auto res = std::from_chars(first, last, v);
        if (res.ec != std::errc{} || res.ptr != last)
            throw ParseError("malformed numeric field", lineno);
        out.push_back(v);
        if (comma == line.size())
            break;
        pos = comma + 1;
    }
    return out;
}

std::string read_line(std::istream& in) {
    std::string line;
    std::getline(in, line);
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    return line;
}

} // namespace

void write_signal_csv(const std::filesystem::path& path, const SampledSignal& s) {
    auto f = open_out(path);
    f << (s.complex_valued ? "t,re,im\n" : "t,value\n");
    for (std::size_t k = 0; k < s.size(); ++k) {
        f << fmt(s.t_at(k)) << ',' << fmt(s.samples[k].real());
        if (s.complex_valued)
            f << ',' << fmt(s.samples[k].imag());
        f << '\n';
    }
}

SampledSignal read_signal_csv(const std::filesystem::path& path) {
    auto f = open_in(path);
    std::size_t lineno = 1;
    const std::string header = read_line(f);
    bool complex_vals;
    if (header == "t,value")
        complex_vals = false;
    else if (header == "t,re,im")
        complex_vals = true;
    else
        throw ParseError("expected header 't,value' or 't,re,im'", lineno);

    std::vector<double> ts;
    std::vector<std::complex<double>> vals;
    std::string line;
    while (std::getline(f, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        const auto row = parse_row(line, lineno);
        if (row.size() != (complex_vals ? 3u : 2u))
            throw ParseError("wrong number of columns", lineno);
        ts.push_back(row[0]);
        vals.emplace_back(row[1], complex_vals ? row[2] : 0.0);
    }
    if (ts.empty())
        throw ParseError("no samples", lineno);
    double dt = 1.0;
    if (ts.size() > 1) {
        dt = (ts.back() - ts.front()) / static_cast<double>(ts.size() - 1);
        if (!(dt > 0.0))
            throw ParseError("time column must increase", lineno);
        for (std::size_t k = 1; k < ts.size(); ++k)
            if (std::abs(ts[k] - ts[0] - dt * static_cast<double>(k)) > 1e-6 * dt * ts.size())
                throw ParseError("non-uniform time grid", k + 2);
    }
    SampledSignal out(ts.front(), dt, vals.size(), complex_vals);
    out.samples = std::move(vals);
    return out;
}

void write_wavelet_csv(const std::filesystem::path& path, const WaveletTable& t) {
    SampledSignal s = t.grid;
    s.complex_valued = true;
    write_signal_csv(path, s);
}

WaveletTable read_wavelet_csv(const std::filesystem::path& path, const RollOff& alpha) {
    SampledSignal s = read_signal_csv(path);
    if (!s.complex_valued)
        throw std::runtime_error("wavelet table must have 't,re,im' columns: " +
                                 path.string());
    return WaveletTable{alpha, std::move(s)};
}

void write_scalogram_csv(const std::filesystem::path& path, const Scalogram& s) {
    auto f = open_out(path);
    f << "a,b,re,im,valid\n";
    for (std::size_t i = 0; i < s.scales.size(); ++i) {
        const std::string a = fmt(s.scales.scales[i]);
        for (std::size_t j = 0; j < s.n_shifts; ++j) {
            f << a << ',' << fmt(s.b_at(j)) << ',' << fmt(s.coeffs[i][j].real()) << ','
              << fmt(s.coeffs[i][j].imag()) << ',' << int(s.valid[i][j]) << '\n';
        }
    }
}

void write_spectrum_csv(const std::filesystem::path& path, const SpectralGrid& g) {
    auto f = open_out(path);
    f << "w,re,im\n";
    for (std::size_t i = 0; i < g.size(); ++i)
        f << fmt(g.w_at(i)) << ',' << fmt(g.values[i].real()) << ','
          << fmt(g.values[i].imag()) << '\n';
}

double TabulatedSpectrum::operator()(double at) const {
    if (w.empty() || at < w.front() || at > w.back())
        return 0.0;
    const auto it = std::upper_bound(w.begin(), w.end(), at);
    if (it == w.begin())
        return p.front();
    if (it == w.end())
        return p.back();
    const auto i = static_cast<std::size_t>(it - w.begin());
    const double frac = (at - w[i - 1]) / (w[i] - w[i - 1]);
    return p[i - 1] * (1.0 - frac) + p[i] * frac;
}

TabulatedSpectrum read_vsb_csv(const std::filesystem::path& path) {
    auto f = open_in(path);
    std::size_t lineno = 1;
    const std::string header = read_line(f);
    if (header != "w,P" && header != "w,p")
        throw ParseError("expected header 'w,P'", lineno);
    TabulatedSpectrum t;
    std::string line;
    while (std::getline(f, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        const auto row = parse_row(line, lineno);
        if (row.size() != 2)
            throw ParseError("expected two columns", lineno);
        if (!t.w.empty() && row[0] <= t.w.back())
            throw ParseError("w column must be strictly increasing", lineno);
        t.w.push_back(row[0]);
        t.p.push_back(row[1]);
    }
    if (t.w.size() < 2)
        throw ParseError("need at least two samples", lineno);
    return t;
}

void write_pgm(const std::filesystem::path& path,
               const std::vector<std::vector<double>>& m) {
    if (m.empty() || m.front().empty())
        throw std::invalid_argument("write_pgm: empty matrix");
    const std::size_t h = m.size(), w = m.front().size();
    double lo = m[0][0], hi = m[0][0];
    for (const auto& row : m) {
        if (row.size() != w)
            throw std::invalid_argument("write_pgm: ragged matrix");
        for (double v : row) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    auto f = open_out(path);
    f << "P5\n" << w << ' ' << h << "\n255\n";
    const double span = hi - lo;
    for (const auto& row : m)
        for (double v : row) {
            const double x = span > 0.0 ? (v - lo) / span : 0.0;
            const int g = std::clamp(static_cast<int>(std::lround(x * 255.0)), 0, 255);
            f.put(static_cast<char>(g));
        }
}

} // namespace deowave::io
