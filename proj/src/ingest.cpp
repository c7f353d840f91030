// SPDX-License-Identifier: Apache-2.0
#include "radmom/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "radmom/errors.hpp"

namespace radmom {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

double parse_double(const std::string& text, const char* what, long lineno) {
    const std::string t = trim(text);
    double value = 0.0;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw ParseError(std::string("malformed ") + what + " '" + t + "'", lineno);
    return value;
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Splits "key = value"; returns false if there is no '='.
bool split_header(const std::string& body, std::string& key, std::string& value) {
    const auto eq = body.find('=');
    if (eq == std::string::npos) return false;
    key = trim(body.substr(0, eq));
    value = trim(body.substr(eq + 1));
    return !key.empty();
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string() + " for reading");
    return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    return out;
}

const char* kind_name(SpectrumKind k) {
    return k == SpectrumKind::DftPeriodogram ? "dft_periodogram" : "rft_order";
}

}  // namespace

IqSeries read_iq(std::istream& in) {
    IqSeries series;
    bool have_wavelength = false, have_prt = false;
    std::string line;
    long lineno = 0;

    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t[0] == '#') {
            std::string key, value;
            if (!split_header(trim(t.substr(1)), key, value)) continue;  // plain comment
            key = lower(key);
            if (key == "wavelength_m") {
                series.params.wavelength_m = parse_double(value, "wavelength_m", lineno);
                have_wavelength = true;
            } else if (key == "prt_s") {
                series.params.prt_s = parse_double(value, "prt_s", lineno);
                have_prt = true;
            } else if (key == "noise_power") {
                series.params.noise_power = parse_double(value, "noise_power", lineno);
            } else {
                series.metadata.emplace_back(key, value);
            }
            continue;
        }
        // data row: index,i,q
        std::istringstream row(t);
        std::string idx, re, im;
        if (!std::getline(row, idx, ',') || !std::getline(row, re, ',') ||
            !std::getline(row, im))
            throw ParseError("expected 'index,i,q' row", lineno);
        parse_double(idx, "index", lineno);
        series.samples.emplace_back(parse_double(re, "i value", lineno),
                                    parse_double(im, "q value", lineno));
    }

    if (!have_wavelength) throw ParseError("missing mandatory header key 'wavelength_m'", lineno);
    if (!have_prt) throw ParseError("missing mandatory header key 'prt_s'", lineno);
    if (!(series.params.wavelength_m > 0.0))
        throw ParseError("wavelength_m must be positive", lineno);
    if (!(series.params.prt_s > 0.0)) throw ParseError("prt_s must be positive", lineno);
    if (series.params.noise_power < 0.0)
        throw ParseError("noise_power must be nonnegative", lineno);
    if (series.samples.size() < 2) throw ParseError("need at least 2 records", lineno);
    return series;
}

IqSeries read_iq(const std::filesystem::path& path) {
    auto in = open_in(path);
    try {
        return read_iq(in);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what(), e.line());
    }
}

void write_iq(const IqSeries& series, std::ostream& out) {
    out << "# wavelength_m = " << fmt_double(series.params.wavelength_m) << "\n";
    out << "# prt_s = " << fmt_double(series.params.prt_s) << "\n";
    out << "# noise_power = " << fmt_double(series.params.noise_power) << "\n";
    for (const auto& [key, value] : series.metadata)
        out << "# " << lower(key) << " = " << value << "\n";
    for (std::size_t i = 0; i < series.samples.size(); ++i)
        out << i << ',' << fmt_double(series.samples[i].real()) << ','
            << fmt_double(series.samples[i].imag()) << "\n";
}

void write_iq(const IqSeries& series, const std::filesystem::path& path) {
    auto out = open_out(path);
    write_iq(series, out);
}

void write_moments(std::span<const MomentsRecord> records, std::ostream& out) {
    out << "method,power,velocity_mps,width_mps,elapsed_ms\n";
    for (const auto& r : records)
        out << method_name(r.moments.method) << ',' << fmt_double(r.moments.power) << ','
            << fmt_double(r.moments.mean_velocity_mps) << ','
            << fmt_double(r.moments.width_mps) << ',' << fmt_double(r.elapsed_ms) << "\n";
}

void write_moments(std::span<const MomentsRecord> records,
                   const std::filesystem::path& path) {
    auto out = open_out(path);
    write_moments(records, out);
}

void write_spectrum(const Spectrum& spectrum, std::ostream& out) {
    out << "# kind = " << kind_name(spectrum.kind) << "\n";
    out << "frequency_hz,density\n";
    for (const auto& b : spectrum.bins)
        out << fmt_double(b.frequency_hz) << ',' << fmt_double(b.density) << "\n";
}

void write_spectrum(const Spectrum& spectrum, const std::filesystem::path& path) {
    auto out = open_out(path);
    write_spectrum(spectrum, out);
}

Spectrum read_spectrum(std::istream& in) {
    Spectrum s;
    std::string line;
    long lineno = 0;
    bool have_kind = false;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t[0] == '#') {
            std::string key, value;
            if (split_header(trim(t.substr(1)), key, value) && lower(key) == "kind") {
                value = lower(value);
                if (value == "dft_periodogram") s.kind = SpectrumKind::DftPeriodogram;
                else if (value == "rft_order") s.kind = SpectrumKind::RftOrder;
                else throw ParseError("unknown spectrum kind '" + value + "'", lineno);
                have_kind = true;
            }
            continue;
        }
        if (t == "frequency_hz,density") continue;  // column header
        std::istringstream row(t);
        std::string f, d;
        if (!std::getline(row, f, ',') || !std::getline(row, d))
            throw ParseError("expected 'frequency_hz,density' row", lineno);
        SpectrumBin bin;
        bin.frequency_hz = parse_double(f, "frequency", lineno);
        bin.density = parse_double(d, "density", lineno);
        if (bin.density < 0.0) throw ParseError("density must be nonnegative", lineno);
        s.bins.push_back(bin);
    }
    if (!have_kind) throw ParseError("missing '# kind = ...' header", lineno);
    return s;
}

Spectrum read_spectrum(const std::filesystem::path& path) {
    auto in = open_in(path);
    try {
        return read_spectrum(in);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what(), e.line());
    }
}

}  // namespace radmom
