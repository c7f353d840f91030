// SPDX-License-Identifier: Apache-2.0
#include "radmom/preprocess.hpp"

#include <cmath>
#include <complex>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "radmom/errors.hpp"

namespace radmom {

bool BiquadSection::stable() const {
    return std::abs(a2) < 1.0 && std::abs(a1) < 1.0 + a2;
}

void FilterSpec::validate() const {
    if (sections.empty()) throw std::invalid_argument("FilterSpec: no sections");
    for (const auto& s : sections) {
        for (double c : {s.b0, s.b1, s.b2, s.a1, s.a2})
            if (!std::isfinite(c))
                throw std::invalid_argument("FilterSpec: non-finite coefficient");
        if (!s.stable()) throw std::invalid_argument("FilterSpec: unstable section");
    }
}

std::complex<double> frequency_response(const FilterSpec& spec, double nu) {
    const std::complex<double> zinv = std::polar(1.0, -2.0 * std::numbers::pi * nu);
    const std::complex<double> zinv2 = zinv * zinv;
    std::complex<double> h = 1.0;
    for (const auto& s : spec.sections)
        h *= (s.b0 + s.b1 * zinv + s.b2 * zinv2) / (1.0 + s.a1 * zinv + s.a2 * zinv2);
    return h;
}

IqSeries apply_filter(const IqSeries& z, const FilterSpec& spec) {
    if (z.samples.empty()) throw std::invalid_argument("apply_filter: empty series");
    spec.validate();

    IqSeries out = z;
    for (const auto& sec : spec.sections) {
        // direct form II transposed, zero initial conditions
        std::complex<double> s1 = 0.0, s2 = 0.0;
        for (auto& x : out.samples) {
            const std::complex<double> y = sec.b0 * x + s1;
            s1 = sec.b1 * x - sec.a1 * y + s2;
            s2 = sec.b2 * x - sec.a2 * y;
            x = y;
        }
    }
    return out;
}

IqSeries remove_dc(const IqSeries& z) {
    if (z.samples.empty()) throw std::invalid_argument("remove_dc: empty series");
    std::complex<double> mean = 0.0;
    for (const auto& v : z.samples) mean += v;
    mean /= static_cast<double>(z.samples.size());
    IqSeries out = z;
    for (auto& v : out.samples) v -= mean;
    return out;
}

FilterSpec default_clutter_filter() {
    // ellip(4, 0.5, 70, 0.04, 'highpass'), SOS form; see data/clutter_default.filt
    FilterSpec spec;
    spec.description = "elliptic high-pass, order 4, cutoff 0.04 x Nyquist, "
                       "0.5 dB passband ripple, 70 dB stopband";
    spec.sections.push_back({0.7981629963728243, -1.5961713341497643, 0.7981629963728245,
                             -1.7118053230160915, 0.7486616071288918});
    spec.sections.push_back({1.0, -1.998903791477195, 1.0,
                             -1.9466468906695842, 0.9611932961786216});
    return spec;
}

FilterSpec read_filter_spec(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_filter_spec: cannot open " + path.string());

    FilterSpec spec;
    std::string line;
    long lineno = 0;
    bool leading_comments = true;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        std::string comment;
        if (hash != std::string::npos) {
            comment = line.substr(hash + 1);
            line = line.substr(0, hash);
        }
        const bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
        if (blank) {
            if (leading_comments && !comment.empty()) {
                if (!spec.description.empty()) spec.description += '\n';
                const auto start = comment.find_first_not_of(' ');
                spec.description += start == std::string::npos ? "" : comment.substr(start);
            }
            continue;
        }
        leading_comments = false;
        std::istringstream row(line);
        BiquadSection s;
        if (!(row >> s.b0 >> s.b1 >> s.b2 >> s.a1 >> s.a2))
            throw ParseError("read_filter_spec: expected five coefficients", lineno);
        double extra;
        if (row >> extra)
            throw ParseError("read_filter_spec: more than five coefficients", lineno);
        spec.sections.push_back(s);
    }
    spec.validate();
    return spec;
}

}  // namespace radmom
