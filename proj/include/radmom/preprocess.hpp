// SPDX-License-Identifier: Apache-2.0
//
// Clutter/noise rejection applied to I/Q series before estimation.
#pragma once

#include <complex>
#include <filesystem>
#include <string>
#include <vector>

#include "radmom/moments.hpp"

namespace radmom {

/// One second-order IIR section, normalized so a0 = 1.
struct BiquadSection {
    double b0 = 1.0, b1 = 0.0, b2 = 0.0;
    double a1 = 0.0, a2 = 0.0;

    /// Poles strictly inside the unit circle: |a2| < 1 and |a1| < 1 + a2.
    bool stable() const;
};

/// Cascade of biquad sections with real coefficients.
struct FilterSpec {
    std::vector<BiquadSection> sections;
    std::string description;

    /// Throws std::invalid_argument if empty, non-finite, or unstable.
    void validate() const;
};

/// Complex gain of the cascade at normalized frequency nu in cycles per
/// sample (nu = 0 is DC, nu = 0.5 the Nyquist frequency).
std::complex<double> frequency_response(const FilterSpec& spec, double nu);

/// Cascaded direct-form-II-transposed filtering of the complex samples
/// (real coefficients, zero initial conditions). Output length equals
/// input length; params and metadata are carried through.
IqSeries apply_filter(const IqSeries& z, const FilterSpec& spec);

/// Subtracts the complex mean from every sample.
IqSeries remove_dc(const IqSeries& z);

/// Shipped ground-clutter notch: 4th-order elliptic high-pass
/// (cutoff 0.04 x Nyquist, 0.5 dB passband ripple, 70 dB stopband) as two
/// biquad sections. Identical to data/clutter_default.filt.
FilterSpec default_clutter_filter();

/// Plain-text spec format: one line per section with five coefficients
/// b0 b1 b2 a1 a2, '#' starts a comment. Leading comment lines become the
/// description.
FilterSpec read_filter_spec(const std::filesystem::path& path);

}  // namespace radmom
