// SPDX-License-Identifier: Apache-2.0
//
// File formats and readers/writers for I/Q series, spectra, and moment
// results. All formats are plain text: UTF-8, LF line endings, '.' decimal
// separator, lowercase header keys.
#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "radmom/moments.hpp"

namespace radmom {

/// Moments row as written by write_moments, with the wall-clock time the
/// estimate took.
struct MomentsRecord {
    DopplerMoments moments;
    double elapsed_ms = 0.0;
};

/// IQ file: '#'-prefixed `key = value` header lines (wavelength_m and
/// prt_s mandatory and positive, noise_power optional), then one
/// `index,i,q` row per pulse. Unknown header keys are preserved in
/// IqSeries::metadata. Errors carry the offending line number.
IqSeries read_iq(const std::filesystem::path& path);
IqSeries read_iq(std::istream& in);

void write_iq(const IqSeries& series, const std::filesystem::path& path);
void write_iq(const IqSeries& series, std::ostream& out);

/// CSV with header `method,power,velocity_mps,width_mps,elapsed_ms`.
void write_moments(std::span<const MomentsRecord> records,
                   const std::filesystem::path& path);
void write_moments(std::span<const MomentsRecord> records, std::ostream& out);

/// `# kind = ...` header then `frequency_hz,density` rows; an empty
/// spectrum writes the header only.
void write_spectrum(const Spectrum& spectrum, const std::filesystem::path& path);
void write_spectrum(const Spectrum& spectrum, std::ostream& out);

Spectrum read_spectrum(const std::filesystem::path& path);
Spectrum read_spectrum(std::istream& in);

}  // namespace radmom
