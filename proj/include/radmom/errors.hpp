// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace radmom {

/// Thrown when an estimator receives input on which the quantity is
/// mathematically undefined (zero autocorrelation, zero power, empty
/// spectrum). Distinct from precondition violations, which throw
/// std::invalid_argument.
class DegenerateInput : public std::runtime_error {
public:
    explicit DegenerateInput(const std::string& what) : std::runtime_error(what) {}
};

/// File-format error with the 1-based line number where parsing failed.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, long line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

}  // namespace radmom
