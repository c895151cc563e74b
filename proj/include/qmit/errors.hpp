#pragma once

#include <stdexcept>
#include <string>

namespace qmit {

// Invalid parameters / malformed configuration. CLI exit code 1.
struct ValidationError : std::invalid_argument {
    explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Detuning too close to a pole of the polarizability formulas.
struct SingularDetuningError : ValidationError {
    explicit SingularDetuningError(const std::string& msg) : ValidationError(msg) {}
};

// Statistical analysis failed on the given data (fit divergence,
// degenerate inputs, nonpositive projection noise, ...). CLI exit code 2.
struct EstimationError : std::runtime_error {
    explicit EstimationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct FitError : EstimationError {
    explicit FitError(const std::string& msg) : EstimationError(msg) {}
};

// Archive / file-format problems (version mismatch, checksum failure,
// unreadable path). CLI exit code 3.
struct ArchiveError : std::runtime_error {
    explicit ArchiveError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qmit
