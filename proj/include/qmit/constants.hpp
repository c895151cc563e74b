#pragma once

#include <string>

namespace qmit {

// Cesium D2 data used by the coupling-constant formulas. All values SI.
// The excited-state hyperfine intervals follow the usual level ordering:
// split_35 is the F'=3..F'=5 interval of the D2 manifold, split_45 the
// F'=4..F'=5 interval (both referenced from the F=4 ground state), while
// split_23 / split_24 are the F'=2..F'=3 and F'=2..F'=4 intervals used by
// the F=3 branch. Callers may override any entry, or load a table from a
// versioned key-value file.
struct PhysicalConstants {
    int version = 1;
    double d2_wavelength_m = 852.34727582e-9;
    double d2_linewidth_rad_per_s = 2.0 * 3.14159265358979323846 * 5.2227e6;
    double split_35_hz = 452.24e6;
    double split_45_hz = 251.00e6;
    double split_23_hz = 151.21e6;
    double split_24_hz = 352.45e6;
    double ground_hyperfine_hz = 9.192631770e9;

    static const PhysicalConstants& defaults();

    // Parses "key = value" lines; '#' starts a comment. The file must carry
    // a "version" entry. Unknown keys are rejected.
    static PhysicalConstants load(const std::string& path);

    void validate() const;
};

// Detuning of the same laser from the F=3 -> F'=2 reference, given its
// detuning from the F=4 -> F'=5 reference. The two references are separated
// by the ground-state hyperfine splitting minus the F'=2..F'=5 span.
double f3_detuning_from_f4(double f4_detuning_hz,
                           const PhysicalConstants& pc = PhysicalConstants::defaults());

}  // namespace qmit
