#include "qmit/constants.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "qmit/errors.hpp"

namespace qmit {

const PhysicalConstants& PhysicalConstants::defaults() {
    static const PhysicalConstants pc{};
    return pc;
}

void PhysicalConstants::validate() const {
    if (version < 1) throw ValidationError("constants: version must be >= 1");
    if (!(d2_wavelength_m > 0)) throw ValidationError("constants: d2_wavelength_m must be > 0");
    if (!(d2_linewidth_rad_per_s > 0))
        throw ValidationError("constants: d2_linewidth_rad_per_s must be > 0");
    for (double s : {split_35_hz, split_45_hz, split_23_hz, split_24_hz, ground_hyperfine_hz}) {
        if (!(s > 0)) throw ValidationError("constants: hyperfine splittings must be > 0");
    }
}

PhysicalConstants PhysicalConstants::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ArchiveError("constants: cannot open '" + path + "'");
    PhysicalConstants pc;
    bool saw_version = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string key, eq;
        if (!(ls >> key)) continue;  // blank line
        if (!(ls >> eq) || eq != "=")
            throw ValidationError("constants: expected 'key = value' at line " +
                                  std::to_string(lineno));
        double value = 0;
        if (!(ls >> value))
            throw ValidationError("constants: bad value for '" + key + "' at line " +
                                  std::to_string(lineno));
        if (key == "version") {
            pc.version = static_cast<int>(value);
            saw_version = true;
        } else if (key == "d2_wavelength_m") {
            pc.d2_wavelength_m = value;
        } else if (key == "d2_linewidth_rad_per_s") {
            pc.d2_linewidth_rad_per_s = value;
        } else if (key == "split_35_hz") {
            pc.split_35_hz = value;
        } else if (key == "split_45_hz") {
            pc.split_45_hz = value;
        } else if (key == "split_23_hz") {
            pc.split_23_hz = value;
        } else if (key == "split_24_hz") {
            pc.split_24_hz = value;
        } else if (key == "ground_hyperfine_hz") {
            pc.ground_hyperfine_hz = value;
        } else {
            throw ValidationError("constants: unknown key '" + key + "'");
        }
    }
    if (!saw_version) throw ValidationError("constants: missing 'version' entry");
    pc.validate();
    return pc;
}

double f3_detuning_from_f4(double f4_detuning_hz, const PhysicalConstants& pc) {
    const double excited_span = pc.split_23_hz + pc.split_35_hz;  // F'=2 .. F'=5
    return f4_detuning_hz + pc.ground_hyperfine_hz - excited_span;
}

}  // namespace qmit
