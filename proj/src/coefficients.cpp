#include "qmit/coefficients.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qmit/errors.hpp"

namespace qmit {

namespace {

constexpr double kPi = std::numbers::pi;

void check_positive(double v, const char* name) {
    if (!(v > 0)) throw ValidationError(std::string("optical: ") + name + " must be > 0");
}

double singular_guard(double denom, double epsilon, const char* which) {
    if (std::abs(denom) <= epsilon)
        throw SingularDetuningError(std::string("detuning sits on the ") + which +
                                    " resonance pole");
    return denom;
}

}  // namespace

OpticalParams OpticalParams::for_f4_branch(double detuning_hz, const PhysicalConstants& pc) {
    if (!(detuning_hz < 0))
        throw ValidationError("optical: F=4 branch detunings are quoted negative "
                              "(blue of F=4 -> F'=5)");
    OpticalParams o;
    o.detuning_hz = detuning_hz;
    o.wavelength_m = pc.d2_wavelength_m;
    o.linewidth_rad_per_s = pc.d2_linewidth_rad_per_s;
    o.split_35_hz = pc.split_35_hz;
    o.split_45_hz = pc.split_45_hz;
    o.split_23_hz = pc.split_23_hz;
    o.split_24_hz = pc.split_24_hz;
    return o;
}

OpticalParams OpticalParams::for_f3_branch(double detuning_hz, const PhysicalConstants& pc) {
    if (!(detuning_hz > 0))
        throw ValidationError("optical: F=3 branch detunings are quoted positive "
                              "(relative to F=3 -> F'=2)");
    OpticalParams o = for_f4_branch(-1.0, pc);
    o.detuning_hz = detuning_hz;
    return o;
}

void OpticalParams::validate() const {
    if (detuning_hz == 0) throw ValidationError("optical: detuning_hz must be nonzero");
    check_positive(wavelength_m, "wavelength_m");
    check_positive(linewidth_rad_per_s, "linewidth_rad_per_s");
    check_positive(beam_area_m2, "beam_area_m2");
    if (photon_flux_per_s < 0) throw ValidationError("optical: photon_flux_per_s must be >= 0");
    for (double s : {split_35_hz, split_45_hz, split_23_hz, split_24_hz})
        if (!(s > 0)) throw ValidationError("optical: hyperfine splittings must be > 0");
}

double StroboscopicParams::eta() const { return duty_eta(duty_cycle); }

double StroboscopicParams::back_action_fraction() const { return duty_ban_fraction(duty_cycle); }

void StroboscopicParams::validate() const {
    if (!(duty_cycle >= 0 && duty_cycle <= 1))
        throw ValidationError("stroboscopic: duty_cycle must be in [0, 1]");
    if (!(train_duration_s > 0))
        throw ValidationError("stroboscopic: train_duration_s must be > 0");
    if (!(kappa_sq >= 0)) throw ValidationError("stroboscopic: kappa_sq must be >= 0");
}

void NoiseBudget::validate() const {
    if (sn < 0 || pn < 0 || ban < 0 || en < 0)
        throw ValidationError("budget: components must be >= 0");
    if (std::abs(total - (sn + pn + ban + en)) > 1e-12 * std::max(1.0, std::abs(total)))
        throw ValidationError("budget: total does not equal the component sum");
}

double sinc(double x) {
    const double ax = std::abs(x);
    if (ax < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

double duty_eta(double duty_cycle) { return 1.0 + sinc(kPi * duty_cycle); }

double duty_ban_fraction(double duty_cycle) {
    const double s = sinc(kPi * duty_cycle);
    return (1.0 - s) / (1.0 + s);
}

double vector_polarizability_f4(const OpticalParams& optical, double epsilon) {
    const double d = optical.detuning_hz;
    if (d == 0) throw SingularDetuningError("detuning must be nonzero");
    const double t35 = singular_guard(1.0 - optical.split_35_hz / d, epsilon, "F'=3");
    const double t45 = singular_guard(1.0 - optical.split_45_hz / d, epsilon, "F'=4");
    return (-35.0 / t35 - 21.0 / t45 + 176.0) / 120.0;
}

double vector_polarizability_f3(const OpticalParams& optical, double epsilon) {
    const double d = optical.detuning_hz;
    if (d == 0) throw SingularDetuningError("detuning must be nonzero");
    const double t24 = singular_guard(1.0 + optical.split_24_hz / d, epsilon, "F'=4");
    const double t23 = singular_guard(1.0 + optical.split_23_hz / d, epsilon, "F'=3");
    return (45.0 / t24 - 21.0 / t23 - 80.0) / 56.0;
}

double f3_pn_suppression_ratio(const OpticalParams& f4_optical, const OpticalParams& f3_optical,
                               double epsilon) {
    const double a4 = vector_polarizability_f4(f4_optical, epsilon) / f4_optical.detuning_hz;
    const double a3 = vector_polarizability_f3(f3_optical, epsilon) / f3_optical.detuning_hz;
    return (a4 * a4) / (a3 * a3);
}

double faraday_beta(const OpticalParams& optical, double a1) {
    const double detuning_rad_per_s = 2.0 * kPi * optical.detuning_hz;
    return -(optical.linewidth_rad_per_s / (8.0 * optical.beam_area_m2 * detuning_rad_per_s)) *
           (optical.wavelength_m * optical.wavelength_m / (2.0 * kPi)) * a1;
}

double kappa_squared(const OpticalParams& optical, const StroboscopicParams& strobo, double jx) {
    optical.validate();
    if (!(strobo.duty_cycle >= 0 && strobo.duty_cycle <= 1))
        throw ValidationError("stroboscopic: duty_cycle must be in [0, 1]");
    if (!(strobo.train_duration_s > 0))
        throw ValidationError("stroboscopic: train_duration_s must be > 0");
    if (!(jx > 0)) throw ValidationError("kappa_squared: jx must be > 0");
    const double beta = faraday_beta(optical, vector_polarizability_f4(optical));
    return 0.25 * beta * beta * jx * optical.photon_flux_per_s * strobo.train_duration_s *
           duty_eta(strobo.duty_cycle);
}

NoiseBudget stroboscopic_noise_budget(const StroboscopicParams& strobo, double sn_scale,
                                      double en) {
    strobo.validate();
    if (!(sn_scale > 0)) throw ValidationError("budget: sn_scale must be > 0");
    if (en < 0) throw ValidationError("budget: en must be >= 0");
    const double eta = strobo.eta();
    const double c = strobo.back_action_fraction();
    const double k2 = strobo.kappa_sq;
    return NoiseBudget::make(sn_scale * eta, sn_scale * eta * k2,
                             sn_scale * eta * (k2 * k2 / 3.0) * c, en);
}

namespace {

// Inverse SNR of the continuous measurement, up to a constant.
double continuous_inv_snr(double kappa) {
    const double k2 = kappa * kappa;
    return std::sqrt(1.0 + k2 / 2.0 + k2 * k2 / 12.0) / kappa;
}

double golden_section_min(double lo, double hi, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = continuous_inv_snr(c), fd = continuous_inv_snr(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = continuous_inv_snr(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = continuous_inv_snr(d);
        }
    }
    return (a + b) / 2.0;
}

}  // namespace

SqlOptimum sql_optimum() {
    SqlOptimum out;
    out.kappa_opt = std::pow(12.0, 0.25);
    const double k2 = out.kappa_opt * out.kappa_opt;
    out.variance_ratio = 2.0 * (1.0 + k2 / 2.0 + k2 * k2 / 12.0) / k2;
    out.std_ratio = std::sqrt(out.variance_ratio);
    // Coarse grid pass to bracket, then golden-section refine.
    double best = 0.5, best_f = continuous_inv_snr(0.5);
    for (double k = 0.05; k <= 5.0; k += 0.05) {
        const double f = continuous_inv_snr(k);
        if (f < best_f) {
            best = k;
            best_f = f;
        }
    }
    out.numerical_kappa_opt = golden_section_min(std::max(0.01, best - 0.1),
                                                 std::min(5.0, best + 0.1), 1e-9);
    return out;
}

double sensitivity(const StroboscopicParams& strobo, double xi2) {
    if (!(strobo.kappa_sq > 0))
        throw ValidationError("sensitivity: kappa must be nonzero");
    if (!(xi2 > 0 && xi2 <= 1))
        throw ValidationError("sensitivity: xi2 must be in (0, 1]");
    const double kt2 = strobo.kappa_tilde_sq();
    return std::sqrt(1.0 + xi2 * kt2 / 2.0) / std::sqrt(kt2);
}

double sensitivity_improvement(double pn_over_sn, double xi2) {
    if (!(pn_over_sn > 0)) throw ValidationError("sensitivity: pn_over_sn must be > 0");
    if (!(xi2 > 0)) throw ValidationError("sensitivity: xi2 must be > 0");
    return std::sqrt((1.0 + xi2 * pn_over_sn) / (1.0 + pn_over_sn));
}

}  // namespace qmit
