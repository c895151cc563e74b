#pragma once

#include "qmit/constants.hpp"

namespace qmit {

// Probe-light description. Detunings are signed and quoted relative to the
// reference transition of the branch they describe: the F=4 branch measures
// from F=4 -> F'=5 (negative for the operating point used here), the F=3
// branch from F=3 -> F'=2 (positive). The named constructors enforce the
// sign convention; aggregate initialization stays available for odd cases.
struct OpticalParams {
    double detuning_hz = 0;
    double wavelength_m = 0;
    double linewidth_rad_per_s = 0;
    double beam_area_m2 = 0;
    double photon_flux_per_s = 0;
    double split_35_hz = 0;
    double split_45_hz = 0;
    double split_23_hz = 0;
    double split_24_hz = 0;

    static OpticalParams for_f4_branch(double detuning_hz,
                                       const PhysicalConstants& pc = PhysicalConstants::defaults());
    static OpticalParams for_f3_branch(double detuning_hz,
                                       const PhysicalConstants& pc = PhysicalConstants::defaults());

    void validate() const;
};

// Stroboscopic pulse-train description. kappa_sq is the squeezing-strength
// parameter of the whole train (duration train_duration_s at duty cycle
// duty_cycle); it already carries the eta(D) pulse-shape factor. The
// alternative parameterization kappa_tilde_sq = 2 kappa_sq is provided as an
// accessor so both forms of the noise formula can be used interchangeably.
struct StroboscopicParams {
    double duty_cycle = 0;
    double train_duration_s = 0;
    double kappa_sq = 0;

    double kappa_tilde_sq() const { return 2.0 * kappa_sq; }
    double eta() const;
    double back_action_fraction() const;  // C(D)
    double coupling_rate_per_s() const { return kappa_sq / train_duration_s; }

    void validate() const;
};

// Quadrature noise decomposition in shot-noise units.
struct NoiseBudget {
    double sn = 0;
    double pn = 0;
    double ban = 0;
    double en = 0;
    double total = 0;

    static NoiseBudget make(double sn, double pn, double ban, double en) {
        return NoiseBudget{sn, pn, ban, en, sn + pn + ban + en};
    }
    void validate() const;
};

// Unnormalized sinc with the removable singularity handled explicitly.
double sinc(double x);

// Pulse-shape overlap factor eta(D) = 1 + sinc(pi D) and the back-action
// survival fraction C(D) = (1 - sinc(pi D)) / (1 + sinc(pi D)).
double duty_eta(double duty_cycle);
double duty_ban_fraction(double duty_cycle);

// Ground-state vector polarizabilities of the cesium D2 line. Throws
// SingularDetuningError when a denominator is within epsilon (relative to
// |detuning|) of zero.
double vector_polarizability_f4(const OpticalParams& optical, double epsilon = 1e-6);
double vector_polarizability_f3(const OpticalParams& optical, double epsilon = 1e-6);

// Ratio of projection-noise contributions (a1/Delta)^2 between atoms in F=4
// and atoms in F=3 probed by the same laser. The caller supplies detunings
// that refer to the same physical laser frequency (see f3_detuning_from_f4).
double f3_pn_suppression_ratio(const OpticalParams& f4_optical, const OpticalParams& f3_optical,
                               double epsilon = 1e-6);

// Faraday coupling beta = -Gamma/(8 A Delta) * lambda^2/(2 pi) * a1 with the
// detuning converted to angular frequency so the Gamma/Delta ratio is
// unit-consistent.
double faraday_beta(const OpticalParams& optical, double a1);

// kappa^2 = 1/4 beta^2 J_x Phi tau [1 + sinc(pi D)] for a train of duration
// strobo.train_duration_s. jx is the macroscopic spin F N_A p.
double kappa_squared(const OpticalParams& optical, const StroboscopicParams& strobo, double jx);

// Budget of the demodulated cosine quadrature over one pulse train:
//   Var = sn_scale * eta * [1 + kappa^2 + kappa^4/3 C(D)] + en.
NoiseBudget stroboscopic_noise_budget(const StroboscopicParams& strobo, double sn_scale,
                                      double en);

// Continuous-probing standard quantum limit. The analytic optimum sits at
// kappa^4 = 12 where the total noise variance is 1 + 2/sqrt(3) times the
// projection noise; numerical_kappa_opt is the golden-section minimizer of
// sqrt(1 + k^2/2 + k^4/12)/k over (0, 5] and must agree with the analytic
// value.
struct SqlOptimum {
    double kappa_opt;
    double variance_ratio;
    double std_ratio;
    double numerical_kappa_opt;
};
SqlOptimum sql_optimum();

// Relative eddy-current sensitivity sqrt(1 + xi^2 kappa_tilde^2 / 2) /
// kappa_tilde; xi2 = 1 recovers the unsqueezed expression.
double sensitivity(const StroboscopicParams& strobo, double xi2);

// Ratio of squeezed to unsqueezed sensitivity at a given PN/SN ratio:
// sqrt((1 + xi^2 r)/(1 + r)).
double sensitivity_improvement(double pn_over_sn, double xi2);

}  // namespace qmit
