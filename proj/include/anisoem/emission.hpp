#ifndef ANISOEM_EMISSION_HPP
#define ANISOEM_EMISSION_HPP

#include <Eigen/Dense>
#include <vector>

#include "anisoem/localfield.hpp"

namespace anisoem {

/// Two-level atom at the cavity center. d = 0 is allowed and yields a zero
/// decay rate.
struct TwoLevelAtom {
    double omega0;      // rad/s, > 0
    Eigen::Vector3d d;  // C m, full dipole matrix element

    TwoLevelAtom(double omega0_, const Eigen::Vector3d& d_);
};

struct BranchContribution {
    int rho;
    int lambda;
    double gamma;  // 1/s, >= 0
};

/// Amplitude decay constant: |c(t)| ~ e^{-gamma t}. The excited-state
/// population decays at 2*gamma (Einstein A convention).
struct DecayResult {
    double gamma = 0.0;
    double gamma_over_free_space = 0.0;
    std::vector<BranchContribution> contributions;
    double quad_error_estimate = 0.0;  // |gamma(n) - gamma(n/2)| / gamma
    bool converged = true;
    bool long_wavelength_ok = true;
};

/// Radius of the isofrequency surface along qhat for a nonzero branch:
/// q0 = omega0 / v_rho(qhat), so omega_rho(q0 qhat) = omega0.
double isofrequency_radius(const DispersionBranch& branch, double omega0);

/// Closed-form free-space amplitude decay rate
/// gamma0 = omega0^3 |d|^2 / (6 pi eps0 hbar c^3).
double free_space_rate(const TwoLevelAtom& atom, const PhysicalConstants& k = {});

/// Golden-rule decay rate of the atom at the cavity center:
///   gamma = (pi / 2 hbar) sum_{rho,lambda} int dOmega_qhat
///           [q0^2(qhat)/v_rho(qhat)] * omega0 * |d . F(rho,lambda,q0 qhat, 0)|^2
/// which is the radial-delta reduction of the full d^3q integral (the delta
/// is resolved analytically through the degree-1 homogeneity of the roots,
/// never by numerical broadening). F(0) is the cavity-corrected amplitude
/// from mode_at_origin; the correction system is computed once at omega0
/// (it depends on the surface point only through omega). Branch sum runs
/// over nonzero branches only.
DecayResult decay_rate(const TwoLevelAtom& atom, const CavityConfig& cavity,
                       const QuadratureSpec& spec);

}  // namespace anisoem

#endif
