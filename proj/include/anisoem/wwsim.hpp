#ifndef ANISOEM_WWSIM_HPP
#define ANISOEM_WWSIM_HPP

#include <complex>
#include <vector>

#include "anisoem/emission.hpp"

namespace anisoem {

struct ModeWindow {
    double omega_min;  // rad/s
    double omega_max;  // rad/s, window must straddle the atomic frequency
};

struct DiscreteMode {
    double omega;  // rad/s
    double g;      // rad/s; rotating-frame coupling magnitude with the
                   // d^3q cell weight folded in: g = (w0/hbar) sqrt(hbar/2w) |d.F(0)| sqrt(dV)
};

struct DiscreteModeSet {
    std::vector<DiscreteMode> modes;
    ModeWindow window{0.0, 0.0};
    double omega0 = 0.0;
    double delta_omega = 0.0;  // radial frequency spacing
    int n_omega = 0;
    int n_angular = 0;

    /// pi * sum_{|w_k - w0| <= dw/2} g_k^2 / dw : the discrete golden-rule
    /// rate, which should reproduce the continuum surface integral at w0.
    double golden_rule_rate() const;
};

/// Samples the continuum (rho, lambda, qhat, |q|) on isofrequency shells:
/// a sphere grid (spec.ntheta x spec.nphi) times n_omega uniformly spaced
/// frequencies centered so that omega0 is a node (n_omega is made odd).
/// Uncorrected bulk amplitudes are used (no cavity correction).
/// Throws ConfigError if the window excludes omega0 or counts are < 2.
DiscreteModeSet discretize_modes(const ConstitutiveTensors& medium, const TwoLevelAtom& atom,
                                 const ModeWindow& window, int n_omega,
                                 const QuadratureSpec& spec);

/// Rotating-frame single-excitation state history. c is the excited-state
/// amplitude with the e^{-i omega0 t} factor removed; norm is
/// |c|^2 + sum_k |M_k|^2 at the recorded times. Mode amplitudes are kept only
/// for the final time (trajectories with thousands of modes stay small).
struct EmissionTrajectory {
    std::vector<double> times;                    // s
    std::vector<std::complex<double>> c;
    std::vector<double> norm;
    std::vector<std::complex<double>> M_final;
    double omega0 = 0.0;                          // rotating-frame frequency
    double max_norm_drift = 0.0;                  // max |norm - 1| over the run
};

/// Integrates the coupled linear amplitude equations
///   c'   = sum_k g_k M_k e^{+i(w0 - w_k) t}
///   M_k' = -g_k c e^{-i(w0 - w_k) t}
/// with the implicit-midpoint (Cayley) step, which is exactly
/// norm-preserving for this anti-Hermitian system; the bordered structure
/// (modes couple only to the atom) gives an O(N) solve per step.
/// Requires dt * max|w_k - w0| < 1 (ConvergenceError otherwise); for
/// accuracy keep it below ~0.1.
EmissionTrajectory evolve(const DiscreteModeSet& set, double t_final, double dt,
                          int record_stride = 1);

struct DecayFit {
    double gamma;        // 1/s, amplitude decay constant
    double delta_omega;  // rad/s, fitted lab-frame frequency shift; window and
                         // cutoff dependent, reported as a diagnostic only
    double residual;     // rms residual of the log-magnitude fit
};

/// Least-squares fit of ln|c(t)| (slope -gamma) and the unwrapped phase of
/// the rotating-frame c(t) (slope -delta_omega) over [t_start, t_end].
/// Throws ConvergenceError when |c| underflows 1e-12 inside the window or the
/// window holds fewer than two samples.
DecayFit fit_decay(const EmissionTrajectory& traj, double t_start, double t_end);

}  // namespace anisoem

#endif
