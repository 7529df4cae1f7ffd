#ifndef ANISOEM_LOCALFIELD_HPP
#define ANISOEM_LOCALFIELD_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "anisoem/dispersion.hpp"
#include "anisoem/tensors.hpp"

namespace anisoem {

using Matrix3cd = Eigen::Matrix3cd;
using Matrix27cd = Eigen::Matrix<std::complex<double>, 27, 27>;
using Matrix3x27cd = Eigen::Matrix<std::complex<double>, 3, 27>;
using Matrix27x3cd = Eigen::Matrix<std::complex<double>, 27, 3>;

/// Row-major flattening of a 3-index triple used for the rank-4/rank-6
/// correction tensors: (a,b,c) -> 9a + 3b + c.
inline int flat3(int a, int b, int c) { return 9 * a + 3 * b + c; }

/// Quadrature controls shared by the local-field integrals and the
/// isofrequency surface integral.
struct QuadratureSpec {
    int ntheta = 32;          // Gauss-Legendre nodes in cos(theta)
    int nphi = 64;            // uniform nodes in phi
    int nradial = 24;         // Gauss-Legendre nodes per radial panel
    double radial_xmax = 40;  // cutoff (in units of p*R) for the PV remainder
    double eta = 0.0;         // > 0 switches to the brute-force shifted-resolvent path,
                              // in units of omega^2 * eps0 (cross-check oracle)

    void validate() const;  // throws ConfigError on out-of-range values
};

/// Small spherical hole of radius R around the origin: `medium` outside,
/// `hole` inside (vacuum in the standard model, any isotropic medium allowed).
struct CavityConfig {
    double R;  // m, > 0
    ConstitutiveTensors medium;
    ConstitutiveTensors hole;

    void validate() const;
    bool has_contrast(double rel_tol = 1e-14) const;
};

/// The self-consistency tensors of the cavity scattering problem at one
/// frequency. Index layout: Gamma1 (i,m); Delta1 (i; s,a,n) as 3x27;
/// Gamma2 (i,d,g; m) as 27x3; Delta2 (i,d,g; s,a,n) as 27x27; all triples
/// flattened with flat3. Q = Gamma1 - Delta1 Delta2^-1 Gamma2.
struct LocalFieldSystem {
    double omega = 0.0;
    Matrix3cd Gamma1 = Matrix3cd::Identity();
    Matrix3x27cd Delta1 = Matrix3x27cd::Zero();
    Matrix27x3cd Gamma2 = Matrix27x3cd::Zero();
    Matrix27cd Delta2 = Matrix27cd::Identity();
    Matrix27cd Delta2_inv = Matrix27cd::Identity();
    Matrix3cd Q = Matrix3cd::Identity();

    // diagnostics
    double delta2_condition = 1.0;       // 1-norm condition estimate of Delta2
    double truncation_estimate = 0.0;    // relative radial truncation bound
    int angular_nodes = 0;
    int radial_nodes_per_ray = 0;
    bool long_wavelength_ok = true;      // omega*R/v_min <= 0.1
};

/// Resolvent of the shifted bulk operator:
/// [Lambda(p, mu2_medium) - omega^2 eps1_medium - i eta I]^-1, eta > 0.
Matrix3cd resolvent(const Eigen::Vector3d& p, double omega,
                    const ConstitutiveTensors& medium, double eta);

/// Evaluates the four cavity correction integrals
///   int d^3p [sin(|p|R)/|p|^3] (1 or p_d p_g) x resolvent x contrast
/// in the eta -> 0+ limit via Sokhotski-Plemelj splitting: per angular ray, a
/// principal-value radial integral (symmetric-interval subtraction around
/// each dispersion pole) plus i*pi residues at the on-shell roots. The
/// p-independent longitudinal component of the resolvent is integrated in
/// closed form (Dirichlet pi/2 for the sin(pR)/p kernel, Abel value 0 for the
/// p*sin(pR) kernel). With spec.eta > 0 the whole radial integral is instead
/// done by brute force on the complex-shifted resolvent (cross-check path).
///
/// Throws ConvergenceError if Delta2 is too ill-conditioned to invert
/// (condition > 1e12) and PhysicsError for invalid media.
LocalFieldSystem correction_tensors(double omega, const CavityConfig& cavity,
                                    const QuadratureSpec& spec);

/// Cavity-corrected mode amplitude at the origin for polarization `lambda` of
/// a nonzero branch:
///   F(0) = [Q^-1 X - Q^-1 Delta1 Delta2^-1 (X q_d q_g)] / ((2pi)^{3/2} sqrt(X^dag eps X))
/// Reduces to the uncorrected plane-wave amplitude for a trivial system.
/// Throws PhysicsError if Q is numerically singular.
Eigen::Vector3cd mode_at_origin(const DispersionBranch& branch, int lambda,
                                const Eigen::Vector3d& qhat, const CavityConfig& cavity,
                                const LocalFieldSystem& system);

/// Magnitude estimate of the surface-delta scattering term that the
/// long-wavelength model drops, relative to the retained volume term.
/// The dropped term carries kernel sin(pR) - pR cos(pR) against the first
/// derivatives F_{s,n}(0) ~ q F(0); `ratio` ~ q0*R in the validity regime.
struct SurfaceTermDiagnostic {
    double dropped_magnitude;
    double kept_magnitude;
    double ratio;
};

SurfaceTermDiagnostic surface_term_diagnostic(double omega, double q0,
                                              const CavityConfig& cavity,
                                              const QuadratureSpec& spec);

}  // namespace anisoem

#endif
