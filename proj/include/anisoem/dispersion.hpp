#ifndef ANISOEM_DISPERSION_HPP
#define ANISOEM_DISPERSION_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "anisoem/tensors.hpp"

namespace anisoem {

/// Direction + magnitude form of a wavevector. The direction must be unit
/// norm to 1e-14 (the constructor checks, it does not renormalize).
struct WaveVector {
    Eigen::Vector3d qhat;
    double magnitude;  // rad/m, >= 0

    WaveVector(const Eigen::Vector3d& qhat_, double magnitude_);
    Eigen::Vector3d q() const { return magnitude * qhat; }
};

/// One root of det[Lambda(q) - omega^2 eps1] = 0 together with its
/// eps1-orthonormal polarization eigenvectors. Branches are indexed by rho in
/// ascending omega with the longitudinal zero mode always at rho = 0.
/// Degenerate roots are merged into a single branch (lambda_count > 1).
///
/// omega is the root at the |q| the solve was performed at (stored in
/// q_magnitude); roots are degree-1 homogeneous in |q|, so
/// omega(s|q|) = s*omega(|q|).
struct DispersionBranch {
    int rho = 0;
    double omega = 0.0;        // rad/s at |q| = q_magnitude
    double q_magnitude = 1.0;  // rad/m
    int lambda_count = 0;
    std::vector<Eigen::Vector3cd> X;  // eps1-orthonormal: X_a^dag eps1 X_b = delta_ab
    bool is_longitudinal_zero_mode = false;
};

/// Lambda_ij(q, mu2) = -levi(i,a,b) levi(r,s,j) mu2_br q_a q_s,
/// equivalently -[q]_x mu2 [q]_x. Symmetric when mu2 is, and Lambda q = 0.
Eigen::Matrix3d lambda_matrix(const Eigen::Vector3d& q, const Eigen::Matrix3d& mu2);

/// All roots of the bulk dispersion determinant at q = magnitude*qhat as a
/// generalized symmetric-definite eigenproblem, solved in the symmetrized
/// form C^-1 Lambda C^-1 with C the principal square root of eps1.
/// Exactly one zero root (flagged); nonzero roots are real positive.
/// Within a degenerate branch the eigenvectors are eps1-Gram-Schmidt
/// orthonormalized in a deterministic order (sorted by the index of each
/// vector's largest component, descending; largest component made positive).
/// Requires eps2 = mu1 = 0 and eps1, mu2 SPD; throws PhysicsError otherwise.
std::vector<DispersionBranch> solve_branches(const WaveVector& q,
                                             const ConstitutiveTensors& t);

/// Phase speed v_rho(qhat) = omega_rho/|q| (m/s). Throws PhysicsError for the
/// longitudinal zero branch, where no propagation speed is defined.
double phase_speed(const DispersionBranch& branch);

/// Delta-normalized plane-wave mode: F(r) = amplitude * exp(i q.r) with
/// amplitude = X / ((2*pi)^{3/2} sqrt(X^dag eps1 X)). The (2*pi)^{-3/2}
/// factor makes the continuum orthonormality come out as
/// delta_rr' delta_ll' delta^3(q - q').
struct PlaneWaveMode {
    Eigen::Vector3d q;           // rad/m
    double omega;                // rad/s
    Eigen::Vector3cd amplitude;  // field units
};

/// Builds the mode for polarization index `lambda` of a nonzero branch at the
/// branch's wavevector.
PlaneWaveMode make_mode(const DispersionBranch& branch, int lambda,
                        const Eigen::Vector3d& qhat, const Eigen::Matrix3d& eps1);

/// Relative residuals of the four source-free Maxwell equations for a plane
/// wave E = i omega F e^{i(q.r - omega t)}, B = i q x F e^{...} in a medium
/// with eps2 = mu1 = 0. Each residual is normalized by its own equation's
/// scale (|q||B|, |q||E| + omega|B|, |q||eps1 E|, |q||H| + omega|D|).
struct MaxwellResiduals {
    double div_b;     // q . B
    double faraday;   // q x E - omega B
    double div_d;     // q . (eps1 E)
    double ampere;    // q x (mu2 B) + omega eps1 E  (time convention e^{-iwt})
    double max_relative() const;
};

MaxwellResiduals maxwell_residual(const PlaneWaveMode& mode, const ConstitutiveTensors& t);

}  // namespace anisoem

#endif
