#ifndef ANISOEM_PROJECTION_HPP
#define ANISOEM_PROJECTION_HPP

#include <Eigen/Dense>
#include <complex>
#include <utility>

#include "anisoem/tensors.hpp"

namespace anisoem {

/// One Fourier component of a vector field.
struct FourierField {
    Eigen::Vector3d q;   // rad/m, must be nonzero for all operations below
    Eigen::Vector3cd F;  // complex amplitude
};

/// Fourier transform of the generalized Poisson Green function:
/// Ghat(q) = 1 / (q^T eps1 q). Real, positive, even in q.
/// Throws PhysicsError at q = 0 (the decomposition is undefined there;
/// limits are deliberately not taken).
double green_scalar_fourier(const Eigen::Vector3d& q, const Eigen::Matrix3d& eps1);

/// The eps1-weighted longitudinal/transverse projector pair at one q:
///   (P_par)_ij  = q_i (eps1 q)_j / (q^T eps1 q)
///   (P_perp)_ij = delta_ij - (P_par)_ij
/// Both are idempotent, complementary, q^T eps1 P_perp = 0 and P_perp q = 0.
struct ProjectorPair {
    Eigen::Matrix3d par;
    Eigen::Matrix3d perp;
};

ProjectorPair projector_pair(const Eigen::Vector3d& q, const Eigen::Matrix3d& eps1);

/// Splits F into (F_par, F_perp): F_par parallel to q (conservative part),
/// F_perp with q^T eps1 F_perp = 0 (the eps1-transverse gauge sector).
std::pair<Eigen::Vector3cd, Eigen::Vector3cd> decompose(const FourierField& field,
                                                        const Eigen::Matrix3d& eps1);

/// Adjoint-projector image P_perp^T F: plainly divergence-free, q.result = 0.
Eigen::Vector3cd transverse_of_covector(const FourierField& field,
                                        const Eigen::Matrix3d& eps1);

}  // namespace anisoem

#endif
