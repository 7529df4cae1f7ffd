#ifndef ANISOEM_TENSORS_HPP
#define ANISOEM_TENSORS_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "anisoem/constants.hpp"

namespace anisoem {

/// The four constitutive tensors of a non-dispersive bi-anisotropic medium,
/// SI units:
///   D = eps1 E + eps2 B        eps1 [F/m],       eps2 [S]
///   H = mu1  E + mu2  B        mu1  [S],         mu2  [1/(H/m)]
/// Note mu2 relates B to H, i.e. vacuum has mu2 = (1/mu0) I.
struct ConstitutiveTensors {
    Eigen::Matrix3d eps1 = Eigen::Matrix3d::Zero();
    Eigen::Matrix3d eps2 = Eigen::Matrix3d::Zero();
    Eigen::Matrix3d mu1 = Eigen::Matrix3d::Zero();
    Eigen::Matrix3d mu2 = Eigen::Matrix3d::Zero();
    PhysicalConstants constants;

    static ConstitutiveTensors vacuum(const PhysicalConstants& k = {});

    /// Isotropic magnetodielectric: eps1 = eps_r*eps0*I, mu2 = I/(mu_r*mu0).
    static ConstitutiveTensors isotropic(double eps_r, double mu_r = 1.0,
                                         const PhysicalConstants& k = {});

    /// Diagonal relative permittivity (optics convention: n_i^2 = eps_i).
    static ConstitutiveTensors diagonal_dielectric(double ex, double ey, double ez,
                                                   const PhysicalConstants& k = {});

    bool magnetoelectric_coupling_is_zero(double rel_tol = 1e-14) const;
};

struct ConstraintViolation {
    std::string constraint;  // which relation failed
    double deviation;        // worst absolute deviation (or |lambda_min| for PD)
};

struct ValidationReport {
    std::vector<ConstraintViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks the symmetry relations eps1 = eps1^T, mu2 = mu2^T,
/// eps2 = -mu1^T and positive definiteness of eps1 and mu2.
/// A relation is violated when its absolute deviation exceeds tol times the
/// scale of the tensors involved. Non-finite entries raise PhysicsError.
ValidationReport validate_onsager(const ConstitutiveTensors& t, double tol = 1e-12);

/// Principal square root of a symmetric positive-definite matrix:
/// the unique SPD C with C*C = eps1. Throws PhysicsError if eps1 is not
/// symmetric positive definite.
Eigen::Matrix3d factor_epsilon(const Eigen::Matrix3d& eps1);

}  // namespace anisoem

#endif
