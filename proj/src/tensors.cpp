#include "anisoem/tensors.hpp"

#include <cmath>

#include "anisoem/errors.hpp"

namespace anisoem {

ConstitutiveTensors ConstitutiveTensors::vacuum(const PhysicalConstants& k) {
    return isotropic(1.0, 1.0, k);
}

ConstitutiveTensors ConstitutiveTensors::isotropic(double eps_r, double mu_r,
                                                   const PhysicalConstants& k) {
    if (!(eps_r > 0.0) || !(mu_r > 0.0))
        throw PhysicsError("isotropic medium requires eps_r > 0 and mu_r > 0");
    ConstitutiveTensors t;
    t.constants = k;
    t.eps1 = eps_r * k.eps0 * Eigen::Matrix3d::Identity();
    t.mu2 = (1.0 / (mu_r * k.mu0)) * Eigen::Matrix3d::Identity();
    return t;
}

ConstitutiveTensors ConstitutiveTensors::diagonal_dielectric(double ex, double ey, double ez,
                                                             const PhysicalConstants& k) {
    if (!(ex > 0.0) || !(ey > 0.0) || !(ez > 0.0))
        throw PhysicsError("diagonal dielectric requires positive relative permittivities");
    ConstitutiveTensors t;
    t.constants = k;
    t.eps1 = k.eps0 * Eigen::Vector3d(ex, ey, ez).asDiagonal();
    t.mu2 = (1.0 / k.mu0) * Eigen::Matrix3d::Identity();
    return t;
}

bool ConstitutiveTensors::magnetoelectric_coupling_is_zero(double rel_tol) const {
    const double scale = std::max({eps1.cwiseAbs().maxCoeff() / constants.c,
                                   mu2.cwiseAbs().maxCoeff() / constants.c, 1e-300});
    return eps2.cwiseAbs().maxCoeff() <= rel_tol * scale &&
           mu1.cwiseAbs().maxCoeff() <= rel_tol * scale;
}

namespace {

bool all_finite(const Eigen::Matrix3d& m) { return m.allFinite(); }

double min_symmetric_eigenvalue(const Eigen::Matrix3d& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(0.5 * (m + m.transpose()));
    return es.eigenvalues().minCoeff();
}

}  // namespace

ValidationReport validate_onsager(const ConstitutiveTensors& t, double tol) {
    if (!all_finite(t.eps1) || !all_finite(t.eps2) || !all_finite(t.mu1) || !all_finite(t.mu2))
        throw PhysicsError("validate_onsager: non-finite tensor entries");

    ValidationReport report;
    auto scale_of = [](const Eigen::Matrix3d& a, const Eigen::Matrix3d& b) {
        return std::max(a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff());
    };

    const double eps1_asym = (t.eps1 - t.eps1.transpose()).cwiseAbs().maxCoeff();
    if (eps1_asym > tol * scale_of(t.eps1, t.eps1))
        report.violations.push_back({"eps1 symmetry", eps1_asym});

    const double mu2_asym = (t.mu2 - t.mu2.transpose()).cwiseAbs().maxCoeff();
    if (mu2_asym > tol * scale_of(t.mu2, t.mu2))
        report.violations.push_back({"mu2 symmetry", mu2_asym});

    const double cross = (t.eps2 + t.mu1.transpose()).cwiseAbs().maxCoeff();
    if (cross > tol * std::max(scale_of(t.eps2, t.mu1), 1e-300))
        report.violations.push_back({"eps2 = -mu1^T", cross});

    const double eps1_min = min_symmetric_eigenvalue(t.eps1);
    if (eps1_min <= tol * t.eps1.cwiseAbs().maxCoeff())
        report.violations.push_back({"eps1 positive definite", eps1_min});

    const double mu2_min = min_symmetric_eigenvalue(t.mu2);
    if (mu2_min <= tol * t.mu2.cwiseAbs().maxCoeff())
        report.violations.push_back({"mu2 positive definite", mu2_min});

    return report;
}

Eigen::Matrix3d factor_epsilon(const Eigen::Matrix3d& eps1) {
    if (!eps1.allFinite()) throw PhysicsError("factor_epsilon: non-finite entries");
    const double asym = (eps1 - eps1.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-12 * std::max(eps1.cwiseAbs().maxCoeff(), 1e-300))
        throw PhysicsError("factor_epsilon: eps1 is not symmetric");

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(0.5 * (eps1 + eps1.transpose()));
    if (es.eigenvalues().minCoeff() <= 0.0)
        throw PhysicsError("factor_epsilon: eps1 is not positive definite");

    // Principal root: same eigenvectors, square-rooted spectrum.
    return es.eigenvectors() * es.eigenvalues().cwiseSqrt().asDiagonal() *
           es.eigenvectors().transpose();
}

}  // namespace anisoem
