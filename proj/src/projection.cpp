#include "anisoem/projection.hpp"

#include "anisoem/errors.hpp"

namespace anisoem {

namespace {

double quadratic_form(const Eigen::Vector3d& q, const Eigen::Matrix3d& eps1) {
    if (!q.allFinite()) throw PhysicsError("projection: non-finite wavevector");
    if (q.squaredNorm() == 0.0)
        throw PhysicsError("projection: undefined at q = 0 (no limit convention is taken)");
    const double s = q.dot(eps1 * q);
    if (!(s > 0.0)) throw PhysicsError("projection: q^T eps1 q must be positive (eps1 SPD)");
    return s;
}

}  // namespace

double green_scalar_fourier(const Eigen::Vector3d& q, const Eigen::Matrix3d& eps1) {
    return 1.0 / quadratic_form(q, eps1);
}

ProjectorPair projector_pair(const Eigen::Vector3d& q, const Eigen::Matrix3d& eps1) {
    const double s = quadratic_form(q, eps1);
    ProjectorPair p;
    p.par = q * (eps1 * q).transpose() / s;
    p.perp = Eigen::Matrix3d::Identity() - p.par;
    return p;
}

std::pair<Eigen::Vector3cd, Eigen::Vector3cd> decompose(const FourierField& field,
                                                        const Eigen::Matrix3d& eps1) {
    const ProjectorPair p = projector_pair(field.q, eps1);
    const Eigen::Vector3cd par = p.par.cast<std::complex<double>>() * field.F;
    return {par, field.F - par};
}

Eigen::Vector3cd transverse_of_covector(const FourierField& field, const Eigen::Matrix3d& eps1) {
    const ProjectorPair p = projector_pair(field.q, eps1);
    return p.perp.transpose().cast<std::complex<double>>() * field.F;
}

}  // namespace anisoem
