#include "anisoem/metric.hpp"

#include <cmath>

#include "anisoem/errors.hpp"

namespace anisoem {

SpacetimeMetric SpacetimeMetric::minkowski() {
    SpacetimeMetric m;
    m.g = Eigen::Vector4d(-1.0, 1.0, 1.0, 1.0).asDiagonal();
    return m;
}

void SpacetimeMetric::validate(double tol) const {
    if (!g.allFinite()) throw PhysicsError("metric: non-finite entries");
    const double asym = (g - g.transpose()).cwiseAbs().maxCoeff();
    if (asym > tol * std::max(g.cwiseAbs().maxCoeff(), 1e-300))
        throw PhysicsError("metric: g is not symmetric");
    if (!(g(0, 0) < 0.0))
        throw PhysicsError("metric: g00 must be negative (signature -,+,+,+)");
    if (!(g.determinant() < 0.0))
        throw PhysicsError("metric: det(g) must be negative");
}

namespace {

Eigen::Matrix3d cross_matrix(const Eigen::Vector3d& v) {
    Eigen::Matrix3d m;
    m << 0.0, -v.z(), v.y(),
         v.z(), 0.0, -v.x(),
         -v.y(), v.x(), 0.0;
    return m;
}

}  // namespace

ConstitutiveTensors metric_to_constitutive(const SpacetimeMetric& m, const PhysicalConstants& k) {
    m.validate();
    const Eigen::Matrix4d& g = m.g;
    const double det = g.determinant();
    const double sqrt_neg_g = std::sqrt(-det);
    if (!(sqrt_neg_g > 0.0) || !std::isfinite(sqrt_neg_g))
        throw PhysicsError("metric_to_constitutive: singular metric");

    const Eigen::Matrix4d ginv = g.inverse();
    if (!ginv.allFinite()) throw PhysicsError("metric_to_constitutive: singular metric");

    const double g00 = g(0, 0);
    const Eigen::Matrix3d gs = g.block<3, 3>(1, 1);          // spatial g_ij
    const Eigen::Matrix3d ginv_s = ginv.block<3, 3>(1, 1);   // spatial g^ij
    const Eigen::Vector3d b = g.block<3, 1>(1, 0);           // g_{0i}
    const Eigen::Matrix3d bx = cross_matrix(b);

    // Dimensionless tensors of the effective medium:
    //   eps1_ij = -sqrt(-g) g^ij / g00 - levi(i,a,b') levi(m,n,j) g_{0a} g_{0n} g_{b'm} / (g00 sqrt(-g))
    //   eps2_ij = -levi(i,m,n) g_{nj} g_{0m} / sqrt(-g)
    //   mu1_ij  = -levi(m,n,j) g_{0n} g_{im} / sqrt(-g)
    //   mu2_ij  = -g00 g_ij / sqrt(-g)
    // The Levi-Civita contractions collapse to cross-product matrices:
    // the eps1 correction is -[b]x gs [b]x and eps2 = [b]x gs-row pattern.
    ConstitutiveTensors t;
    t.constants = k;

    const Eigen::Matrix3d eps1_rel =
        -(sqrt_neg_g / g00) * ginv_s - (bx * gs * bx) / (g00 * sqrt_neg_g);
    // eps2_ij = -levi(i,m,n) g_{0m} g_{nj}: with ([b]x)_{in} = levi(i,m,n) b_m this
    // is -( [b]x gs )_{ij}; mu1 follows from the transpose pattern.
    const Eigen::Matrix3d eps2_rel = -(bx * gs) / sqrt_neg_g;
    const Eigen::Matrix3d mu1_rel = -(gs * bx) / sqrt_neg_g;
    const Eigen::Matrix3d mu2_rel = -(g00 / sqrt_neg_g) * gs;

    const double z = std::sqrt(k.eps0 / k.mu0);  // admittance scale for eps2/mu1
    t.eps1 = k.eps0 * eps1_rel;
    t.eps2 = z * eps2_rel;
    t.mu1 = z * mu1_rel;
    t.mu2 = (1.0 / k.mu0) * mu2_rel;

    if (std::abs(t.eps1.determinant()) <= 0.0 || std::abs(t.mu2.determinant()) <= 0.0)
        throw PhysicsError("metric_to_constitutive: spatial block maps to singular tensors");
    return t;
}

}  // namespace anisoem
