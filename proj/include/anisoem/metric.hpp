#ifndef ANISOEM_METRIC_HPP
#define ANISOEM_METRIC_HPP

#include <Eigen/Dense>

#include "anisoem/tensors.hpp"

namespace anisoem {

/// Spacetime metric in Cartesian coordinates with time scaled by c, index 0
/// temporal, signature (-,+,+,+). The opposite signature is rejected, not
/// converted: the medium map divides by g00 and a silent sign flip would
/// corrupt the magnetoelectric tensors.
struct SpacetimeMetric {
    Eigen::Matrix4d g;

    static SpacetimeMetric minkowski();

    /// Throws PhysicsError unless g is symmetric, g00 < 0 and det(g) < 0.
    void validate(double tol = 1e-12) const;
};

/// Maps a metric to the equivalent flat-space bi-anisotropic medium.
/// The dimensionless (geometrized) tensors are scaled into SI:
/// eps-type by eps0, the B->H tensor by 1/mu0, and the magnetoelectric
/// pair by sqrt(eps0/mu0), so Minkowski maps exactly to the vacuum medium.
/// Throws PhysicsError for a singular metric or singular spatial block.
ConstitutiveTensors metric_to_constitutive(const SpacetimeMetric& m,
                                           const PhysicalConstants& k = {});

}  // namespace anisoem

#endif
