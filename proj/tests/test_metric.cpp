#include <gtest/gtest.h>

#include <random>

#include "anisoem/dispersion.hpp"
#include "anisoem/errors.hpp"
#include "anisoem/metric.hpp"
#include "oracles.hpp"

using namespace anisoem;

TEST(MetricMap, MinkowskiGivesVacuumExactly) {
    const PhysicalConstants k;
    const auto t = metric_to_constitutive(SpacetimeMetric::minkowski(), k);
    const auto vac = ConstitutiveTensors::vacuum(k);
    EXPECT_EQ((t.eps1 - vac.eps1).cwiseAbs().maxCoeff(), 0.0);
    EXPECT_EQ((t.mu2 - vac.mu2).cwiseAbs().maxCoeff(), 0.0);
    EXPECT_EQ(t.eps2.cwiseAbs().maxCoeff(), 0.0);
    EXPECT_EQ(t.mu1.cwiseAbs().maxCoeff(), 0.0);
}

TEST(MetricMap, SchwarzschildIsotropicCoordinates) {
    // ds^2 = -f^2 dt^2 + h^2 (dx^2+dy^2+dz^2); the equivalent medium is the
    // isotropic index n = h/f: eps1 = eps0 n I, mu2 = (1/mu0)(1/n) I.
    const double rs = 0.3, r = 2.0;  // isotropic-coordinate radius, units of rs/2 folds in
    const double f = (1.0 - rs / (4.0 * r)) / (1.0 + rs / (4.0 * r));
    const double h = std::pow(1.0 + rs / (4.0 * r), 2);
    SpacetimeMetric m;
    m.g = Eigen::Vector4d(-f * f, h * h, h * h, h * h).asDiagonal();

    const PhysicalConstants k;
    const auto t = metric_to_constitutive(m, k);
    const double n = h / f;
    EXPECT_LT((t.eps1 - k.eps0 * n * Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff(),
              1e-14 * k.eps0 * n);
    EXPECT_LT((t.mu2 - (1.0 / (k.mu0 * n)) * Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff(),
              1e-14 / k.mu0);

    // independent evaluation of the full component formulas
    const auto rel = oracles::metric_map_bruteforce(m.g);
    EXPECT_LT((t.eps1 / k.eps0 - rel.eps1).cwiseAbs().maxCoeff(), 1e-13 * n);
    EXPECT_LT((t.mu2 * k.mu0 - rel.mu2).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(MetricMap, RotatingFrameCouplesElectricAndMagnetic) {
    // small angular velocity about z: g_{0i} != 0
    const double w = 0.05, x = 0.3, y = -0.2;
    SpacetimeMetric m;
    m.g.setIdentity();
    m.g(0, 0) = -(1.0 - w * w * (x * x + y * y));
    m.g(0, 1) = m.g(1, 0) = -w * y;
    m.g(0, 2) = m.g(2, 0) = w * x;

    const auto t = metric_to_constitutive(m);
    EXPECT_GT(t.eps2.cwiseAbs().maxCoeff(), 0.0);
    EXPECT_LT((t.eps2 + t.mu1.transpose()).cwiseAbs().maxCoeff(),
              1e-12 * t.eps2.cwiseAbs().maxCoeff());
    EXPECT_TRUE(validate_onsager(t).ok());

    // brute-force index evaluation of all four component formulas
    const auto rel = oracles::metric_map_bruteforce(m.g);
    const PhysicalConstants k;
    const double z = std::sqrt(k.eps0 / k.mu0);
    EXPECT_LT((t.eps1 / k.eps0 - rel.eps1).cwiseAbs().maxCoeff(), 1e-13);
    EXPECT_LT((t.eps2 / z - rel.eps2).cwiseAbs().maxCoeff(), 1e-13);
    EXPECT_LT((t.mu1 / z - rel.mu1).cwiseAbs().maxCoeff(), 1e-13);
    EXPECT_LT((t.mu2 * k.mu0 - rel.mu2).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(MetricMap, RandomAdmMetricsPassOnsager) {
    std::mt19937 rng{2024};
    for (int trial = 0; trial < 1000; ++trial) {
        SpacetimeMetric m;
        m.g = oracles::random_adm_metric(rng);
        ASSERT_NO_THROW(m.validate());
        const auto t = metric_to_constitutive(m);
        const auto report = validate_onsager(t, 1e-12);
        EXPECT_TRUE(report.ok()) << "trial " << trial << " violated "
                                 << (report.ok() ? "" : report.violations.front().constraint);
    }
}

TEST(MetricMap, MinkowskiDispersionIsLightCone) {
    const auto t = metric_to_constitutive(SpacetimeMetric::minkowski());
    const Eigen::Vector3d qhat = Eigen::Vector3d(1.0, 2.0, -0.5).normalized();
    const auto branches = solve_branches(WaveVector(qhat, 1.0), t);
    const double c = t.constants.c;
    for (const auto& br : branches) {
        if (br.is_longitudinal_zero_mode) continue;
        EXPECT_NEAR(br.omega, c, 1e-12 * c);
    }
}

TEST(MetricMap, RejectsBadSignature) {
    SpacetimeMetric m;
    m.g = Eigen::Vector4d(1.0, -1.0, 1.0, 1.0).asDiagonal();  // flipped signature
    EXPECT_THROW(metric_to_constitutive(m), PhysicsError);

    m.g = Eigen::Vector4d(-1.0, 1.0, 1.0, -1.0).asDiagonal();  // det > 0
    EXPECT_THROW(metric_to_constitutive(m), PhysicsError);

    m.g = Eigen::Vector4d(-1.0, 1.0, 1.0, 1.0).asDiagonal();
    m.g(0, 1) = 0.3;  // not symmetric
    EXPECT_THROW(metric_to_constitutive(m), PhysicsError);
}

TEST(MetricMap, SingularMetricRejected) {
    SpacetimeMetric m;
    m.g = Eigen::Vector4d(-1.0, 1.0, 1.0, 0.0).asDiagonal();
    EXPECT_THROW(metric_to_constitutive(m), PhysicsError);
}
