#include <gtest/gtest.h>

#include <random>

#include "anisoem/errors.hpp"
#include "anisoem/tensors.hpp"
#include "oracles.hpp"

using namespace anisoem;

// --- validate_onsager ---

TEST(Onsager, VacuumPasses) {
    const auto report = validate_onsager(ConstitutiveTensors::vacuum());
    EXPECT_TRUE(report.ok());
}

TEST(Onsager, ConstructedAsymmetryReported) {
    ConstitutiveTensors t = ConstitutiveTensors::vacuum();
    t.eps1(0, 1) = 1.0;
    t.eps1(1, 0) = 0.0;
    const auto report = validate_onsager(t, 1e-12);
    ASSERT_FALSE(report.ok());
    bool found = false;
    for (const auto& v : report.violations)
        if (v.constraint == "eps1 symmetry") {
            found = true;
            EXPECT_NEAR(v.deviation, 1.0, 1e-15);
        }
    EXPECT_TRUE(found);
}

TEST(Onsager, CrossRelationViolation) {
    ConstitutiveTensors t = ConstitutiveTensors::vacuum();
    t.eps2(0, 1) = 2.0;  // mu1 stays zero
    const auto report = validate_onsager(t);
    ASSERT_FALSE(report.ok());
    EXPECT_EQ(report.violations.front().constraint, "eps2 = -mu1^T");
}

TEST(Onsager, NegativeDefiniteEps1Reported) {
    ConstitutiveTensors t = ConstitutiveTensors::vacuum();
    t.eps1(2, 2) = -t.eps1(2, 2);
    const auto report = validate_onsager(t);
    ASSERT_FALSE(report.ok());
    bool found = false;
    for (const auto& v : report.violations)
        if (v.constraint == "eps1 positive definite") found = true;
    EXPECT_TRUE(found);
}

TEST(Onsager, NonFiniteEntriesThrow) {
    ConstitutiveTensors t = ConstitutiveTensors::vacuum();
    t.mu2(1, 1) = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(validate_onsager(t), PhysicsError);
}

TEST(Onsager, ConsistentBianisotropicPairPasses) {
    std::mt19937 rng{7};
    ConstitutiveTensors t = ConstitutiveTensors::vacuum();
    Eigen::Matrix3d c;
    std::normal_distribution<double> gauss(0.0, 1e-3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) c(i, j) = gauss(rng);
    t.eps2 = c;
    t.mu1 = -c.transpose();
    EXPECT_TRUE(validate_onsager(t).ok());
}

// --- factor_epsilon ---

TEST(FactorEpsilon, ScalarCase) {
    const double e0 = PhysicalConstants{}.eps0;
    const Eigen::Matrix3d C = factor_epsilon(e0 * Eigen::Matrix3d::Identity());
    EXPECT_LT((C - std::sqrt(e0) * Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff(), 1e-20);
}

TEST(FactorEpsilon, DiagonalCase) {
    const Eigen::Matrix3d eps = Eigen::Vector3d(4.0, 9.0, 16.0).asDiagonal();
    const Eigen::Matrix3d C = factor_epsilon(eps);
    const Eigen::Matrix3d expect = Eigen::Vector3d(2.0, 3.0, 4.0).asDiagonal();
    EXPECT_LT((C - expect).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(FactorEpsilon, RandomSpdReconstructs) {
    std::mt19937 rng{42};
    for (int trial = 0; trial < 200; ++trial) {
        const Eigen::Matrix3d eps = oracles::random_spd(rng, 1.0, 10.0);
        const Eigen::Matrix3d C = factor_epsilon(eps);
        EXPECT_LT((C - C.transpose()).cwiseAbs().maxCoeff(), 1e-13 * C.cwiseAbs().maxCoeff());
        EXPECT_LT((C * C - eps).cwiseAbs().maxCoeff(), 1e-12 * eps.cwiseAbs().maxCoeff());
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(C);
        EXPECT_GT(es.eigenvalues().minCoeff(), 0.0);
    }
}

TEST(FactorEpsilon, EigenvaluesAreSquareRoots) {
    std::mt19937 rng{3};
    const Eigen::Matrix3d eps = oracles::random_spd(rng, 2.0, 6.0);
    const Eigen::Matrix3d C = factor_epsilon(eps);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> ee(eps), ec(C);
    for (int i = 0; i < 3; ++i)
        EXPECT_NEAR(ec.eigenvalues()(i), std::sqrt(ee.eigenvalues()(i)), 1e-12);
}

TEST(FactorEpsilon, RejectsIndefinite) {
    Eigen::Matrix3d eps = Eigen::Vector3d(1.0, -1.0, 1.0).asDiagonal();
    EXPECT_THROW(factor_epsilon(eps), PhysicsError);
    Eigen::Matrix3d asym = Eigen::Matrix3d::Identity();
    asym(0, 1) = 0.5;
    EXPECT_THROW(factor_epsilon(asym), PhysicsError);
}
