#include "anisoem/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "anisoem/errors.hpp"

namespace anisoem {

namespace {

constexpr double kDegeneracyRelTol = 1e-8;   // |w_a^2 - w_b^2| <= tol*max -> one branch
constexpr double kZeroModeRelTol = 1e-10;    // eigenvalue below this x max -> zero root

Eigen::Matrix3d cross_matrix(const Eigen::Vector3d& v) {
    Eigen::Matrix3d m;
    m << 0.0, -v.z(), v.y(),
         v.z(), 0.0, -v.x(),
         -v.y(), v.x(), 0.0;
    return m;
}

// plain (bilinear) complex cross product; Eigen's cross() conjugates the
// result for complex scalars
Eigen::Vector3cd ccross(const Eigen::Vector3cd& a, const Eigen::Vector3cd& b) {
    return Eigen::Vector3cd(a.y() * b.z() - a.z() * b.y(), a.z() * b.x() - a.x() * b.z(),
                            a.x() * b.y() - a.y() * b.x());
}

void require_mode_sector(const ConstitutiveTensors& t, const char* who) {
    if (!t.magnetoelectric_coupling_is_zero())
        throw PhysicsError(std::string(who) +
                           ": requires eps2 = mu1 = 0 (no magnetoelectric coupling)");
    auto report = validate_onsager(t, 1e-10);
    if (!report.ok())
        throw PhysicsError(std::string(who) + ": tensors violate \"" +
                           report.violations.front().constraint + "\"");
}

/// Deterministic basis inside a degenerate group: order vectors by the index
/// of their largest |component| (descending), eps1-Gram-Schmidt in that
/// order, then fix the phase so the largest component is real positive.
void orthonormalize_group(std::vector<Eigen::Vector3cd>& vecs, const Eigen::Matrix3d& eps1) {
    auto max_index = [](const Eigen::Vector3cd& v) {
        int idx = 0;
        v.cwiseAbs().maxCoeff(&idx);
        return idx;
    };
    std::stable_sort(vecs.begin(), vecs.end(),
                     [&](const Eigen::Vector3cd& a, const Eigen::Vector3cd& b) {
                         return max_index(a) > max_index(b);
                     });
    std::vector<Eigen::Vector3cd> out;
    for (auto v : vecs) {
        for (const auto& u : out) {
            const std::complex<double> proj = u.dot(eps1 * v);
            v -= proj * u;
        }
        const double nrm2 = std::real(v.dot(eps1 * v));
        if (nrm2 <= 0.0) throw PhysicsError("solve_branches: degenerate basis collapse");
        v /= std::sqrt(nrm2);
        int idx = max_index(v);
        const std::complex<double> pivot = v(idx);
        if (std::abs(pivot) > 0.0) v *= std::conj(pivot) / std::abs(pivot);
        out.push_back(v);
    }
    vecs = out;
}

}  // namespace

WaveVector::WaveVector(const Eigen::Vector3d& qhat_, double magnitude_)
    : qhat(qhat_), magnitude(magnitude_) {
    if (!qhat.allFinite() || !std::isfinite(magnitude))
        throw PhysicsError("WaveVector: non-finite entries");
    if (std::abs(qhat.norm() - 1.0) > 1e-14)
        throw PhysicsError("WaveVector: direction must be unit norm to 1e-14");
    if (magnitude < 0.0) throw PhysicsError("WaveVector: magnitude must be >= 0");
}

Eigen::Matrix3d lambda_matrix(const Eigen::Vector3d& q, const Eigen::Matrix3d& mu2) {
    // -levi(i,a,b) levi(r,s,j) mu2_br q_a q_s  ==  -[q]x mu2 [q]x
    const Eigen::Matrix3d qx = cross_matrix(q);
    return -(qx * mu2 * qx);
}

std::vector<DispersionBranch> solve_branches(const WaveVector& q, const ConstitutiveTensors& t) {
    require_mode_sector(t, "solve_branches");
    if (!(q.magnitude > 0.0)) throw PhysicsError("solve_branches: |q| must be positive");

    const Eigen::Matrix3d C = factor_epsilon(t.eps1);
    const Eigen::Matrix3d Cinv = C.inverse();
    const Eigen::Matrix3d lambda = lambda_matrix(q.q(), t.mu2);

    // Symmetrized pencil: C^-1 Lambda C^-1 f = w^2 f, X = C^-1 f, which keeps
    // the spectrum real and makes eps1-orthonormality automatic.
    const Eigen::Matrix3d K = Cinv * lambda * Cinv;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(0.5 * (K + K.transpose()));
    if (es.info() != Eigen::Success)
        throw PhysicsError("solve_branches: eigenproblem failed");

    const Eigen::Vector3d w2 = es.eigenvalues();  // ascending
    const double w2max = w2.cwiseAbs().maxCoeff();
    if (!(w2max > 0.0)) throw PhysicsError("solve_branches: degenerate pencil");

    // Group by the degeneracy threshold on w^2.
    std::vector<DispersionBranch> branches;
    int i = 0;
    while (i < 3) {
        int j = i;
        while (j + 1 < 3 && std::abs(w2(j + 1) - w2(i)) <= kDegeneracyRelTol * w2max) ++j;

        DispersionBranch br;
        br.q_magnitude = q.magnitude;
        br.is_longitudinal_zero_mode = std::abs(w2(i)) <= kZeroModeRelTol * w2max;
        const double w2_repr = br.is_longitudinal_zero_mode
                                   ? 0.0
                                   : w2.segment(i, j - i + 1).mean();
        if (!br.is_longitudinal_zero_mode && !(w2_repr > 0.0))
            throw PhysicsError("solve_branches: negative squared frequency");
        br.omega = std::sqrt(std::max(0.0, w2_repr));
        br.lambda_count = j - i + 1;
        std::vector<Eigen::Vector3cd> vecs;
        for (int kcol = i; kcol <= j; ++kcol)
            vecs.push_back((Cinv * es.eigenvectors().col(kcol)).cast<std::complex<double>>());
        orthonormalize_group(vecs, t.eps1);
        br.X = std::move(vecs);
        branches.push_back(std::move(br));
        i = j + 1;
    }

    std::stable_sort(branches.begin(), branches.end(),
                     [](const DispersionBranch& a, const DispersionBranch& b) {
                         if (a.is_longitudinal_zero_mode != b.is_longitudinal_zero_mode)
                             return a.is_longitudinal_zero_mode;
                         return a.omega < b.omega;
                     });

    int n_zero = 0;
    for (std::size_t r = 0; r < branches.size(); ++r) {
        branches[r].rho = static_cast<int>(r);
        if (branches[r].is_longitudinal_zero_mode) n_zero += branches[r].lambda_count;
    }
    if (n_zero != 1)
        throw PhysicsError("solve_branches: expected exactly one longitudinal zero mode, got " +
                           std::to_string(n_zero));
    return branches;
}

double phase_speed(const DispersionBranch& branch) {
    if (branch.is_longitudinal_zero_mode)
        throw PhysicsError("phase_speed: undefined for the longitudinal zero mode");
    return branch.omega / branch.q_magnitude;
}

PlaneWaveMode make_mode(const DispersionBranch& branch, int lambda, const Eigen::Vector3d& qhat,
                        const Eigen::Matrix3d& eps1) {
    if (branch.is_longitudinal_zero_mode)
        throw PhysicsError("make_mode: zero mode is excluded from the mode continuum");
    if (lambda < 0 || lambda >= branch.lambda_count)
        throw PhysicsError("make_mode: polarization index out of range");
    PlaneWaveMode mode;
    mode.q = branch.q_magnitude * qhat;
    mode.omega = branch.omega;
    // solve_branches hands back eps1-orthonormal X, but normalize generally
    // so externally built eigenvectors work too.
    const Eigen::Vector3cd& X = branch.X[static_cast<std::size_t>(lambda)];
    const double xex = std::real(X.dot(eps1.cast<std::complex<double>>() * X));
    if (!(xex > 0.0)) throw PhysicsError("make_mode: eigenvector has no eps1 norm");
    mode.amplitude = X / (std::pow(2.0 * M_PI, 1.5) * std::sqrt(xex));
    return mode;
}

double MaxwellResiduals::max_relative() const {
    return std::max({div_b, faraday, div_d, ampere});
}

MaxwellResiduals maxwell_residual(const PlaneWaveMode& mode, const ConstitutiveTensors& t) {
    if (!t.magnetoelectric_coupling_is_zero())
        throw PhysicsError("maxwell_residual: requires eps2 = mu1 = 0");
    const std::complex<double> iw(0.0, mode.omega);
    const Eigen::Vector3cd q = mode.q.cast<std::complex<double>>();
    const Eigen::Vector3cd E = iw * mode.amplitude;
    const Eigen::Vector3cd B = std::complex<double>(0.0, 1.0) * ccross(q, mode.amplitude);
    const Eigen::Vector3cd D = t.eps1.cast<std::complex<double>>() * E;
    const Eigen::Vector3cd H = t.mu2.cast<std::complex<double>>() * B;
    const double qn = mode.q.norm();
    const double tiny = 1e-300;

    MaxwellResiduals r{};
    // q.B and q x E - w B vanish identically for any amplitude; computed
    // anyway as floating-point sanity residuals (q is real, so dot() is the
    // plain contraction).
    r.div_b = std::abs(q.dot(B)) / std::max(qn * B.norm(), tiny);
    r.faraday =
        (ccross(q, E) - mode.omega * B).norm() / std::max(qn * E.norm() + mode.omega * B.norm(), tiny);
    r.div_d = std::abs(q.dot(D)) / std::max(qn * D.norm(), tiny);
    // i q x H = -i w D for e^{-iwt}:  q x H + w D = 0
    r.ampere = (ccross(q, H) + mode.omega * D).norm() /
               std::max(qn * H.norm() + mode.omega * D.norm(), tiny);
    return r;
}

}  // namespace anisoem
