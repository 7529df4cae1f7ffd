#include "anisoem/emission.hpp"

#include <cmath>

#include "anisoem/errors.hpp"
#include "anisoem/parallel.hpp"
#include "anisoem/quadrature.hpp"

namespace anisoem {

TwoLevelAtom::TwoLevelAtom(double omega0_, const Eigen::Vector3d& d_) : omega0(omega0_), d(d_) {
    if (!(omega0 > 0.0)) throw PhysicsError("atom: transition frequency must be positive");
    if (!d.allFinite()) throw PhysicsError("atom: non-finite dipole moment");
}

double isofrequency_radius(const DispersionBranch& branch, double omega0) {
    return omega0 / phase_speed(branch);
}

double free_space_rate(const TwoLevelAtom& atom, const PhysicalConstants& k) {
    const double w = atom.omega0;
    return w * w * w * atom.d.squaredNorm() / (6.0 * M_PI * k.eps0 * k.hbar * k.c * k.c * k.c);
}

namespace {

struct NodeAccumulator {
    // gamma contributions per (rho, lambda); indexed [rho][lambda]
    std::vector<std::vector<double>> g;
    double v_min = std::numeric_limits<double>::infinity();
};

/// One-pass surface integral at the given angular resolution.
DecayResult integrate_surface(const TwoLevelAtom& atom, const CavityConfig& cavity,
                              const LocalFieldSystem& system, int ntheta, int nphi) {
    const double w0 = atom.omega0;
    const auto grid = sphere_product_grid(ntheta, nphi);

    std::vector<NodeAccumulator> per_node(grid.size());
    parallel_for(grid.size(), [&](std::size_t idx) {
        const Eigen::Vector3d& qhat = grid[idx].dir;
        const auto branches = solve_branches(WaveVector(qhat, 1.0), cavity.medium);
        NodeAccumulator acc;
        acc.g.resize(branches.size());
        for (const auto& br : branches) {
            if (br.is_longitudinal_zero_mode) continue;
            const double v = phase_speed(br);
            acc.v_min = std::min(acc.v_min, v);
            const double q0 = w0 / v;
            // rescale onto the isofrequency surface (roots are degree-1
            // homogeneous in |q|, eigenvectors direction-only)
            DispersionBranch shell = br;
            shell.q_magnitude = q0;
            shell.omega = v * q0;
            auto& slots = acc.g[static_cast<std::size_t>(br.rho)];
            slots.assign(static_cast<std::size_t>(br.lambda_count), 0.0);
            for (int l = 0; l < br.lambda_count; ++l) {
                const Eigen::Vector3cd F0 = mode_at_origin(shell, l, qhat, cavity, system);
                const std::complex<double> dF = atom.d.cast<std::complex<double>>().dot(F0);
                const double coupling = std::norm(dF);
                slots[static_cast<std::size_t>(l)] =
                    grid[idx].weight * (q0 * q0 / v) * w0 * coupling;
            }
        }
        per_node[idx] = std::move(acc);
    });

    // fixed-order reduction
    DecayResult result;
    const double pref = M_PI / (2.0 * cavity.medium.constants.hbar);
    std::vector<std::vector<double>> totals;
    double v_min = std::numeric_limits<double>::infinity();
    for (const auto& acc : per_node) {
        v_min = std::min(v_min, acc.v_min);
        if (totals.size() < acc.g.size()) totals.resize(acc.g.size());
        for (std::size_t r = 0; r < acc.g.size(); ++r) {
            if (totals[r].size() < acc.g[r].size()) totals[r].resize(acc.g[r].size(), 0.0);
            for (std::size_t l = 0; l < acc.g[r].size(); ++l) totals[r][l] += acc.g[r][l];
        }
    }
    result.gamma = 0.0;
    for (std::size_t r = 0; r < totals.size(); ++r)
        for (std::size_t l = 0; l < totals[r].size(); ++l) {
            const double grl = pref * totals[r][l];
            result.contributions.push_back({static_cast<int>(r), static_cast<int>(l), grl});
            result.gamma += grl;
        }
    result.long_wavelength_ok = w0 * cavity.R / v_min <= 0.1;
    return result;
}

}  // namespace

DecayResult decay_rate(const TwoLevelAtom& atom, const CavityConfig& cavity,
                       const QuadratureSpec& spec) {
    spec.validate();
    cavity.validate();

    DecayResult result;
    const double gamma0 = free_space_rate(atom, cavity.medium.constants);
    if (atom.d.squaredNorm() == 0.0) {
        result.gamma = 0.0;
        result.gamma_over_free_space = 0.0;
        result.converged = true;
        return result;
    }

    // The correction system depends on the surface point only through
    // omega_rho(q) = omega0, so one evaluation serves every (rho, qhat).
    const LocalFieldSystem system = correction_tensors(atom.omega0, cavity, spec);

    result = integrate_surface(atom, cavity, system, spec.ntheta, spec.nphi);
    const DecayResult coarse = integrate_surface(atom, cavity, system, std::max(2, spec.ntheta / 2),
                                                 std::max(4, spec.nphi / 2));
    result.long_wavelength_ok = result.long_wavelength_ok && system.long_wavelength_ok;
    result.quad_error_estimate =
        result.gamma > 0.0 ? std::abs(result.gamma - coarse.gamma) / result.gamma : 0.0;
    result.converged = result.quad_error_estimate < 1e-3;
    if (!result.converged && result.quad_error_estimate > 0.05)
        throw ConvergenceError("decay_rate: angular quadrature not converged (estimate " +
                               std::to_string(result.quad_error_estimate) + ")");
    result.gamma_over_free_space = gamma0 > 0.0 ? result.gamma / gamma0 : 0.0;
    return result;
}

}  // namespace anisoem
