#include "anisoem/wwsim.hpp"

#include <cmath>
#include <complex>

#include "anisoem/errors.hpp"
#include "anisoem/quadrature.hpp"

namespace anisoem {

namespace {
using cd = std::complex<double>;
}

double DiscreteModeSet::golden_rule_rate() const {
    double sum = 0.0;
    for (const auto& m : modes)
        if (std::abs(m.omega - omega0) <= 0.5 * delta_omega) sum += m.g * m.g;
    return M_PI * sum / delta_omega;
}

DiscreteModeSet discretize_modes(const ConstitutiveTensors& medium, const TwoLevelAtom& atom,
                                 const ModeWindow& window, int n_omega,
                                 const QuadratureSpec& spec) {
    spec.validate();
    if (!(window.omega_min > 0.0) || !(window.omega_max > window.omega_min))
        throw ConfigError("discretize_modes: window must satisfy 0 < omega_min < omega_max");
    if (window.omega_min > atom.omega0 || window.omega_max < atom.omega0)
        throw ConfigError("discretize_modes: window must straddle the atomic frequency");
    if (n_omega < 2) throw ConfigError("discretize_modes: need at least 2 frequency samples");

    // Symmetric uniform grid with omega0 exactly on a node, so the on-shell
    // bin of the golden-rule estimate is sampled rather than straddled.
    if (n_omega % 2 == 0) ++n_omega;
    const double half =
        std::min(atom.omega0 - window.omega_min, window.omega_max - atom.omega0);
    const double dw = 2.0 * half / (n_omega - 1);

    const auto grid = sphere_product_grid(spec.ntheta, spec.nphi);
    const double hbar = medium.constants.hbar;
    const double two_pi_cubed = std::pow(2.0 * M_PI, 3);

    DiscreteModeSet set;
    set.window = {atom.omega0 - half, atom.omega0 + half};
    set.omega0 = atom.omega0;
    set.delta_omega = dw;
    set.n_omega = n_omega;
    set.n_angular = static_cast<int>(grid.size());
    set.modes.reserve(grid.size() * static_cast<std::size_t>(2 * n_omega));

    for (const auto& node : grid) {
        const auto branches = solve_branches(WaveVector(node.dir, 1.0), medium);
        for (const auto& br : branches) {
            if (br.is_longitudinal_zero_mode) continue;
            const double v = phase_speed(br);
            for (int l = 0; l < br.lambda_count; ++l) {
                // |d.F|^2 is q-independent along the ray (X and the
                // normalization depend on direction only)
                const Eigen::Vector3cd& X = br.X[static_cast<std::size_t>(l)];
                const double xex = std::real(X.dot(medium.eps1.cast<cd>() * X));
                const cd dF = atom.d.cast<cd>().dot(X) / std::sqrt(two_pi_cubed * xex);
                const double coupling2 = std::norm(dF);
                for (int j = 0; j < n_omega; ++j) {
                    const double w = set.window.omega_min + dw * j;
                    const double q = w / v;
                    // d^3q cell: dOmega * q^2 * dq with dq = dw / v
                    const double cell = node.weight * q * q * dw / (v);
                    const double g2 =
                        atom.omega0 * atom.omega0 / (2.0 * hbar * w) * coupling2 * cell;
                    set.modes.push_back({w, std::sqrt(g2)});
                }
            }
        }
    }
    return set;
}

EmissionTrajectory evolve(const DiscreteModeSet& set, double t_final, double dt,
                          int record_stride) {
    if (!(dt > 0.0) || !(t_final > 0.0))
        throw ConfigError("evolve: dt and t_final must be positive");
    if (record_stride < 1) record_stride = 1;

    const std::size_t n = set.modes.size();
    double max_det = 0.0;
    for (const auto& m : set.modes)
        max_det = std::max(max_det, std::abs(m.omega - set.omega0));
    if (dt * max_det >= 1.0)
        throw ConvergenceError("evolve: dt too large for the detuning bandwidth (dt*max|detuning| = " +
                               std::to_string(dt * max_det) + ", need < 1; < 0.1 recommended)");

    EmissionTrajectory traj;
    traj.omega0 = set.omega0;

    cd c(1.0, 0.0);
    std::vector<cd> M(n, cd(0.0, 0.0));
    std::vector<double> det(n);
    for (std::size_t k = 0; k < n; ++k) det[k] = set.omega0 - set.modes[k].omega;

    const auto record = [&](double t) {
        double nrm = std::norm(c);
        for (const auto& mk : M) nrm += std::norm(mk);
        traj.times.push_back(t);
        traj.c.push_back(c);
        traj.norm.push_back(nrm);
        traj.max_norm_drift = std::max(traj.max_norm_drift, std::abs(nrm - 1.0));
    };

    record(0.0);
    const long steps = static_cast<long>(std::ceil(t_final / dt - 1e-12));
    std::vector<cd> a(n);  // h/2 * g_k e^{+i det_k t_mid}
    for (long s = 0; s < steps; ++s) {
        const double t_mid = (s + 0.5) * dt;
        const double h2 = 0.5 * dt;

        // (I - h/2 A) y+ = (I + h/2 A) y with A anti-Hermitian (Cayley step,
        // exactly unitary). Modes couple only to the atom, so eliminating
        // M_k+ = r_k - conj(a_k) c+ reduces the solve to one scalar:
        //   c+ (1 + sum |a_k|^2) = r_c + sum a_k r_k
        double s2 = 0.0;
        cd rhs_c = c;
        cd ar_sum(0.0, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            a[k] = h2 * set.modes[k].g * std::polar(1.0, det[k] * t_mid);
            s2 += std::norm(a[k]);
            rhs_c += a[k] * M[k];
            ar_sum += a[k] * (M[k] - std::conj(a[k]) * c);
        }
        const cd c_new = (rhs_c + ar_sum) / (1.0 + s2);
        for (std::size_t k = 0; k < n; ++k)
            M[k] = (M[k] - std::conj(a[k]) * c) - std::conj(a[k]) * c_new;
        c = c_new;

        const double t = (s + 1) * dt;
        if ((s + 1) % record_stride == 0 || s + 1 == steps) record(t);
    }
    traj.M_final = std::move(M);
    return traj;
}

DecayFit fit_decay(const EmissionTrajectory& traj, double t_start, double t_end) {
    if (traj.times.size() < 2) throw ConvergenceError("fit_decay: trajectory too short");
    std::vector<double> ts, lnmag, phase;
    double prev_arg = 0.0, offset = 0.0;
    bool first = true;
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        const double t = traj.times[i];
        if (t < t_start || t > t_end) continue;
        const double mag = std::abs(traj.c[i]);
        if (mag < 1e-12)
            throw ConvergenceError("fit_decay: |c| underflow inside the fit window");
        const double arg = std::arg(traj.c[i]);
        if (!first) {
            double d = arg - prev_arg;
            while (d > M_PI) d -= 2.0 * M_PI;
            while (d < -M_PI) d += 2.0 * M_PI;
            offset += d;
        }
        first = false;
        prev_arg = arg;
        ts.push_back(t);
        lnmag.push_back(std::log(mag));
        phase.push_back(offset);
    }
    if (ts.size() < 2) throw ConvergenceError("fit_decay: fewer than two samples in the window");

    const auto linfit = [&](const std::vector<double>& y, double& slope, double& rms) {
        const std::size_t n = ts.size();
        double st = 0.0, sy = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            st += ts[i];
            sy += y[i];
        }
        const double tbar = st / n, ybar = sy / n;
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            num += (ts[i] - tbar) * (y[i] - ybar);
            den += (ts[i] - tbar) * (ts[i] - tbar);
        }
        slope = num / den;
        double ss = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double r = y[i] - ybar - slope * (ts[i] - tbar);
            ss += r * r;
        }
        rms = std::sqrt(ss / n);
    };

    DecayFit fit;
    double slope_mag = 0.0, slope_phase = 0.0, rms_phase = 0.0;
    linfit(lnmag, slope_mag, fit.residual);
    linfit(phase, slope_phase, rms_phase);
    fit.gamma = -slope_mag;
    fit.delta_omega = -slope_phase;
    return fit;
}

}  // namespace anisoem
