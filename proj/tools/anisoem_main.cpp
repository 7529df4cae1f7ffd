// anisoem - quantized mode structure and spontaneous emission in homogeneous
// bi-anisotropic magnetodielectric media.
//
// Subcommands: dispersion, project, metric, localfield, decay, wwsim.
// Every run echoes its fully resolved configuration into the output JSON;
// re-running with `--config` on that object reproduces the output byte for
// byte (fixed node order, fixed reduction order, shortest round-trip floats).

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "anisoem/dispersion.hpp"
#include "anisoem/emission.hpp"
#include "anisoem/errors.hpp"
#include "anisoem/io.hpp"
#include "anisoem/localfield.hpp"
#include "anisoem/metric.hpp"
#include "anisoem/projection.hpp"
#include "anisoem/wwsim.hpp"

namespace {

using anisoem::json;

std::string fmt(double x) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    (void)ec;
    return std::string(buf, p);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw anisoem::ConfigError("cannot write file: " + path);
    out << text;
}

void emit(const json& config, const json& result) {
    json top;
    top["config"] = config;
    top["result"] = result;
    const std::string text = top.dump(2) + "\n";
    if (config.contains("output") && config.at("output").is_string())
        write_text(config.at("output").get<std::string>(), text);
    else
        std::cout << text;
}

double need_number(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key)) throw anisoem::ConfigError(where + ": missing key \"" + std::string(key) + "\"");
    if (!j.at(key).is_number()) throw anisoem::ConfigError(where + "." + key + ": expected number");
    return j.at(key).get<double>();
}

std::string need_string(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key) || !j.at(key).is_string())
        throw anisoem::ConfigError(where + ": missing string key \"" + std::string(key) + "\"");
    return j.at(key).get<std::string>();
}

Eigen::Vector3d need_vec3(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key) || !j.at(key).is_array() || j.at(key).size() != 3)
        throw anisoem::ConfigError(where + ": key \"" + std::string(key) +
                                   "\" must be a 3-element array");
    Eigen::Vector3d v;
    for (int i = 0; i < 3; ++i) v(i) = j.at(key).at(i).get<double>();
    return v;
}

anisoem::QuadratureSpec quad_from_config(const json& c, const std::string& where) {
    anisoem::QuadratureSpec spec;
    if (!c.contains("quad")) return spec;
    const json& q = c.at("quad");
    anisoem::reject_unknown_keys(q, {"ntheta", "nphi", "nradial", "xmax", "eta"}, where + ".quad");
    if (q.contains("ntheta")) spec.ntheta = q.at("ntheta").get<int>();
    if (q.contains("nphi")) spec.nphi = q.at("nphi").get<int>();
    if (q.contains("nradial")) spec.nradial = q.at("nradial").get<int>();
    if (q.contains("xmax")) spec.radial_xmax = q.at("xmax").get<double>();
    if (q.contains("eta")) spec.eta = q.at("eta").get<double>();
    spec.validate();
    return spec;
}

json quad_to_json(const anisoem::QuadratureSpec& spec) {
    return {{"ntheta", spec.ntheta},
            {"nphi", spec.nphi},
            {"nradial", spec.nradial},
            {"xmax", spec.radial_xmax},
            {"eta", spec.eta}};
}

anisoem::CavityConfig cavity_from_config(const json& c, const std::string& where) {
    anisoem::CavityConfig cavity;
    cavity.medium = anisoem::load_material(need_string(c, "material", where));
    if (c.contains("hole") && c.at("hole").is_string())
        cavity.hole = anisoem::load_material(c.at("hole").get<std::string>());
    else
        cavity.hole = anisoem::ConstitutiveTensors::vacuum(cavity.medium.constants);
    cavity.R = need_number(c, "R", where);
    return cavity;
}

json branch_to_json(const anisoem::DispersionBranch& br) {
    json b;
    b["rho"] = br.rho;
    b["omega"] = br.omega;
    b["q_magnitude"] = br.q_magnitude;
    b["lambda_count"] = br.lambda_count;
    b["longitudinal_zero_mode"] = br.is_longitudinal_zero_mode;
    json xs = json::array();
    for (const auto& x : br.X) xs.push_back(anisoem::vector_to_json(x));
    b["X"] = xs;
    return b;
}

// --- subcommand handlers ------------------------------------------------

int run_dispersion(const json& c) {
    anisoem::reject_unknown_keys(
        c, {"command", "material", "qhat", "qmag", "sweep_ntheta", "sweep_nphi", "csv", "output"},
        "dispersion");
    const auto material = anisoem::load_material(need_string(c, "material", "dispersion"));
    const auto report = anisoem::validate_onsager(material);
    if (!report.ok())
        throw anisoem::PhysicsError("dispersion: material violates \"" +
                                    report.violations.front().constraint + "\"");

    json result;
    const double qmag = c.value("qmag", 1.0);
    if (c.contains("qhat")) {
        Eigen::Vector3d qhat = need_vec3(c, "qhat", "dispersion");
        const double n = qhat.norm();
        if (!(n > 0)) throw anisoem::ConfigError("dispersion.qhat: zero direction");
        qhat /= n;
        const auto branches = anisoem::solve_branches(anisoem::WaveVector(qhat, qmag), material);
        json bs = json::array();
        for (const auto& br : branches) bs.push_back(branch_to_json(br));
        result["branches"] = bs;
        result["qhat"] = anisoem::vector_to_json(qhat);
    }

    const int st = c.value("sweep_ntheta", 0);
    const int sp = c.value("sweep_nphi", 0);
    if (st > 0 && sp > 0) {
        std::string csv = "theta,phi,branch,lambda,omega,ReX0,ImX0,ReX1,ImX1,ReX2,ImX2\n";
        for (int i = 0; i < st; ++i) {
            const double theta = (i + 0.5) * M_PI / st;
            for (int jphi = 0; jphi < sp; ++jphi) {
                const double phi = (jphi + 0.5) * 2.0 * M_PI / sp;
                const Eigen::Vector3d qhat(std::sin(theta) * std::cos(phi),
                                           std::sin(theta) * std::sin(phi), std::cos(theta));
                const auto branches =
                    anisoem::solve_branches(anisoem::WaveVector(qhat, qmag), material);
                for (const auto& br : branches) {
                    for (int l = 0; l < br.lambda_count; ++l) {
                        const auto& x = br.X[static_cast<std::size_t>(l)];
                        csv += fmt(theta) + "," + fmt(phi) + "," + std::to_string(br.rho) + "," +
                               std::to_string(l) + "," + fmt(br.omega);
                        for (int kc = 0; kc < 3; ++kc)
                            csv += "," + fmt(x(kc).real()) + "," + fmt(x(kc).imag());
                        csv += "\n";
                    }
                }
            }
        }
        if (c.contains("csv") && c.at("csv").is_string())
            write_text(c.at("csv").get<std::string>(), csv);
        result["sweep_rows"] = st * sp;
    }
    emit(c, result);
    return 0;
}

int run_project(const json& c) {
    anisoem::reject_unknown_keys(c, {"command", "material", "q", "field", "output"}, "project");
    const auto material = anisoem::load_material(need_string(c, "material", "project"));
    anisoem::FourierField field;
    field.q = need_vec3(c, "q", "project");
    if (!c.contains("field") || !c.at("field").is_array() || c.at("field").size() != 3)
        throw anisoem::ConfigError("project.field: expected 3 [re,im] pairs");
    for (int i = 0; i < 3; ++i) {
        const json& p = c.at("field").at(i);
        if (!p.is_array() || p.size() != 2)
            throw anisoem::ConfigError("project.field: expected 3 [re,im] pairs");
        field.F(i) = std::complex<double>(p.at(0).get<double>(), p.at(1).get<double>());
    }

    const auto [par, perp] = anisoem::decompose(field, material.eps1);
    const auto pair = anisoem::projector_pair(field.q, material.eps1);

    json checks;
    checks["reconstruction_residual"] = (field.F - par - perp).norm();
    const Eigen::Vector3cd weighted_q =
        (material.eps1.transpose() * field.q).cast<std::complex<double>>();
    checks["eps1_transversality"] = std::abs(weighted_q.dot(perp));
    checks["green_scalar"] = anisoem::green_scalar_fourier(field.q, material.eps1);
    checks["projector_idempotence"] = (pair.perp * pair.perp - pair.perp).cwiseAbs().maxCoeff();

    json result;
    result["F_par"] = anisoem::vector_to_json(par);
    result["F_perp"] = anisoem::vector_to_json(perp);
    result["F_top"] = anisoem::vector_to_json(anisoem::transverse_of_covector(field, material.eps1));
    result["checks"] = checks;
    emit(c, result);
    return 0;
}

int run_metric(const json& c) {
    anisoem::reject_unknown_keys(c, {"command", "metric", "material_out", "output"}, "metric");
    const auto metric = anisoem::load_metric(need_string(c, "metric", "metric"));
    const auto material = anisoem::metric_to_constitutive(metric);
    const auto report = anisoem::validate_onsager(material);

    json result;
    result["material"] = anisoem::material_to_json(material);
    result["validation"] = anisoem::validation_report_to_json(report);
    if (c.contains("material_out") && c.at("material_out").is_string())
        write_text(c.at("material_out").get<std::string>(),
                   anisoem::material_to_json(material).dump(2) + "\n");
    emit(c, result);
    return 0;
}

json localfield_result(const anisoem::LocalFieldSystem& sys) {
    json r;
    r["omega"] = sys.omega;
    r["Gamma1"] = anisoem::matrix_to_json(sys.Gamma1);
    r["Q"] = anisoem::matrix_to_json(sys.Q);
    json d1 = json::array();
    for (int i = 0; i < 3; ++i) {
        json row = json::array();
        for (int k = 0; k < 27; ++k) row.push_back({sys.Delta1(i, k).real(), sys.Delta1(i, k).imag()});
        d1.push_back(row);
    }
    r["Delta1"] = d1;
    json g2 = json::array();
    for (int i = 0; i < 27; ++i) {
        json row = json::array();
        for (int k = 0; k < 3; ++k) row.push_back({sys.Gamma2(i, k).real(), sys.Gamma2(i, k).imag()});
        g2.push_back(row);
    }
    r["Gamma2"] = g2;
    json d2 = json::array();
    for (int i = 0; i < 27; ++i) {
        json row = json::array();
        for (int k = 0; k < 27; ++k) row.push_back({sys.Delta2(i, k).real(), sys.Delta2(i, k).imag()});
        d2.push_back(row);
    }
    r["Delta2"] = d2;
    r["diagnostics"] = {{"delta2_condition", sys.delta2_condition},
                        {"truncation_estimate", sys.truncation_estimate},
                        {"angular_nodes", sys.angular_nodes},
                        {"radial_nodes_per_ray", sys.radial_nodes_per_ray},
                        {"long_wavelength_ok", sys.long_wavelength_ok}};
    return r;
}

int run_localfield(const json& c) {
    anisoem::reject_unknown_keys(c, {"command", "material", "hole", "omega", "R", "quad", "output"},
                                 "localfield");
    const auto cavity = cavity_from_config(c, "localfield");
    const auto spec = quad_from_config(c, "localfield");
    const double omega = need_number(c, "omega", "localfield");
    const auto sys = anisoem::correction_tensors(omega, cavity, spec);
    emit(c, localfield_result(sys));
    return 0;
}

int run_decay(const json& c) {
    anisoem::reject_unknown_keys(
        c, {"command", "material", "hole", "omega0", "dipole", "R", "quad", "sweep_angle", "csv",
            "output"},
        "decay");
    const auto cavity = cavity_from_config(c, "decay");
    const auto spec = quad_from_config(c, "decay");
    const anisoem::TwoLevelAtom atom(need_number(c, "omega0", "decay"),
                                     need_vec3(c, "dipole", "decay"));

    const auto res = anisoem::decay_rate(atom, cavity, spec);
    json result;
    result["gamma"] = res.gamma;
    result["gamma_over_free_space"] = res.gamma_over_free_space;
    result["rate_convention"] = "amplitude";  // population decays at 2*gamma
    json bc = json::array();
    for (const auto& b : res.contributions)
        bc.push_back({{"rho", b.rho}, {"lambda", b.lambda}, {"gamma", b.gamma}});
    result["branch_contributions"] = bc;
    result["diagnostics"] = {{"quad_error_estimate", res.quad_error_estimate},
                             {"converged", res.converged},
                             {"long_wavelength_ok", res.long_wavelength_ok},
                             {"free_space_rate", anisoem::free_space_rate(atom, cavity.medium.constants)}};

    const int nsweep = c.value("sweep_angle", 0);
    if (nsweep > 0) {
        // dipole rotated in the x-z plane, fixed magnitude
        std::string csv = "angle,gamma,gamma_over_free_space\n";
        const double dn = atom.d.norm();
        for (int i = 0; i < nsweep; ++i) {
            const double ang = i * M_PI / (nsweep - 1 > 0 ? nsweep - 1 : 1);
            const anisoem::TwoLevelAtom rotated(
                atom.omega0, dn * Eigen::Vector3d(std::sin(ang), 0.0, std::cos(ang)));
            const auto r = anisoem::decay_rate(rotated, cavity, spec);
            csv += fmt(ang) + "," + fmt(r.gamma) + "," + fmt(r.gamma_over_free_space) + "\n";
        }
        if (c.contains("csv") && c.at("csv").is_string())
            write_text(c.at("csv").get<std::string>(), csv);
        result["sweep_rows"] = nsweep;
    }
    emit(c, result);
    return 0;
}

int run_wwsim(const json& c) {
    anisoem::reject_unknown_keys(c,
                                 {"command", "material", "omega0", "dipole", "window", "modes",
                                  "quad", "tfinal", "dt", "record_stride", "fit_window", "traj_csv",
                                  "output"},
                                 "wwsim");
    const auto material = anisoem::load_material(need_string(c, "material", "wwsim"));
    const anisoem::TwoLevelAtom atom(need_number(c, "omega0", "wwsim"),
                                     need_vec3(c, "dipole", "wwsim"));
    if (!c.contains("window") || !c.at("window").is_array() || c.at("window").size() != 2)
        throw anisoem::ConfigError("wwsim.window: expected [omega_min, omega_max]");
    anisoem::ModeWindow window{c.at("window").at(0).get<double>(),
                               c.at("window").at(1).get<double>()};
    const int n_omega = c.value("modes", 201);
    anisoem::QuadratureSpec spec = quad_from_config(c, "wwsim");
    const double tfinal = need_number(c, "tfinal", "wwsim");
    const double dt = need_number(c, "dt", "wwsim");
    const int stride = c.value("record_stride", 1);

    const auto set = anisoem::discretize_modes(material, atom, window, n_omega, spec);
    const auto traj = anisoem::evolve(set, tfinal, dt, stride);

    double fit_lo = 0.2 * tfinal, fit_hi = 0.95 * tfinal;
    if (c.contains("fit_window")) {
        fit_lo = c.at("fit_window").at(0).get<double>();
        fit_hi = c.at("fit_window").at(1).get<double>();
    }
    const auto fit = anisoem::fit_decay(traj, fit_lo, fit_hi);

    if (c.contains("traj_csv") && c.at("traj_csv").is_string()) {
        std::string csv = "t,re_c,im_c,norm\n";
        for (std::size_t i = 0; i < traj.times.size(); ++i)
            csv += fmt(traj.times[i]) + "," + fmt(traj.c[i].real()) + "," +
                   fmt(traj.c[i].imag()) + "," + fmt(traj.norm[i]) + "\n";
        write_text(c.at("traj_csv").get<std::string>(), csv);
    }

    json result;
    result["modes"] = static_cast<int>(set.modes.size());
    result["delta_omega"] = set.delta_omega;
    result["golden_rule_rate"] = set.golden_rule_rate();
    result["gamma_fit"] = fit.gamma;
    result["delta_omega_fit"] = fit.delta_omega;  // window/cutoff dependent diagnostic
    result["fit_residual"] = fit.residual;
    result["fit_window"] = {fit_lo, fit_hi};
    result["max_norm_drift"] = traj.max_norm_drift;
    result["rate_convention"] = "amplitude";
    emit(c, result);
    return 0;
}

int dispatch(const json& config) {
    const std::string cmd = need_string(config, "command", "config");
    if (cmd == "dispersion") return run_dispersion(config);
    if (cmd == "project") return run_project(config);
    if (cmd == "metric") return run_metric(config);
    if (cmd == "localfield") return run_localfield(config);
    if (cmd == "decay") return run_decay(config);
    if (cmd == "wwsim") return run_wwsim(config);
    throw anisoem::ConfigError("unknown command \"" + cmd + "\"");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"anisoem: mode structure and spontaneous emission in bi-anisotropic media"};
    app.require_subcommand(0, 1);

    std::string config_path;
    app.add_option("--config", config_path, "run from a resolved JSON config (echo closure)");

    // shared option storage
    std::string material, hole, metric_path, output, csv, traj_csv, material_out;
    std::vector<double> qhat, qvec, dipole, window_v, field_v, fit_window_v;
    double qmag = 1.0, omega = 0.0, omega0 = 0.0, R = 0.0, tfinal = 0.0, dt = 0.0;
    int sweep_ntheta = 0, sweep_nphi = 0, modes = 201, record_stride = 1, sweep_angle = 0;
    anisoem::QuadratureSpec q0;
    int ntheta = q0.ntheta, nphi = q0.nphi, nradial = q0.nradial;
    double xmax = q0.radial_xmax, eta = q0.eta;

    auto add_quad = [&](CLI::App* sub) {
        sub->add_option("--ntheta", ntheta, "polar quadrature nodes");
        sub->add_option("--nphi", nphi, "azimuthal quadrature nodes");
        sub->add_option("--nradial", nradial, "radial nodes per panel");
        sub->add_option("--xmax", xmax, "radial cutoff in units of p*R");
        sub->add_option("--eta", eta, "brute-force resolvent shift (units of omega^2*eps0; 0 = analytic PV)");
    };
    auto quad_json = [&]() {
        return json{{"ntheta", ntheta}, {"nphi", nphi}, {"nradial", nradial}, {"xmax", xmax},
                    {"eta", eta}};
    };

    CLI::App* disp = app.add_subcommand("dispersion", "dispersion branches and eigenvectors");
    disp->add_option("--material", material)->required();
    disp->add_option("--qhat", qhat, "direction x,y,z")->delimiter(',')->expected(3);
    disp->add_option("--qmag", qmag, "wavevector magnitude (rad/m)");
    disp->add_option("--sweep", sweep_ntheta, "sweep: polar rows");
    disp->add_option("--sweep-phi", sweep_nphi, "sweep: azimuthal columns");
    disp->add_option("--csv", csv, "sweep CSV path");
    disp->add_option("-o,--output", output);

    CLI::App* proj = app.add_subcommand("project", "eps1-weighted field decomposition");
    proj->add_option("--material", material)->required();
    proj->add_option("--q", qvec, "wavevector x,y,z")->delimiter(',')->expected(3);
    proj->add_option("--field", field_v, "re,im x3")->delimiter(',')->expected(6);
    proj->add_option("-o,--output", output);

    CLI::App* met = app.add_subcommand("metric", "metric to constitutive tensors");
    met->add_option("--metric", metric_path)->required();
    met->add_option("--material-out", material_out, "write the derived material file");
    met->add_option("-o,--output", output);

    CLI::App* lf = app.add_subcommand("localfield", "cavity correction tensors");
    lf->add_option("--material", material)->required();
    lf->add_option("--hole", hole, "hole material (default vacuum)");
    lf->add_option("--omega", omega, "frequency (rad/s)")->required();
    lf->add_option("--R", R, "hole radius (m)")->required();
    add_quad(lf);
    lf->add_option("-o,--output", output);

    CLI::App* dec = app.add_subcommand("decay", "spontaneous-emission decay rate");
    dec->add_option("--material", material)->required();
    dec->add_option("--hole", hole, "hole material (default vacuum)");
    dec->add_option("--omega0", omega0, "transition frequency (rad/s)")->required();
    dec->add_option("--dipole", dipole, "dipole dx,dy,dz (C m)")->delimiter(',')->expected(3);
    dec->add_option("--R", R, "hole radius (m)")->required();
    dec->add_option("--sweep-angle", sweep_angle, "dipole-angle sweep rows");
    dec->add_option("--csv", csv, "sweep CSV path");
    add_quad(dec);
    dec->add_option("-o,--output", output);

    CLI::App* ww = app.add_subcommand("wwsim", "Weisskopf-Wigner mode-continuum simulation");
    ww->add_option("--material", material)->required();
    ww->add_option("--omega0", omega0, "transition frequency (rad/s)")->required();
    ww->add_option("--dipole", dipole, "dipole dx,dy,dz (C m)")->delimiter(',')->expected(3);
    ww->add_option("--window", window_v, "omega_min,omega_max")->delimiter(',')->expected(2);
    ww->add_option("--modes", modes, "frequency samples across the window");
    ww->add_option("--tfinal", tfinal, "simulated time (s)")->required();
    ww->add_option("--dt", dt, "time step (s)")->required();
    ww->add_option("--record-stride", record_stride);
    ww->add_option("--fit-window", fit_window_v, "t_start,t_end")->delimiter(',')->expected(2);
    ww->add_option("--traj-csv", traj_csv, "trajectory CSV path");
    add_quad(ww);
    ww->add_option("-o,--output", output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        json config;
        if (!config_path.empty()) {
            config = anisoem::load_json_file(config_path);
        } else {
            auto set_common = [&](const char* cmd) {
                config["command"] = cmd;
                if (!output.empty()) config["output"] = output;
            };
            if (disp->parsed()) {
                set_common("dispersion");
                config["material"] = material;
                if (!qhat.empty()) config["qhat"] = qhat;
                config["qmag"] = qmag;
                config["sweep_ntheta"] = sweep_ntheta;
                config["sweep_nphi"] = sweep_nphi > 0 ? sweep_nphi : 2 * sweep_ntheta;
                if (!csv.empty()) config["csv"] = csv;
            } else if (proj->parsed()) {
                set_common("project");
                config["material"] = material;
                if (qvec.size() == 3) config["q"] = qvec;
                json f = json::array();
                if (field_v.size() == 6)
                    for (int i = 0; i < 3; ++i) f.push_back({field_v[2 * i], field_v[2 * i + 1]});
                config["field"] = f;
            } else if (met->parsed()) {
                set_common("metric");
                config["metric"] = metric_path;
                if (!material_out.empty()) config["material_out"] = material_out;
            } else if (lf->parsed()) {
                set_common("localfield");
                config["material"] = material;
                if (!hole.empty()) config["hole"] = hole;
                config["omega"] = omega;
                config["R"] = R;
                config["quad"] = quad_json();
            } else if (dec->parsed()) {
                set_common("decay");
                config["material"] = material;
                if (!hole.empty()) config["hole"] = hole;
                config["omega0"] = omega0;
                if (dipole.size() == 3) config["dipole"] = dipole;
                config["R"] = R;
                config["quad"] = quad_json();
                config["sweep_angle"] = sweep_angle;
                if (!csv.empty()) config["csv"] = csv;
            } else if (ww->parsed()) {
                set_common("wwsim");
                config["material"] = material;
                config["omega0"] = omega0;
                if (dipole.size() == 3) config["dipole"] = dipole;
                if (window_v.size() == 2) config["window"] = window_v;
                config["modes"] = modes;
                config["quad"] = quad_json();
                config["tfinal"] = tfinal;
                config["dt"] = dt;
                config["record_stride"] = record_stride;
                if (fit_window_v.size() == 2) config["fit_window"] = fit_window_v;
                if (!traj_csv.empty()) config["traj_csv"] = traj_csv;
            } else {
                std::cerr << app.help() << std::endl;
                return 2;
            }
        }
        return dispatch(config);
    } catch (const anisoem::ConfigError& e) {
        std::cerr << "config error: " << e.what() << std::endl;
        return 2;
    } catch (const anisoem::ConvergenceError& e) {
        std::cerr << "convergence error: " << e.what() << std::endl;
        return 3;
    } catch (const anisoem::PhysicsError& e) {
        std::cerr << "physics validation error: " << e.what() << std::endl;
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
}
