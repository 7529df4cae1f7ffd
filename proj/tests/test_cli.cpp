// End-to-end CLI behavior: exit-code classes, config echo, file round trips.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "anisoem/io.hpp"

using namespace anisoem;
namespace fs = std::filesystem;

namespace {

const fs::path kDir = fs::temp_directory_path() / "anisoem_cli_tests";

int run(const std::string& args, const fs::path& out, const std::string& env = "") {
    const std::string cmd =
        env + std::string(ANISOEM_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string write_material(const std::string& name, const ConstitutiveTensors& t) {
    fs::create_directories(kDir);
    const fs::path p = kDir / name;
    std::ofstream(p) << material_to_json(t).dump(2);
    return p.string();
}

}  // namespace

TEST(Cli, MinimalVacuumDecayEchoesDefaults) {
    const std::string mat = write_material("vac.json", ConstitutiveTensors::vacuum());
    const fs::path out = kDir / "decay_vac.json";
    const int rc = run("decay --material " + mat +
                           " --omega0 2.5e15 --dipole 0,0,1e-29 --R 1.2e-10 --ntheta 8 --nphi 16",
                       out);
    ASSERT_EQ(rc, 0) << slurp(out);
    const json top = json::parse(slurp(out));
    // defaults echoed into the config
    EXPECT_EQ(top.at("config").at("quad").at("nradial").get<int>(), 24);
    EXPECT_EQ(top.at("config").at("quad").at("eta").get<double>(), 0.0);
    EXPECT_NEAR(top.at("result").at("gamma_over_free_space").get<double>(), 1.0, 0.005);
    EXPECT_EQ(top.at("result").at("rate_convention").get<std::string>(), "amplitude");
}

TEST(Cli, OnsagerViolatingMaterialExitsWithPhysicsCode) {
    ConstitutiveTensors bad = ConstitutiveTensors::vacuum();
    bad.eps1(0, 1) = 0.3 * bad.eps1(0, 0);  // asymmetric eps1
    const std::string mat = write_material("bad.json", bad);
    const fs::path out = kDir / "bad_run.json";
    const int rc = run("dispersion --material " + mat + " --qhat 0,0,1", out);
    EXPECT_EQ(rc, 4);
    EXPECT_NE(slurp(out).find("eps1 symmetry"), std::string::npos);
}

TEST(Cli, MalformedTensorExitsWithConfigCode) {
    fs::create_directories(kDir);
    const fs::path p = kDir / "malformed.json";
    std::ofstream(p) << R"({"eps1": [[1,0,0],[0,1,0],[0,0]], "mu2": [[1,0,0],[0,1,0],[0,0,1]]})";
    const fs::path out = kDir / "malformed_run.json";
    const int rc = run("dispersion --material " + p.string() + " --qhat 0,0,1", out);
    EXPECT_EQ(rc, 2);
    EXPECT_NE(slurp(out).find("eps1[2]"), std::string::npos);
}

TEST(Cli, UnknownConfigKeyRejected) {
    const std::string mat = write_material("vac2.json", ConstitutiveTensors::vacuum());
    fs::create_directories(kDir);
    const fs::path cfg = kDir / "bad_config.json";
    std::ofstream(cfg) << R"({"command": "dispersion", "material": ")" << mat
                       << R"(", "qhat": [0,0,1], "qmagnitude": 2.0})";
    const fs::path out = kDir / "bad_config_run.json";
    EXPECT_EQ(run("--config " + cfg.string(), out), 2);
    EXPECT_NE(slurp(out).find("qmagnitude"), std::string::npos);
}

TEST(Cli, MinkowskiMetricRoundTripsThroughDispersion) {
    fs::create_directories(kDir);
    const fs::path metric = kDir / "minkowski.json";
    std::ofstream(metric)
        << R"({"g": [[-1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]})";
    const fs::path mat_out = kDir / "from_metric.json";
    const fs::path out1 = kDir / "metric_run.json";
    ASSERT_EQ(run("metric --metric " + metric.string() + " --material-out " + mat_out.string(),
                  out1),
              0);
    const json top = json::parse(slurp(out1));
    EXPECT_TRUE(top.at("result").at("validation").at("ok").get<bool>());

    const fs::path out2 = kDir / "disp_run.json";
    ASSERT_EQ(run("dispersion --material " + mat_out.string() + " --qhat 0,0,1", out2), 0);
    const json disp = json::parse(slurp(out2));
    const double c = PhysicalConstants{}.c;
    bool found_light_cone = false;
    for (const auto& br : disp.at("result").at("branches")) {
        if (br.at("longitudinal_zero_mode").get<bool>()) continue;
        if (std::abs(br.at("omega").get<double>() - c) < 1e-10 * c) found_light_cone = true;
    }
    EXPECT_TRUE(found_light_cone);
}

TEST(Cli, SweepWritesCsvWithHeader) {
    const std::string mat =
        write_material("uniax.json", ConstitutiveTensors::diagonal_dielectric(2.25, 2.25, 3.24));
    const fs::path csv = kDir / "sweep.csv";
    const fs::path out = kDir / "sweep_run.json";
    ASSERT_EQ(run("dispersion --material " + mat + " --sweep 4 --sweep-phi 8 --csv " +
                      csv.string(),
                  out),
              0);
    const std::string text = slurp(csv);
    EXPECT_EQ(text.rfind("theta,phi,branch,lambda,omega", 0), 0u);
    // 4 x 8 directions x 3 polarizations
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1 + 4 * 8 * 3);
}

TEST(Cli, ThreadCountDoesNotChangeBytes) {
    const std::string mat = write_material("iso.json", ConstitutiveTensors::isotropic(2.25));
    const std::string args = "decay --material " + mat +
                             " --omega0 2.5e15 --dipole 1e-29,0,0 --R 1.2e-10 --ntheta 8 --nphi 16";
    const fs::path o1 = kDir / "threads1.json", o4 = kDir / "threads4.json";
    ASSERT_EQ(run(args, o1, "ANISO_THREADS=1 "), 0);
    ASSERT_EQ(run(args, o4, "ANISO_THREADS=4 "), 0);
    EXPECT_EQ(slurp(o1), slurp(o4));
}

TEST(Cli, WwsimTrajectoryCsv) {
    const std::string mat = write_material("vac3.json", ConstitutiveTensors::vacuum());
    const double gamma0 = 3.2955e6;  // order of magnitude only, sets the window
    std::ostringstream args;
    args.precision(17);
    args << "wwsim --material " << mat << " --omega0 2.5e15 --dipole 0,0,1e-29 --window "
         << 2.5e15 - 300 * gamma0 << "," << 2.5e15 + 300 * gamma0
         << " --modes 21 --tfinal " << 0.3 / gamma0 << " --dt " << 0.2 / (600 * gamma0)
         << " --ntheta 2 --nphi 4 --record-stride 32 --traj-csv " << (kDir / "traj.csv").string();
    const fs::path out = kDir / "wwsim_run.json";
    ASSERT_EQ(run(args.str(), out), 0) << slurp(out);
    const std::string csv = slurp(kDir / "traj.csv");
    EXPECT_EQ(csv.rfind("t,re_c,im_c,norm", 0), 0u);
    const json top = json::parse(slurp(out));
    EXPECT_LT(top.at("result").at("max_norm_drift").get<double>(), 1e-9);
}
