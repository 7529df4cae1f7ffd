#include "anisoem/io.hpp"

#include <fstream>

#include "anisoem/errors.hpp"

namespace anisoem {

namespace {

Eigen::MatrixXd parse_matrix(const json& j, int rows, int cols, const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        throw ConfigError(where + ": expected " + std::to_string(rows) + "x" +
                          std::to_string(cols) + " row-major array");
    Eigen::MatrixXd m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const json& row = j.at(r);
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw ConfigError(where + "[" + std::to_string(r) + "]: expected " +
                              std::to_string(cols) + " entries");
        for (int c = 0; c < cols; ++c) {
            const json& v = row.at(c);
            if (!v.is_number())
                throw ConfigError(where + "[" + std::to_string(r) + "][" + std::to_string(c) +
                                  "]: expected a number");
            m(r, c) = v.get<double>();
        }
    }
    return m;
}

json matrix_json(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) {
                known = true;
                break;
            }
        if (!known)
            throw ConfigError(where + ": unknown key \"" + it.key() + "\"");
    }
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError(path + ": " + e.what());
    }
    return j;
}

ConstitutiveTensors material_from_json(const json& j, const std::string& path_hint) {
    const std::string where = path_hint.empty() ? "material" : path_hint;
    if (!j.is_object()) throw ConfigError(where + ": expected a JSON object");
    reject_unknown_keys(j, {"name", "eps1", "eps2", "mu1", "mu2", "constants"}, where);
    if (!j.contains("eps1")) throw ConfigError(where + ": missing required key \"eps1\"");
    if (!j.contains("mu2")) throw ConfigError(where + ": missing required key \"mu2\"");

    ConstitutiveTensors t;
    if (j.contains("constants")) {
        const json& k = j.at("constants");
        reject_unknown_keys(k, {"hbar", "eps0", "mu0", "c"}, where + ".constants");
        if (k.contains("hbar")) t.constants.hbar = k.at("hbar").get<double>();
        if (k.contains("eps0")) t.constants.eps0 = k.at("eps0").get<double>();
        if (k.contains("mu0")) t.constants.mu0 = k.at("mu0").get<double>();
        if (k.contains("c")) t.constants.c = k.at("c").get<double>();
        if (!(t.constants.hbar > 0) || !(t.constants.eps0 > 0) || !(t.constants.mu0 > 0) ||
            !(t.constants.c > 0))
            throw ConfigError(where + ".constants: all constants must be positive");
    }
    t.eps1 = parse_matrix(j.at("eps1"), 3, 3, where + ".eps1");
    t.mu2 = parse_matrix(j.at("mu2"), 3, 3, where + ".mu2");
    if (j.contains("eps2")) t.eps2 = parse_matrix(j.at("eps2"), 3, 3, where + ".eps2");
    if (j.contains("mu1")) t.mu1 = parse_matrix(j.at("mu1"), 3, 3, where + ".mu1");
    return t;
}

ConstitutiveTensors load_material(const std::string& path) {
    return material_from_json(load_json_file(path), path);
}

json material_to_json(const ConstitutiveTensors& t, const std::string& name) {
    json j;
    if (!name.empty()) j["name"] = name;
    j["eps1"] = matrix_json(t.eps1);
    j["eps2"] = matrix_json(t.eps2);
    j["mu1"] = matrix_json(t.mu1);
    j["mu2"] = matrix_json(t.mu2);
    j["constants"] = {{"hbar", t.constants.hbar},
                      {"eps0", t.constants.eps0},
                      {"mu0", t.constants.mu0},
                      {"c", t.constants.c}};
    return j;
}

SpacetimeMetric metric_from_json(const json& j, const std::string& path_hint) {
    const std::string where = path_hint.empty() ? "metric" : path_hint;
    if (!j.is_object()) throw ConfigError(where + ": expected a JSON object");
    reject_unknown_keys(j, {"name", "g"}, where);
    if (!j.contains("g")) throw ConfigError(where + ": missing required key \"g\"");
    SpacetimeMetric m;
    m.g = parse_matrix(j.at("g"), 4, 4, where + ".g");
    return m;
}

SpacetimeMetric load_metric(const std::string& path) {
    return metric_from_json(load_json_file(path), path);
}

json validation_report_to_json(const ValidationReport& report) {
    json j;
    j["ok"] = report.ok();
    json v = json::array();
    for (const auto& viol : report.violations)
        v.push_back({{"constraint", viol.constraint}, {"deviation", viol.deviation}});
    j["violations"] = v;
    return j;
}

json matrix_to_json(const Eigen::Matrix3d& m) { return matrix_json(m); }

json matrix_to_json(const Eigen::Matrix3cd& m) {
    json rows = json::array();
    for (int r = 0; r < 3; ++r) {
        json row = json::array();
        for (int c = 0; c < 3; ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
        rows.push_back(row);
    }
    return rows;
}

json vector_to_json(const Eigen::Vector3d& v) { return json::array({v.x(), v.y(), v.z()}); }

json vector_to_json(const Eigen::Vector3cd& v) {
    json out = json::array();
    for (int i = 0; i < 3; ++i) out.push_back({v(i).real(), v(i).imag()});
    return out;
}

}  // namespace anisoem
