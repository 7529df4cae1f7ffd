#ifndef ANISOEM_IO_HPP
#define ANISOEM_IO_HPP

#include <string>

#include <json.hpp>

#include "anisoem/metric.hpp"
#include "anisoem/tensors.hpp"

namespace anisoem {

using nlohmann::json;

/// Material file format (see schemas/material.schema.json): row-major nested
/// arrays, SI units. Required: "eps1" (3x3, F/m), "mu2" (3x3, 1/(H/m)).
/// Optional: "eps2"/"mu1" (3x3, S; default zero), "constants"
/// {hbar,eps0,mu0,c}, "name". Unknown keys are rejected (ConfigError naming
/// the offending path) - a silent typo in a tensor file would corrupt the
/// physics downstream.
ConstitutiveTensors material_from_json(const json& j, const std::string& path_hint = "");
ConstitutiveTensors load_material(const std::string& path);
json material_to_json(const ConstitutiveTensors& t, const std::string& name = "");

/// Metric file format (schemas/metric.schema.json): {"g": 4x4 row-major}.
SpacetimeMetric metric_from_json(const json& j, const std::string& path_hint = "");
SpacetimeMetric load_metric(const std::string& path);

json validation_report_to_json(const ValidationReport& report);

// serialization helpers (complex numbers as [re, im], matrices row-major)
json matrix_to_json(const Eigen::Matrix3d& m);
json matrix_to_json(const Eigen::Matrix3cd& m);
json vector_to_json(const Eigen::Vector3d& v);
json vector_to_json(const Eigen::Vector3cd& v);

json load_json_file(const std::string& path);

/// Rejects any key of `j` not in `allowed`; `where` names the object in the
/// diagnostic.
void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                         const std::string& where);

}  // namespace anisoem

#endif
