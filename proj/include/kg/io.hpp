#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "kg/kg_system.hpp"

namespace kg {

using Json = nlohmann::ordered_json;

struct InducedInfo {
  int degree;
  int dim;
};

// {"rows": R, "cols": C, ["degree": N, "dim": d,] "entries": [[GAUSS,...],...]}
Json matrix_to_json(const Mat& m, std::optional<InducedInfo> info = {});
Mat matrix_from_json(const Json& j);

// {"A": matrix, "p": [GAUSS,...], "D": [GAUSS,...]}
Json system_to_json(const KGSystem& sys);
KGSystem system_from_json(const Json& j);

// {"checks": [{"name":..., "pass":..., "detail":...}, ...]}
Json report_to_json(const Report& report);

// Rows of GAUSS strings, comma separated, one line per row.
std::string matrix_to_csv(const Mat& m);

std::vector<GaussianRational> scalar_list_from_json(const Json& j);
Json scalar_list_to_json(const std::vector<GaussianRational>& xs);

}  // namespace kg
