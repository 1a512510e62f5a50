#include "kg/io.hpp"

namespace kg {

Json matrix_to_json(const Mat& m, std::optional<InducedInfo> info) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  if (info) {
    j["degree"] = info->degree;
    j["dim"] = info->dim;
  }
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(m(r, c).to_string());
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

Mat matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("entries"))
    throw ParseError("matrix JSON requires rows, cols, entries");
  std::size_t rows = j.at("rows").get<std::size_t>();
  std::size_t cols = j.at("cols").get<std::size_t>();
  const Json& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != rows)
    throw ParseError("matrix entries must have 'rows' rows");
  Mat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = entries.at(r);
    if (!row.is_array() || row.size() != cols)
      throw ParseError("matrix row " + std::to_string(r) +
                       " must have 'cols' entries");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = GaussianRational::parse(row.at(c).get<std::string>());
  }
  return m;
}

std::vector<GaussianRational> scalar_list_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a JSON list of scalars");
  std::vector<GaussianRational> out;
  out.reserve(j.size());
  for (const auto& e : j)
    out.push_back(GaussianRational::parse(e.get<std::string>()));
  return out;
}

Json scalar_list_to_json(const std::vector<GaussianRational>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

Json system_to_json(const KGSystem& sys) {
  Json j;
  j["A"] = matrix_to_json(sys.A);
  j["p"] = scalar_list_to_json(sys.p);
  j["D"] = scalar_list_to_json(sys.D);
  return j;
}

KGSystem system_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("A") || !j.contains("p") ||
      !j.contains("D"))
    throw ParseError("system JSON requires A, p, D");
  KGSystem sys;
  sys.A = matrix_from_json(j.at("A"));
  sys.p = scalar_list_from_json(j.at("p"));
  sys.D = scalar_list_from_json(j.at("D"));
  return sys;
}

Json report_to_json(const Report& report) {
  Json j;
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json check;
    check["name"] = c.name;
    check["pass"] = c.pass;
    check["detail"] = c.detail;
    checks.push_back(std::move(check));
  }
  j["checks"] = std::move(checks);
  return j;
}

std::string matrix_to_csv(const Mat& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ",";
      out += m(r, c).to_string();
    }
    out += "\n";
  }
  return out;
}

}  // namespace kg
