// kg: exact construction and verification of Krawtchouk-Griffiths systems.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage or malformed input, 3 capacity guard exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kg/io.hpp"
#include "kg/oracle.hpp"
#include "kg/reflection.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

kg::Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open file: " + path);
  kg::Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw kg::ParseError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw UsageError("cannot write file: " + out_path);
  out << text;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
  return parts;
}

std::vector<kg::GaussianRational> parse_vector(const std::string& text) {
  std::vector<kg::GaussianRational> out;
  for (const auto& part : split_commas(text))
    out.push_back(kg::GaussianRational::parse(part));
  return out;
}

std::vector<kg::Rational> parse_rational_vector(const std::string& text) {
  std::vector<kg::Rational> out;
  for (const auto& part : split_commas(text))
    out.push_back(kg::parse_rational(part));
  return out;
}

struct MatrixCmdOpts {
  std::string matrix_path;
  int degree = 0;
  std::string engine = "main";
  std::string format = "json";
  std::string out_path;
  std::size_t guard = kg::kDefaultGuard;
};

void add_common_flags(CLI::App* cmd, MatrixCmdOpts& opts) {
  cmd->add_option("--matrix", opts.matrix_path, "matrix JSON file")->required();
  cmd->add_option("--degree", opts.degree, "induced degree N")->required();
  cmd->add_option("--engine", opts.engine, "main|oracle")
      ->check(CLI::IsMember({"main", "oracle"}));
  cmd->add_option("--format", opts.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--guard", opts.guard, "induced dimension limit");
  cmd->add_option("--out", opts.out_path, "output file (default stdout)");
}

void emit_matrix(const kg::Mat& m, int degree, int dim,
                 const MatrixCmdOpts& opts) {
  if (opts.format == "csv") {
    emit(kg::matrix_to_csv(m), opts.out_path);
  } else {
    emit(kg::matrix_to_json(m, kg::InducedInfo{degree, dim}).dump(2) + "\n",
         opts.out_path);
  }
}

int run_sympow(const MatrixCmdOpts& opts) {
  kg::Mat A = kg::matrix_from_json(load_json(opts.matrix_path));
  if (!A.square()) throw kg::ParseError("sympow requires a square matrix");
  if (opts.degree < 0) throw UsageError("--degree must be >= 0");
  kg::Mat out = opts.engine == "oracle"
                    ? kg::oracle::bar_via_oracle(A, opts.degree, opts.guard)
                    : kg::bar(A, opts.degree, opts.guard);
  emit_matrix(out, opts.degree, static_cast<int>(A.rows()) - 1, opts);
  return kExitOk;
}

int run_gamma(const MatrixCmdOpts& opts) {
  if (opts.engine != "main")
    throw UsageError("gamma supports only --engine main");
  kg::Mat g = kg::matrix_from_json(load_json(opts.matrix_path));
  if (!g.square()) throw kg::ParseError("gamma requires a square matrix");
  if (opts.degree < 0) throw UsageError("--degree must be >= 0");
  kg::Mat out = kg::gamma(g, opts.degree, opts.guard);
  emit_matrix(out, opts.degree, static_cast<int>(g.rows()) - 1, opts);
  return kExitOk;
}

struct SystemSource {
  std::string system_path;
  std::string reflect;
  std::string scale;
  int classical = -1;

  kg::KGSystem sys;
  std::optional<kg::ReflectionSystem> reflection;
  bool is_classical = false;
};

void add_source_flags(CLI::App* cmd, SystemSource& src) {
  cmd->add_option("--system", src.system_path,
                  "system JSON (or a bundle produced by `build`)");
  cmd->add_option("--reflect", src.reflect,
                  "reflection vector, comma-separated GAUSS scalars");
  cmd->add_option("--scale", src.scale,
                  "diagonal s with D = s^2, comma-separated rationals");
  cmd->add_option("--classical", src.classical,
                  "symmetric binomial system of the given degree");
}

// Resolves the source into a KGSystem; returns leftover bundle JSON when the
// input file was a build bundle.
std::optional<kg::Json> resolve_source(SystemSource& src) {
  int given = (!src.system_path.empty() ? 1 : 0) +
              (!src.reflect.empty() ? 1 : 0) + (src.classical >= 0 ? 1 : 0);
  if (given != 1)
    throw UsageError(
        "exactly one of --system, --reflect, --classical is required");
  if (!src.reflect.empty()) {
    if (src.scale.empty())
      throw UsageError("--reflect requires --scale");
    src.reflection = kg::kg_from_reflection(parse_vector(src.reflect),
                                            parse_rational_vector(src.scale));
    src.sys = src.reflection->sys;
    return std::nullopt;
  }
  if (src.classical >= 0) {
    src.is_classical = true;
    src.sys = kg::classical_binomial(src.classical).sys;
    return std::nullopt;
  }
  kg::Json j = load_json(src.system_path);
  std::optional<kg::Json> bundle;
  if (j.contains("system")) {
    bundle = j;
    j = j.at("system");
  }
  src.sys = kg::system_from_json(j);
  if (bundle && bundle->contains("reflection")) {
    const kg::Json& r = bundle->at("reflection");
    src.reflection = kg::kg_from_reflection(
        kg::scalar_list_from_json(r.at("v")), [&] {
          std::vector<kg::Rational> s;
          for (const auto& e : r.at("s"))
            s.push_back(kg::parse_rational(e.get<std::string>()));
          return s;
        }());
  }
  if (bundle && bundle->contains("classical")) src.is_classical = true;
  return bundle;
}

int run_build(SystemSource& src, int degree, const std::string& out_path,
              std::size_t guard) {
  resolve_source(src);
  if (degree < 0) throw UsageError("--degree must be >= 0");
  kg::Report kreport = kg::verify_k_condition(src.sys);
  if (!kreport.all_pass()) {
    emit(kg::report_to_json(kreport).dump(2) + "\n", out_path);
    return kExitVerifyFail;
  }
  kg::KrawtchoukDegree kd = kg::krawtchouk(src.sys, degree, guard);

  kg::Json bundle;
  bundle["system"] = kg::system_to_json(src.sys);
  if (src.reflection) {
    kg::Json r;
    r["v"] = kg::scalar_list_to_json(src.reflection->v);
    kg::Json s = kg::Json::array();
    for (const auto& si : src.reflection->s)
      s.push_back(kg::rational_to_string(si.re()));
    r["s"] = std::move(s);
    bundle["reflection"] = std::move(r);
  }
  if (src.is_classical) bundle["classical"] = degree;
  bundle["degree"] = degree;
  bundle["Phi"] =
      kg::matrix_to_json(kd.Phi, kg::InducedInfo{degree, src.sys.dim()});
  bundle["B"] = kg::scalar_list_to_json(kd.B.diagonal_entries());
  bundle["pbar"] = kg::scalar_list_to_json(kd.pbar.diagonal_entries());
  bundle["Dbar"] = kg::scalar_list_to_json(kd.Dbar.diagonal_entries());
  kg::Json recs = kg::Json::array(), specs = kg::Json::array();
  for (int j = 0; j <= src.sys.dim(); ++j) {
    auto [rec, spec] = kg::recurrence_identity(src.sys, kd, j);
    recs.push_back(
        kg::matrix_to_json(rec, kg::InducedInfo{degree, src.sys.dim()}));
    specs.push_back(
        kg::matrix_to_json(spec, kg::InducedInfo{degree, src.sys.dim()}));
  }
  bundle["Rec"] = std::move(recs);
  bundle["Spec"] = std::move(specs);
  emit(bundle.dump(2) + "\n", out_path);
  return kExitOk;
}

int run_verify(SystemSource& src, int degree,
               std::vector<std::string> checks, bool inject_corruption,
               const std::string& out_path, std::size_t guard) {
  std::optional<kg::Json> bundle = resolve_source(src);
  if (degree < 0 && bundle && bundle->contains("degree"))
    degree = bundle->at("degree").get<int>();
  if (degree < 0 && src.is_classical && src.classical >= 0)
    degree = src.classical;
  if (degree < 0) throw UsageError("--degree is required");

  if (checks.empty()) {
    checks = {"kcondition", "orthogonality", "dual", "recurrence"};
    if (src.reflection) checks.push_back("reflection");
    if (src.is_classical) checks.push_back("classical");
  }
  for (const auto& c : checks) {
    if (c != "kcondition" && c != "orthogonality" && c != "dual" &&
        c != "recurrence" && c != "reflection" && c != "classical")
      throw UsageError("unknown check: " + c);
    if (c == "reflection" && !src.reflection)
      throw UsageError("reflection check needs --reflect/--scale or a "
                       "reflection-built bundle");
    if (c == "classical" && !src.is_classical)
      throw UsageError("classical check needs --classical");
  }
  auto wants = [&](const std::string& name) {
    for (const auto& c : checks)
      if (c == name) return true;
    return false;
  };

  kg::Report report;
  kg::KrawtchoukDegree kd = kg::krawtchouk(src.sys, degree, guard);
  if (inject_corruption) kd.Phi(0, 0) += kg::GaussianRational(1);

  if (wants("kcondition"))
    for (auto& c : kg::verify_k_condition(src.sys).checks)
      report.checks.push_back(std::move(c));
  if (wants("orthogonality") || wants("dual")) {
    kg::Report ortho = kg::verify_orthogonality(kd);
    if (wants("orthogonality")) report.checks.push_back(ortho.checks[0]);
    if (wants("dual")) report.checks.push_back(ortho.checks[1]);
  }
  if (wants("recurrence"))
    for (auto& c :
         kg::check_recurrences(src.sys, degree, kd.Phi, guard).checks)
      report.checks.push_back(std::move(c));
  if (wants("reflection"))
    for (auto& c :
         kg::verify_reflection_properties(*src.reflection, kd, guard).checks)
      report.checks.push_back(std::move(c));
  if (wants("classical")) {
    kg::ClassicalBinomial cb = kg::classical_binomial(degree);
    if (inject_corruption) cb.kd.Phi(0, 0) += kg::GaussianRational(1);
    for (auto& c : kg::verify_classical(cb).checks)
      report.checks.push_back(std::move(c));
  }

  if (bundle && bundle->contains("Phi")) {
    std::string diff = kg::first_difference(
        kg::matrix_from_json(bundle->at("Phi")), kd.Phi);
    report.add("bundle_phi_matches", diff.empty(), diff);
  }

  emit(kg::report_to_json(report).dump(2) + "\n", out_path);
  return report.all_pass() ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Krawtchouk-Griffiths system toolkit"};
  app.require_subcommand(1);

  MatrixCmdOpts sympow_opts, gamma_opts;
  CLI::App* sympow_cmd =
      app.add_subcommand("sympow", "symmetric power bar(A, N)");
  add_common_flags(sympow_cmd, sympow_opts);
  CLI::App* gamma_cmd =
      app.add_subcommand("gamma", "Lie algebra map Gamma(g) at degree N");
  add_common_flags(gamma_cmd, gamma_opts);

  SystemSource verify_src, build_src;
  int verify_degree = -1, build_degree = -1;
  std::string verify_out, build_out, checks_arg;
  std::size_t verify_guard = kg::kDefaultGuard, build_guard = kg::kDefaultGuard;
  bool inject_corruption = false;

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run identity checks, exit 0 iff all pass");
  add_source_flags(verify_cmd, verify_src);
  verify_cmd->add_option("--degree", verify_degree, "induced degree N");
  verify_cmd->add_option("--checks", checks_arg,
                         "comma-separated subset of kcondition,orthogonality,"
                         "dual,recurrence,reflection,classical");
  verify_cmd->add_option("--guard", verify_guard, "induced dimension limit");
  verify_cmd->add_option("--out", verify_out, "report file (default stdout)");
  verify_cmd->add_flag("--inject-corruption", inject_corruption,
                       "test mode: perturb one Phi entry before checking");

  CLI::App* build_cmd =
      app.add_subcommand("build", "emit the degree-N system bundle");
  add_source_flags(build_cmd, build_src);
  build_cmd->add_option("--degree", build_degree, "induced degree N")
      ->required();
  build_cmd->add_option("--guard", build_guard, "induced dimension limit");
  build_cmd->add_option("--out", build_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (sympow_cmd->parsed()) return run_sympow(sympow_opts);
    if (gamma_cmd->parsed()) return run_gamma(gamma_opts);
    if (build_cmd->parsed())
      return run_build(build_src, build_degree, build_out, build_guard);
    std::vector<std::string> checks;
    if (!checks_arg.empty()) checks = split_commas(checks_arg);
    return run_verify(verify_src, verify_degree, checks, inject_corruption,
                      verify_out, verify_guard);
  } catch (const kg::CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const kg::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const kg::InvalidSystem& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
