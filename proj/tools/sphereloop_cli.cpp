// Command-line driver for the sphereloop C API.
//
// Exit codes: 0 all predictions confirmed, 1 a prediction violated,
// 2 usage error, 3 input or precondition error.

#include <cerrno>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sphereloop/sphereloop.h"

namespace {

constexpr int kPass = 0;
constexpr int kViolated = 1;
constexpr int kUsage = 2;
constexpr int kInput = 3;

struct CString {
  char* p = nullptr;
  ~CString() { sl_string_free(p); }
};

struct PointDeleter {
  void operator()(sl_point* p) const { sl_point_destroy(p); }
};
using PointPtr = std::unique_ptr<sl_point, PointDeleter>;

int report_error(sl_status s) {
  std::cerr << "error (" << sl_status_name(s) << "): " << sl_last_error() << "\n";
  return s == SL_ERR_INVALID_ARGUMENT ? kUsage : kInput;
}

bool write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return static_cast<bool>(std::cout.flush());
  }
  std::ofstream f(path, std::ios::binary);
  f << text;
  return static_cast<bool>(f);
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream f(path, std::ios::binary);
  if (!f) return false;
  std::ostringstream ss;
  ss << f.rdbuf();
  out = ss.str();
  return true;
}

bool parse_coords(const std::string& text, std::vector<double>& out) {
  out.clear();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const char* b = item.c_str();
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(b, &end);
    while (end && *end == ' ') ++end;
    if (end == b || *end != '\0' || errno == ERANGE) return false;
    out.push_back(v);
  }
  return !out.empty();
}

int make_point(const std::string& text, const char* name, PointPtr& out) {
  std::vector<double> c;
  if (!parse_coords(text, c)) {
    std::cerr << "error: " << name << " must be a comma-separated list of numbers\n";
    return kInput;
  }
  sl_point* p = nullptr;
  if (const sl_status s = sl_point_create(nullptr, c.data(), c.size(), &p); s != SL_OK) {
    std::cerr << "error: " << name << ": " << sl_last_error() << "\n";
    return kInput;
  }
  out.reset(p);
  return kPass;
}

std::string point_csv(const sl_point* p) {
  std::vector<double> c(sl_point_dim(p));
  sl_point_coords(p, c.data(), c.size());
  std::string s;
  char buf[32];
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", c[i] == 0.0 ? 0.0 : c[i]);
    s += (i ? "," : "") + std::string(buf);
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Global left loop on the unit sphere: verification campaigns, curves, factorization, finite models"};
  app.set_version_flag("--version", std::string(sl_version()));
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "Run seeded property campaigns and emit a JSON report");
  std::vector<int> dims{2, 3, 4, 5, 6, 7, 8};
  int samples = 1000;
  std::uint64_t seed = 42;
  std::vector<std::string> suites;
  std::string verify_out;
  double eps_unit = 0, eps_pole = 0, eps_op = 0, eps_res = 0;
  verify->add_option("--dims", dims, "Ambient dimensions (comma separated)")->delimiter(',');
  verify->add_option("--samples", samples, "Samples per law and dimension");
  verify->add_option("--seed", seed, "PRNG seed");
  verify->add_option("--suites", suites, "kikkawa,lpa,bol,metric,semidirect,models")->delimiter(',');
  verify->add_option("--out", verify_out, "Write the report here instead of stdout");
  verify->add_option("--eps-unit", eps_unit, "Override eps_unit");
  verify->add_option("--eps-pole", eps_pole, "Override eps_pole");
  verify->add_option("--eps-op", eps_op, "Override eps_op");
  verify->add_option("--eps-res", eps_res, "Override eps_res");

  // curve
  auto* curve = app.add_subcommand("curve", "Sample a spherical line or equidistant curve as CSV");
  std::string kind, cx, cy, curve_out;
  double t0 = 0.0, t1 = 1.0;
  int steps = 11;
  curve->add_option("kind", kind, "line or equi")->required()->check(CLI::IsMember({"line", "equi"}));
  curve->add_option("--x", cx, "First point, e.g. 1,0,0")->required();
  curve->add_option("--y", cy, "Second point")->required();
  curve->add_option("--t0", t0, "Start of the t-range");
  curve->add_option("--t1", t1, "End of the t-range");
  curve->add_option("--steps", steps, "Number of rows (>= 2)");
  curve->add_option("--out", curve_out, "Write CSV here instead of stdout");

  // factorize
  auto* fact = app.add_subcommand("factorize", "Factor an orthogonal matrix as L_u U with U in O(V)");
  std::string matrix_file, fact_out;
  fact->add_option("matrix", matrix_file, "JSON array-of-arrays file")->required();
  fact->add_option("--out", fact_out, "Write JSON here instead of stdout");

  // table
  auto* table = app.add_subcommand("table", "Print a finite model's Cayley table");
  std::string model;
  int order = 0;
  table->add_option("model", model, "Model name")->required()->check(CLI::IsMember({"zn"}));
  table->add_option("n", order, "Order (odd, >= 3)")->required();

  // isotopy
  auto* iso = app.add_subcommand("isotopy", "Derive the B-loop x.y = x^{1/2} * (e * y) and check its laws");
  std::string table_file;
  int e = 0;
  iso->add_option("table", table_file, "Cayley table file (\"n= k\" then k rows)")->required();
  iso->add_option("e", e, "Base element")->required();

  // solutions
  auto* sol = app.add_subcommand("solutions", "Show two solutions of x odot a = -a^{-1}");
  std::string ca;
  sol->add_option("--a", ca, "The point a, e.g. 0,1,0")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kPass : kUsage;
  }

  if (verify->parsed()) {
    nlohmann::json cfg{{"dims", dims}, {"samples", samples}, {"seed", seed}};
    if (!suites.empty()) cfg["suites"] = suites;
    nlohmann::json tol = nlohmann::json::object();
    if (verify->count("--eps-unit")) tol["eps_unit"] = eps_unit;
    if (verify->count("--eps-pole")) tol["eps_pole"] = eps_pole;
    if (verify->count("--eps-op")) tol["eps_op"] = eps_op;
    if (verify->count("--eps-res")) tol["eps_res"] = eps_res;
    if (!tol.empty()) cfg["tolerances"] = tol;
    CString report;
    int pass = 0;
    if (const sl_status s = sl_verify(cfg.dump().c_str(), &report.p, &pass); s != SL_OK) return report_error(s);
    if (!write_output(report.p, verify_out)) {
      std::cerr << "error: cannot write " << verify_out << "\n";
      return kInput;
    }
    if (!pass) std::cerr << "prediction violated: see failing entries in the report\n";
    return pass ? kPass : kViolated;
  }

  if (curve->parsed()) {
    PointPtr x, y;
    if (const int rc = make_point(cx, "--x", x); rc != kPass) return rc;
    if (const int rc = make_point(cy, "--y", y); rc != kPass) return rc;
    if (steps < 2) {
      std::cerr << "error: --steps must be >= 2\n";
      return kUsage;
    }
    CString csv;
    const sl_curve_kind k = kind == "line" ? SL_CURVE_LINE : SL_CURVE_EQUI;
    if (const sl_status s = sl_curve_csv(nullptr, k, x.get(), y.get(), t0, t1, steps, &csv.p); s != SL_OK)
      return report_error(s);
    if (!write_output(csv.p, curve_out)) {
      std::cerr << "error: cannot write " << curve_out << "\n";
      return kInput;
    }
    return kPass;
  }

  if (fact->parsed()) {
    std::string text;
    if (!read_file(matrix_file, text)) {
      std::cerr << "error: cannot read " << matrix_file << "\n";
      return kInput;
    }
    sl_context* raw = nullptr;
    sl_context_create(&raw);
    std::unique_ptr<sl_context, void (*)(sl_context*)> ctx(raw, sl_context_destroy);
    sl_context_set_tolerances(ctx.get(), 1e-12, 1e-10, 1e-8, 1e-9);
    CString out;
    double residual = 0.0;
    if (const sl_status s = sl_factorize_json(ctx.get(), text.c_str(), &out.p, &residual); s != SL_OK) {
      std::cerr << "error (" << sl_status_name(s) << "): " << sl_last_error() << "\n";
      return kInput;
    }
    if (!write_output(out.p, fact_out)) {
      std::cerr << "error: cannot write " << fact_out << "\n";
      return kInput;
    }
    return residual <= 1e-8 ? kPass : kViolated;
  }

  if (table->parsed()) {
    if (order < 3 || order % 2 == 0) {
      std::cerr << "error: zn needs an odd order >= 3 (2 is not invertible mod " << order << ")\n";
      return kUsage;
    }
    sl_magma* m = nullptr;
    if (const sl_status s = sl_magma_zn_reflection(order, &m); s != SL_OK) return report_error(s);
    CString text;
    sl_magma_to_text(m, &text.p);
    sl_magma_destroy(m);
    std::cout << text.p;
    return kPass;
  }

  if (iso->parsed()) {
    std::string text;
    if (!read_file(table_file, text)) {
      std::cerr << "error: cannot read " << table_file << "\n";
      return kInput;
    }
    sl_magma* q = nullptr;
    if (const sl_status s = sl_magma_parse(text.c_str(), &q); s != SL_OK) {
      std::cerr << "error (" << sl_status_name(s) << "): " << sl_last_error() << "\n";
      return kInput;
    }
    sl_magma* b = nullptr;
    const sl_status s = sl_magma_isotopy(q, e, &b);
    sl_magma_destroy(q);
    if (s != SL_OK) {
      std::cerr << "error (" << sl_status_name(s) << "): " << sl_last_error() << "\n";
      return kInput;
    }
    CString table_text, report;
    int all = 0;
    sl_magma_to_text(b, &table_text.p);
    sl_magma_bloop_report(b, &report.p, &all);
    sl_magma_destroy(b);
    std::cout << table_text.p << "laws:\n" << report.p;
    return all ? kPass : kViolated;
  }

  if (sol->parsed()) {
    PointPtr a;
    if (const int rc = make_point(ca, "--a", a); rc != kPass) return rc;
    int dim = 0;
    sl_point *first = nullptr, *second = nullptr;
    if (const sl_status s = sl_solutions(nullptr, a.get(), &dim, &first, &second); s != SL_OK) {
      std::cerr << "error (" << sl_status_name(s) << "): " << sl_last_error() << "\n";
      return kInput;
    }
    PointPtr f(first), g(second);
    std::cout << "dimension " << dim << "\n" << point_csv(f.get()) << "\n";
    if (g) std::cout << point_csv(g.get()) << "\n";
    return kPass;
  }
  return kUsage;
}
