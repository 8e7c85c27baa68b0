#pragma once

// Seeded verification campaigns, curve sampling and the text/JSON renderings
// used by the C API and the command-line driver.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "sphereloop/loop_laws.hpp"
#include "sphereloop/models.hpp"
#include "sphereloop/spherical_geometry.hpp"

namespace sphereloop {

inline constexpr const char* kReportVersion = "sphereloop-report/1";
inline constexpr const char* kLibraryVersion = "1.0.0";

struct VerifyConfig {
  std::vector<int> dims{2, 3, 4, 5, 6, 7, 8};
  int samples = 1000;
  std::uint64_t seed = 42;
  Tolerances tol;
  std::vector<std::string> suites;  // empty means every suite

  /// kikkawa, lpa, bol, metric, semidirect, models (canonical order).
  static const std::vector<std::string>& all_suites();

  /// Throws InvalidArgument on empty dims, dims < 2 or > 64, samples < 1,
  /// unknown or repeated suites, or bad tolerances.
  void validate() const;

  /// Parses {"dims": [...], "samples": n, "seed": s, "suites": [...],
  /// "tolerances": {...}}. Missing keys keep their defaults.
  static VerifyConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

struct VerifyResult {
  nlohmann::json document;
  bool pass = false;
};

/// Runs the selected suites in canonical order. Deterministic in (config, version).
VerifyResult run_verify(const VerifyConfig& config);

/// Serialized report: two-space indented JSON with a trailing newline.
std::string dump_report(const nlohmann::json& document);

/// t_i = t0 + i (t1 - t0)/(steps - 1); steps >= 2.
std::vector<double> linear_grid(double t0, double t1, int steps);

/// CSV with header t,c0,...,c{dim-1}; CurveKind::Equidistant adds a d_s column
/// holding d_s(eta(t), nu(t)). LF line endings, 17 significant digits.
std::string curve_csv(CurveKind kind, const SpherePoint& x, const SpherePoint& y, const std::vector<double>& ts,
                      const Tolerances& tol = {});

/// {"u": [...], "U": [[...]], "residual": max|L_u U - A|}.
nlohmann::json factorize_json(const Operator& A, const Tolerances& tol = {});

/// Parses a JSON array-of-arrays square matrix.
Operator operator_from_json(const nlohmann::json& j);

/// "name: pass" / "name: FAIL (counterexample ...)" lines.
std::string axiom_report_text(const AxiomReport& report);

/// Comma-separated reals, e.g. "0.6,0.8,0".
std::vector<double> parse_real_list(const std::string& text);

/// %.17g with -0 printed as 0.
std::string format_real(double v);

}  // namespace sphereloop
