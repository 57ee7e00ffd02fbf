#pragma once

#include <string>

#include <json.hpp>

#include "ehsurf/curves.hpp"

namespace ehsurf::cli {

struct RunConfig {
  nlohmann::json curve_spec = {{"family", "circle"}, {"r0", 1.0}, {"eps", 1}};
  double t = 1.0;
  double eps = 1.0;
  double lambda = 1.0;
  double a = -1.0;  // <= 0: default 0.01 t
  double tol = 1e-8;
  // grid ranges and counts
  double s_min = 0.0, s_max = -1.0;  // s_max < 0: curve length
  int s_count = 4;
  double rho_min = 0.5, rho_max = 2.0;
  int rho_count = 4;
  double phi_min = 0.0, phi_max = 0.0;
  int phi_count = 1;
  // geodesic run
  double init_s = 0.0, init_rho = 1.0, init_phi = 0.0;
  double init_sdot = 0.0, init_rhodot = 0.0, init_phidot = 0.0;
  double tau_end = 10.0;
  // spinor scan
  std::string spinor_field = "kernel";  // kernel | beta | wk0 | eps
  int beta = -1;
  std::string format = "csv";
  std::string out;
};

RunConfig config_from_json(const nlohmann::json& j);

PlaneCurve curve_of(const RunConfig& cfg);

// Subcommand drivers; each returns the full output document.
std::string cmd_geometry(const RunConfig& cfg);
std::string cmd_geodesic(const RunConfig& cfg);
std::string cmd_spectral(const RunConfig& cfg);
std::string cmd_spinor(const RunConfig& cfg);
// Pass/fail table of oracle cross-checks; ok = all passed.
std::string cmd_verify(const RunConfig& cfg, bool& ok);

// Deterministic numeric formatting: 17 significant digits, '.' decimal.
std::string fmt(double x);

}  // namespace ehsurf::cli
