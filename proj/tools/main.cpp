#include <clocale>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ehsurf/cli.hpp"

namespace {

int run(int argc, char** argv) {
  using ehsurf::cli::RunConfig;

  CLI::App app{
      "ehsurf: numerical geometry of the line-bundle hypersurfaces over plane "
      "curves in Eguchi-Hanson space"};
  app.require_subcommand(1);

  std::string config_path, out_path, format;
  double t = -1e300, eps = -1e300, lambda = -1e300, tol = -1e300;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON config file");
    sub->add_option("--out", out_path, "output path (default: stdout)");
    sub->add_option("--format", format, "csv|json");
    sub->add_option("--t", t, "metric parameter t");
    sub->add_option("--eps", eps, "approximator parameter eps");
    sub->add_option("--lambda", lambda, "spinor eigenvalue parameter");
    sub->add_option("--tol", tol, "tolerance");
  };

  CLI::App* geometry = app.add_subcommand("geometry", "grid sweep of the induced geometry");
  CLI::App* geodesic = app.add_subcommand("geodesic", "integrate a geodesic");
  CLI::App* spectral = app.add_subcommand("spectral", "Rayleigh quotients and spectral bounds");
  CLI::App* spinor = app.add_subcommand("spinor", "spinor field scan with Dirac residuals");
  CLI::App* verify = app.add_subcommand("verify", "oracle cross-check battery");
  for (CLI::App* sub : {geometry, geodesic, spectral, spinor, verify})
    add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  RunConfig cfg;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "error: cannot open config " << config_path << "\n";
      return 2;
    }
    nlohmann::json j;
    in >> j;
    cfg = ehsurf::cli::config_from_json(j);
  }
  if (t > -1e299) cfg.t = t;
  if (eps > -1e299) cfg.eps = eps;
  if (lambda > -1e299) cfg.lambda = lambda;
  if (tol > -1e299) cfg.tol = tol;
  if (!format.empty()) cfg.format = format;
  if (!out_path.empty()) cfg.out = out_path;

  std::string doc;
  bool ok = true;
  if (geometry->parsed()) doc = ehsurf::cli::cmd_geometry(cfg);
  else if (geodesic->parsed()) doc = ehsurf::cli::cmd_geodesic(cfg);
  else if (spectral->parsed()) doc = ehsurf::cli::cmd_spectral(cfg);
  else if (spinor->parsed()) doc = ehsurf::cli::cmd_spinor(cfg);
  else if (verify->parsed()) doc = ehsurf::cli::cmd_verify(cfg, ok);

  if (!cfg.out.empty()) {
    std::ofstream out(cfg.out);
    if (!out) {
      std::cerr << "error: cannot open output " << cfg.out << "\n";
      return 2;
    }
    out << doc;
  } else {
    std::cout << doc;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  std::setlocale(LC_NUMERIC, "C");
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
