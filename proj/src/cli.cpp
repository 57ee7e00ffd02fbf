#include "ehsurf/cli.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "ehsurf/ambient.hpp"
#include "ehsurf/geodesics.hpp"
#include "ehsurf/hypersurface.hpp"
#include "ehsurf/oracle.hpp"
#include "ehsurf/specfun.hpp"
#include "ehsurf/spectral.hpp"
#include "ehsurf/spinors.hpp"

namespace ehsurf::cli {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

RunConfig config_from_json(const nlohmann::json& j) {
  RunConfig c;
  if (j.contains("curve")) c.curve_spec = j.at("curve");
  c.t = j.value("t", c.t);
  c.eps = j.value("eps", c.eps);
  c.lambda = j.value("lambda", c.lambda);
  c.a = j.value("a", c.a);
  c.tol = j.value("tol", c.tol);
  if (j.contains("grid")) {
    const auto& g = j.at("grid");
    const auto range = [](const nlohmann::json& r, double& lo, double& hi,
                          int& n) {
      lo = r.value("min", lo);
      hi = r.value("max", hi);
      n = r.value("count", n);
    };
    if (g.contains("s")) range(g.at("s"), c.s_min, c.s_max, c.s_count);
    if (g.contains("rho")) range(g.at("rho"), c.rho_min, c.rho_max, c.rho_count);
    if (g.contains("phi")) range(g.at("phi"), c.phi_min, c.phi_max, c.phi_count);
  }
  if (j.contains("init")) {
    const auto& g = j.at("init");
    c.init_s = g.value("s", c.init_s);
    c.init_rho = g.value("rho", c.init_rho);
    c.init_phi = g.value("phi", c.init_phi);
    c.init_sdot = g.value("sdot", c.init_sdot);
    c.init_rhodot = g.value("rhodot", c.init_rhodot);
    c.init_phidot = g.value("phidot", c.init_phidot);
    c.tau_end = g.value("tau_end", c.tau_end);
  }
  c.spinor_field = j.value("spinor_field", c.spinor_field);
  c.beta = j.value("beta", c.beta);
  c.format = j.value("format", c.format);
  c.out = j.value("out", c.out);
  return c;
}

PlaneCurve curve_of(const RunConfig& cfg) { return curve_from_json(cfg.curve_spec); }

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v;
  if (n <= 1) {
    v.push_back(lo);
    return v;
  }
  for (int i = 0; i < n; ++i) v.push_back(lo + (hi - lo) * i / (n - 1));
  return v;
}

}  // namespace

std::string cmd_geometry(const RunConfig& cfg) {
  const PlaneCurve curve = curve_of(cfg);
  const double s_max = cfg.s_max < 0 ? curve.total_length() : cfg.s_max;
  std::ostringstream os;
  os << "s,rho,phi,h11,h12,h13,h22,h23,h33,R11,R22,R33,S,meanH,sigma2\n";
  for (const double s : linspace(cfg.s_min, s_max, cfg.s_count))
    for (const double rho : linspace(cfg.rho_min, cfg.rho_max, cfg.rho_count))
      for (const double phi : linspace(cfg.phi_min, cfg.phi_max, cfg.phi_count)) {
        const hyper::ChartPoint p{s, rho, phi};
        const auto h = hyper::induced_metric(curve, cfg.t, p);
        const auto R = hyper::curvature(curve, cfg.t, p);
        const auto II = hyper::second_form(curve, cfg.t, p);
        os << fmt(s) << ',' << fmt(rho) << ',' << fmt(phi) << ',' << fmt(h.h11)
           << ',' << fmt(h.h12) << ',' << fmt(h.h13) << ',' << fmt(h.h22)
           << ',' << fmt(h.h23) << ',' << fmt(h.h33) << ',' << fmt(R.Ric[0])
           << ',' << fmt(R.Ric[1]) << ',' << fmt(R.Ric[2]) << ',' << fmt(R.S)
           << ',' << fmt(II.mean_H) << ',' << fmt(II.sigma2) << '\n';
      }
  return os.str();
}

std::string cmd_geodesic(const RunConfig& cfg) {
  const PlaneCurve curve = curve_of(cfg);
  geo::GeodesicState init;
  init.q = {cfg.init_s, cfg.init_rho, cfg.init_phi};
  init.qdot = {cfg.init_sdot, cfg.init_rhodot, cfg.init_phidot};
  geo::IntegrateOptions opt;
  opt.tol = cfg.tol;
  const geo::Trajectory traj = geo::integrate(curve, cfg.t, init, cfg.tau_end, opt);
  std::ostringstream os;
  os << "tau,s,rho,phi,sdot,rhodot,phidot,E,M1,M2\n";
  for (const auto& st : traj.samples) {
    const geo::FirstIntegrals fi = geo::first_integrals(curve, cfg.t, st);
    os << fmt(st.tau) << ',' << fmt(st.q.s) << ',' << fmt(st.q.rho) << ','
       << fmt(st.q.phi) << ',' << fmt(st.qdot[0]) << ',' << fmt(st.qdot[1])
       << ',' << fmt(st.qdot[2]) << ',' << fmt(fi.E) << ',' << fmt(fi.M1)
       << ',' << fmt(fi.M2) << '\n';
  }
  return os.str();
}

std::string cmd_spectral(const RunConfig& cfg) {
  const PlaneCurve curve = curve_of(cfg);
  const double a = cfg.a > 0 ? cfg.a : 0.01 * cfg.t;
  nlohmann::json out;
  out["eps"] = cfg.eps;
  out["t"] = cfg.t;
  const auto dr = spectral::dirac_rayleigh(cfg.eps, cfg.t, curve,
                                           std::min(cfg.tol, 1e-8), a);
  out["quotient"] = dr.quotient;
  if (std::isnan(dr.analytic_bound)) {
    out["analytic_bound"] = nullptr;  // outside the regime eps < t, 2eps^4 < t^4
    out["constants"] = nullptr;
  } else {
    out["analytic_bound"] = dr.analytic_bound;
    const CurveData cd = curve_data(curve, 0.0);
    const auto bc =
        spectral::bound_constants(cfg.eps, cfg.t, a, std::sqrt(cd.r2));
    out["constants"] = {{"Pa", bc.P_a}, {"mu", bc.mu}, {"M", bc.M},
                        {"N", bc.N},    {"Q", bc.Q}};
  }
  const auto lr =
      spectral::laplace_rayleigh(cfg.eps, cfg.t, curve, std::min(cfg.tol, 1e-8));
  out["laplace"] = {{"numerator", lr.numerator},
                    {"denominator", lr.denominator},
                    {"quotient", lr.quotient}};
  if (cfg.t <= cfg.eps)  // the 8/(21 eps^2) estimate needs t <= eps
    out["laplace"]["bound"] = 8.0 / (21.0 * cfg.eps * cfg.eps);
  else
    out["laplace"]["bound"] = nullptr;
  if (cfg.t > 0) {
    const auto rb = spectral::ricci_spectral_bounds(cfg.t);
    out["ricci"] = {{"lower", rb.ricci_lower}, {"mu0_upper", rb.mu0_upper}};
  }
  return out.dump(2) + "\n";
}

std::string cmd_spinor(const RunConfig& cfg) {
  const PlaneCurve curve = curve_of(cfg);
  spin::SpinorField field;
  if (cfg.spinor_field == "kernel") {
    field = spin::harmonic_kernel_field(curve, {1.0, 0.0}, {0.0, 1.0});
  } else if (cfg.spinor_field == "beta") {
    if (!curve.is_circle())
      throw std::invalid_argument("spinor beta scan needs a circle base");
    // the kernel combination carries equal components
    field = spin::harmonic_spinor_beta(cfg.beta, {1.0, 0.0}, {1.0, 0.0},
                                       curve.circle_radius(), cfg.t,
                                       curve.circle_eps());
  } else if (cfg.spinor_field == "wk0") {
    field = spin::wk_spinor_t0(curve, cfg.lambda);
  } else if (cfg.spinor_field == "eps") {
    field = spin::psi_eps_field(curve, cfg.eps, {1.0, 0.0}, {0.0, 1.0});
  } else {
    throw std::invalid_argument("unknown spinor field " + cfg.spinor_field);
  }
  const double t_geom = (cfg.spinor_field == "wk0") ? 0.0 : cfg.t;
  const double s_max = cfg.s_max < 0 ? curve.total_length() : cfg.s_max;
  std::ostringstream os;
  os << "s,rho,phi,re_psi1,im_psi1,re_psi2,im_psi2,abs_dirac\n";
  for (const double s : linspace(cfg.s_min, s_max, cfg.s_count))
    for (const double rho : linspace(cfg.rho_min, cfg.rho_max, cfg.rho_count))
      for (const double phi : linspace(cfg.phi_min, cfg.phi_max, cfg.phi_count)) {
        const hyper::ChartPoint p{s, rho, phi};
        const spin::SpinorJet j = field.eval(p);
        const spin::Spinor D = spin::dirac_apply(field, curve, t_geom, p);
        os << fmt(s) << ',' << fmt(rho) << ',' << fmt(phi) << ','
           << fmt(j.psi.c1.real()) << ',' << fmt(j.psi.c1.imag()) << ','
           << fmt(j.psi.c2.real()) << ',' << fmt(j.psi.c2.imag()) << ','
           << fmt(spin::norm(D)) << '\n';
      }
  return os.str();
}

std::string cmd_verify(const RunConfig& cfg, bool& ok) {
  std::ostringstream os;
  ok = true;
  std::mt19937_64 rng(20260808);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const auto line = [&](const std::string& name, double err, double tol) {
    const bool pass = err < tol;
    ok = ok && pass;
    os << (pass ? "PASS" : "FAIL") << "  " << name << "  (err=" << fmt(err)
       << ", tol=" << fmt(tol) << ")\n";
  };

  // Ambient: det g = 16 and Ricci flatness at random points.
  {
    double max_det_err = 0, max_ric = 0, max_gamma_err = 0;
    oracle::MetricFn mf;
    mf.dim = 4;
    mf.eval = [&](const double* x, double* g) {
      const ambient::AmbientPoint p{{x[0], x[1], x[2], x[3]}};
      const ambient::AmbientMetric m = ambient::metric(p, cfg.t);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g[i * 4 + j] = m.g(i, j);
    };
    for (int it = 0; it < 20; ++it) {
      Vec4 x;
      double n2 = 0;
      for (int i = 0; i < 4; ++i) {
        x[i] = 2.0 * unif(rng) - 1.0;
        n2 += x[i] * x[i];
      }
      const double target_u1 = 0.5 + 20.0 * unif(rng);
      const double scale = std::sqrt(target_u1 / n2);
      for (int i = 0; i < 4; ++i) x[i] *= scale;
      const ambient::AmbientPoint p{x};
      const ambient::AmbientMetric m = ambient::metric(p, cfg.t);
      Mat4 g = m.g;
      max_det_err = std::max(max_det_err, std::abs(det(g) - 16.0));
      const auto ric = oracle::fd_ricci(mf, x.data());
      for (double v : ric) max_ric = std::max(max_ric, std::abs(v));
      const auto gam_fd = oracle::fd_christoffels(mf, x.data());
      const ambient::Rank3 gam = ambient::christoffels_second(p, cfg.t);
      for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j)
            max_gamma_err = std::max(
                max_gamma_err, std::abs(gam[k][i][j] - gam_fd[(k * 4 + i) * 4 + j]));
    }
    line("ambient det g = 16", max_det_err, 1e-9);
    line("ambient Ricci flatness (FD)", max_ric, 1e-4);
    line("ambient Christoffels vs FD", max_gamma_err, 1e-6);
  }

  // Hypersurface: induced metric pullback, curvature vs FD, second form.
  {
    const PlaneCurve curve = curve_of(cfg);
    double max_pull = 0, max_curv = 0, max_sff = 0, max_sigma = 0;
    for (int it = 0; it < 8; ++it) {
      const hyper::ChartPoint p{curve.total_length() * unif(rng),
                                0.5 + 1.5 * unif(rng), 6.28 * unif(rng)};
      // pullback
      const auto tang = hyper::embedding_tangents(curve, p);
      const auto amb = hyper::embed(curve, p);
      const auto am = ambient::metric(amb, cfg.t);
      const auto h = hyper::induced_metric(curve, cfg.t, p);
      const double hval[3][3] = {{h.h11, h.h12, h.h13},
                                 {h.h12, h.h22, h.h23},
                                 {h.h13, h.h23, h.h33}};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          double v = 0;
          for (int aa = 0; aa < 4; ++aa)
            for (int bb = 0; bb < 4; ++bb)
              v += am.g(aa, bb) * tang[i][aa] * tang[j][bb];
          max_pull = std::max(max_pull, std::abs(v - hval[i][j]) /
                                            std::max(1.0, std::abs(hval[i][j])));
        }
      // curvature vs FD (frame congruence)
      oracle::MetricFn mh;
      mh.dim = 3;
      mh.eval = [&](const double* q, double* g) {
        const hyper::ChartPoint pp{q[0], q[1], q[2]};
        const auto hh = hyper::induced_metric(curve, cfg.t, pp);
        const double m[3][3] = {{hh.h11, hh.h12, hh.h13},
                                {hh.h12, hh.h22, hh.h23},
                                {hh.h13, hh.h23, hh.h33}};
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) g[i * 3 + j] = m[i][j];
      };
      const double q3[3] = {p.s, p.rho, p.phi};
      const auto ric_fd = oracle::fd_ricci(mh, q3);
      const auto fr = hyper::frame(curve, cfg.t, p);
      const Vec3 Y[3] = {fr.Y1, fr.Y2, fr.Y3};
      const auto R = hyper::curvature(curve, cfg.t, p);
      for (int i = 0; i < 3; ++i) {
        double v = 0;
        for (int aa = 0; aa < 3; ++aa)
          for (int bb = 0; bb < 3; ++bb)
            v += ric_fd[aa * 3 + bb] * Y[i][aa] * Y[i][bb];
        max_curv = std::max(max_curv,
                            std::abs(v - R.Ric[i]) / std::max(0.02, std::abs(R.Ric[i])));
      }
      // second fundamental form vs FD shape operator
      oracle::ShapeOperatorInput so;
      so.ambient_metric.dim = 4;
      so.ambient_metric.eval = [&](const double* x, double* g) {
        const ambient::AmbientPoint pp{{x[0], x[1], x[2], x[3]}};
        const auto mm = ambient::metric(pp, cfg.t);
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j) g[i * 4 + j] = mm.g(i, j);
      };
      so.embedding = [&](const double* q, double* out4) {
        const auto e = hyper::embed(curve, {q[0], q[1], q[2]});
        for (int i = 0; i < 4; ++i) out4[i] = e.x[i];
      };
      so.normal = [&](const double* q, double* out4) {
        const Vec4 n = hyper::unit_normal(curve, cfg.t, {q[0], q[1], q[2]});
        for (int i = 0; i < 4; ++i) out4[i] = n[i];
      };
      so.ambient_gamma = [&](const double* x, double* out) {
        const auto g =
            ambient::christoffels_second({{x[0], x[1], x[2], x[3]}}, cfg.t);
        for (int k = 0; k < 4; ++k)
          for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) out[(k * 4 + i) * 4 + j] = g[k][i][j];
      };
      const auto II_fd = oracle::fd_shape_operator(so, q3);
      const auto sf = hyper::second_form(curve, cfg.t, p);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          max_sff = std::max(max_sff, std::abs(II_fd[i * 3 + j] -
                                               sf.II_coord(i, j)) /
                                          std::max(0.05, std::abs(sf.II_coord(i, j))));
      max_sigma = std::max(max_sigma, std::abs(sf.sigma2 - R.S / 2.0));
    }
    line("induced metric = ambient pullback", max_pull, 1e-8);
    line("curvature closed forms vs FD Ricci", max_curv, 1e-5);
    line("second form vs FD shape operator", max_sff, 1e-5);
    line("sigma2 = S/2", max_sigma, 1e-10);
  }

  // Geodesics: conservation and the distance routes.
  {
    const PlaneCurve circle = make_circle(1.0);
    geo::GeodesicState init;
    init.q = {0.3, 1.0, 0.1};
    init.qdot = {0.4, 0.2, 0.3};
    const auto fi0 = geo::first_integrals(circle, cfg.t, init);
    const auto traj = geo::integrate(circle, cfg.t, init, 5.0, {});
    double drift = 0;
    for (const auto& st : traj.samples) {
      const auto fi = geo::first_integrals(circle, cfg.t, st);
      drift = std::max(drift, std::abs(fi.E - fi0.E) / fi0.E);
      drift = std::max(drift, std::abs(fi.M1 - fi0.M1) / std::abs(fi0.M1));
      drift = std::max(drift, std::abs(fi.M2 - fi0.M2) / std::abs(fi0.M2));
    }
    line("geodesic first integrals conserved", drift, 1e-8);
    if (cfg.t > 0) {
      const double d1 = geo::distance_to_zero_section(1.0, 1.0, cfg.t);
      const double d2 = geo::distance_by_quadrature(1.0, 1.0, cfg.t, 1e-10);
      line("distance: 2F1 vs quadrature", std::abs(d1 - d2) / d2, 1e-6);
    }
  }

  // Spinors: Dirac kernel residual and WK obstruction sign.
  {
    const PlaneCurve circle = make_circle(1.0);
    const auto f = spin::harmonic_kernel_field(circle, {1.0, 0.3}, {-0.2, 1.0});
    double max_res = 0;
    for (int it = 0; it < 6; ++it) {
      const hyper::ChartPoint p{6.28 * unif(rng), 0.4 + 2.0 * unif(rng),
                                6.28 * unif(rng)};
      max_res = std::max(max_res, spin::norm(spin::dirac_apply(f, circle, cfg.t, p)));
    }
    line("Dirac kernel residual", max_res, 1e-10);
    if (cfg.t > 0) {
      const auto wk = spin::wk_integrability_residual(1.0, 1.0, cfg.t, cfg.lambda);
      const double W = 4.0 + std::pow(cfg.t, 4.0);
      const double equiv = std::abs((wk.lhs_full - wk.rhs_full) * W * W * W / 16.0 -
                                    (wk.lhs - 0.5 * wk.rhs));
      line("WK reduced/full bridge", equiv, 1e-9);
    }
  }

  // Laplace quotient bound at t <= eps.
  {
    const PlaneCurve circle = make_circle(1.0);
    const double eps = std::max(cfg.eps, cfg.t);
    const auto lr = spectral::laplace_rayleigh(eps, std::min(cfg.t, eps), circle, 1e-9);
    const double bound = 8.0 / (21.0 * eps * eps);
    line("Laplace Rayleigh quotient <= 8/(21 eps^2)",
         std::max(0.0, lr.quotient - bound * (1.0 + 1e-8)), 1e-12);
  }

  return os.str();
}

}  // namespace ehsurf::cli
