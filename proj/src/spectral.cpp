#include "ehsurf/spectral.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ehsurf/specfun.hpp"

namespace ehsurf::spectral {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

struct FrameDerivs {
  hyper::FrameData f;
  hyper::ConnectionData conn;
  double s22, s33;
  double D_s, D_r, E_s, E_r, F_s, F_r;
};

FrameDerivs frame_derivs(const PlaneCurve& curve, double t,
                         const hyper::ChartPoint& p) {
  FrameDerivs fd;
  fd.f = hyper::frame(curve, t, p);
  fd.conn = hyper::connection(curve, t, p);
  const hyper::InducedMetric h = hyper::induced_metric(curve, t, p);
  const hyper::LogDerivs ld = hyper::log_derivs(curve, t, p);
  const CurveData cd = curve_data(curve, p.s);
  fd.s22 = std::sqrt(h.h22);
  fd.s33 = std::sqrt(h.h33);

  const double c = cd.r2 + 1.0;
  const double a = cd.a, b = cd.b;
  const double a_s = 1.0 + cd.u * cd.ddu + cd.v * cd.ddv;
  const double b_s = cd.u * cd.ddv - cd.v * cd.ddu;
  const double t4 = t * t * t * t;
  const double u1 = p.rho * p.rho * c;
  const double W = u1 * u1 + t4;
  const double logK_s = 2.0 * a * t4 / (c * W);
  const double logc_s = 2.0 * a / c;
  const double sqKc = std::sqrt(h.K / c);

  // D = sqrt(c K) / (2 rho); E = -(a/2) sqrt(K/c); F = -(b/(2 rho)) sqrt(K/c).
  fd.D_r = fd.f.D * ld.logD_r;
  fd.D_s = fd.f.D * (0.5 * logc_s + 0.5 * logK_s);
  fd.E_r = fd.f.E * 0.5 * ld.logK_r;
  fd.E_s = -0.5 * a_s * sqKc - 0.5 * a * sqKc * 0.5 * (logK_s - logc_s);
  fd.F_r = fd.f.F * (-1.0 / p.rho + 0.5 * ld.logK_r);
  fd.F_s = -0.5 * b_s / p.rho * sqKc -
           0.5 * b / p.rho * sqKc * 0.5 * (logK_s - logc_s);
  return fd;
}

}  // namespace

double laplacian_scalar(const ScalarField& field, const PlaneCurve& curve,
                        double t, const hyper::ChartPoint& p) {
  const FrameDerivs fd = frame_derivs(curve, t, p);
  const hyper::LogDerivs ld = hyper::log_derivs(curve, t, p);
  const ScalarJet j = field.eval(p);

  const double Y1f = j.fr / fd.s22;

  // Y1 Y1 f = (f_rr - (1/2)(log h22)_r f_r)/h22, (log h22)_r = (log K)_r.
  const double Y1Y1f =
      (j.frr - 0.5 * ld.logK_r * j.fr) / (fd.s22 * fd.s22);
  const double Y2Y2f = j.fpp / (fd.s33 * fd.s33);

  const double dY3f_ds = fd.D_s * j.fs + fd.f.D * j.fss + fd.E_s * j.fr +
                         fd.f.E * j.fsr + fd.F_s * j.fp + fd.f.F * j.fsp;
  const double dY3f_dr = fd.D_r * j.fs + fd.f.D * j.fsr + fd.E_r * j.fr +
                         fd.f.E * j.frr + fd.F_r * j.fp + fd.f.F * j.frp;
  const double dY3f_dp = fd.f.D * j.fsp + fd.f.E * j.frp + fd.f.F * j.fpp;
  const double Y3Y3f = fd.f.D * dY3f_ds + fd.f.E * dY3f_dr + fd.f.F * dY3f_dp;

  return -(Y1Y1f + Y2Y2f + Y3Y3f + (fd.conn.c1 - fd.conn.c2) * Y1f);
}

double exhaustion_phi_star(const PlaneCurve& curve,
                           const hyper::ChartPoint& p) {
  const CurveData cd = curve_data(curve, p.s);
  return p.rho * std::sqrt(cd.r2 + 1.0);
}

double exhaustion_phi(const PlaneCurve& curve, const hyper::ChartPoint& p) {
  return exhaustion_phi_star(curve, p) * specfun::mollifier_mu(p.rho);
}

ScalarField phi_star_field(const PlaneCurve& curve) {
  ScalarField f;
  f.eval = [curve](const hyper::ChartPoint& p) {
    const CurveData cd = curve_data(curve, p.s);
    const double c = cd.r2 + 1.0;
    const double sc = std::sqrt(c);
    const double a = cd.a;
    const double a_s = 1.0 + cd.u * cd.ddu + cd.v * cd.ddv;
    ScalarJet j;
    j.f = p.rho * sc;
    j.fs = p.rho * a / sc;
    j.fr = sc;
    j.fss = p.rho * (a_s / sc - a * a / (sc * c));
    j.fsr = a / sc;
    j.frr = 0.0;
    return j;
  };
  return f;
}

double grad_phi_star_sq(const PlaneCurve& curve, double t,
                        const hyper::ChartPoint& p) {
  const hyper::InducedMetric h = hyper::induced_metric(curve, t, p);
  return 1.0 / h.K;
}

double laplacian_phi_star(const PlaneCurve& curve, double t,
                          const hyper::ChartPoint& p) {
  const CurveData cd = curve_data(curve, p.s);
  const double c = cd.r2 + 1.0;
  const double u1 = p.rho * p.rho * c;
  const double t4 = t * t * t * t;
  const double W = u1 * u1 + t4;
  return std::sqrt(W) / (2.0 * p.rho * p.rho * p.rho * c * std::sqrt(c)) *
         (t4 / W - 2.0);
}

SubharmonicReport subharmonic_report(
    const PlaneCurve& curve, double t,
    const std::vector<hyper::ChartPoint>& grid) {
  SubharmonicReport rep;
  const ScalarField f = phi_star_field(curve);
  for (const auto& p : grid) {
    const double lap = laplacian_scalar(f, curve, t, p);
    rep.max_laplacian = std::max(rep.max_laplacian, lap);
    if (!(lap < 0)) rep.all_negative = false;
    ++rep.n_points;
  }
  return rep;
}

namespace {

// 2D quadrature over (s, rho in (0,inf)) of a closed-form integrand; the
// phi integral contributes the factor 2 pi analytically. For circle bases
// the s integral is a single multiplication.
double surface_integral(const PlaneCurve& curve,
                        const std::function<double(double s, double rho)>& f,
                        double quad_tol, double rho_scale) {
  const double L = curve.total_length();
  if (curve.is_circle()) {
    const double val = specfun::integrate_halfline(
        [&](double rho) { return f(0.0, rho); }, 0.0, quad_tol, rho_scale);
    return 2.0 * kPi * L * val;
  }
  const double outer = specfun::quadrature(
      [&](double s) {
        return specfun::integrate_halfline(
            [&](double rho) { return f(s, rho); }, 0.0, quad_tol, rho_scale);
      },
      0.0, L, quad_tol * 4.0);
  return 2.0 * kPi * outer;
}

}  // namespace

RayleighResult laplace_rayleigh(double eps, double t, const PlaneCurve& curve,
                                double quad_tol) {
  if (!(eps > 0)) throw std::domain_error("laplace_rayleigh: eps > 0");
  if (t < 0) throw std::domain_error("laplace_rayleigh: t >= 0");
  const double e4 = eps * eps * eps * eps;
  const double t4 = t * t * t * t;

  const auto num_integrand = [&](double s, double rho) {
    const CurveData cd = curve_data(curve, s);
    const double c = cd.r2 + 1.0;
    const double u1 = rho * rho * c;
    const double W = u1 * u1 + t4;
    const double We = u1 * u1 + e4;
    // |grad H_eps^2|^2 sqrt(det h) = 8 sqrt8 rho^7 c^3 W^{1/4} / We^3
    return 8.0 * std::sqrt(8.0) * std::pow(rho, 7.0) * c * c * c *
           std::pow(W, 0.25) / (We * We * We);
  };
  const auto den_integrand = [&](double s, double rho) {
    const CurveData cd = curve_data(curve, s);
    const double c = cd.r2 + 1.0;
    const double u1 = rho * rho * c;
    const double W = u1 * u1 + t4;
    const double We = u1 * u1 + e4;
    // H_eps^4 sqrt(det h) = 4 sqrt8 rho^3 c / (We W^{1/4})
    return 4.0 * std::sqrt(8.0) * rho * rho * rho * c /
           (We * std::pow(W, 0.25));
  };

  RayleighResult r;
  r.numerator = surface_integral(curve, num_integrand, quad_tol, 1.0);
  r.denominator = surface_integral(curve, den_integrand, quad_tol, 1.0);
  r.quotient = r.numerator / r.denominator;
  return r;
}

BoundConstants bound_constants(double eps, double t, double a, double r) {
  if (!(a > 0)) throw std::domain_error("bound_constants: a > 0");
  if (!(eps > 0) || !(eps < t))
    throw std::domain_error("bound_constants: regime requires 0 < eps < t");
  BoundConstants bc;
  bc.a = a;
  const double e4 = eps * eps * eps * eps;
  const double t4 = t * t * t * t;
  const double c = r * r + 1.0;
  bc.mu = std::pow(2.0 * std::sqrt(2.0) * (6.0 * e4 + t4) / a, 0.2);
  bc.P_a = bc.mu / std::sqrt(c);
  const double mu4 = std::pow(bc.mu, 4.0);
  bc.M = 2.0 * std::sqrt(2.0) * std::pow(bc.mu, 7.0) /
         (std::pow(mu4 + e4, 1.5) * std::pow(mu4 + t4, 0.25));
  bc.N = t / (std::sqrt(2.0) * std::pow(t4 - e4, 0.25));
  bc.kappa = std::pow(46656.0 / 3125.0, 0.25);  // (6^6/5^5)^{1/4}
  // x (x^4 + eps^4) = 1 with x = rho sqrt(c); unique positive root.
  const double x = specfun::root_find(
      [&](double xx) { return xx * (xx * xx * xx * xx + e4) - 1.0; }, 0.0, 1.0,
      1e-14);
  bc.Q = x / std::sqrt(c);
  return bc;
}

DiracRayleighResult dirac_rayleigh(double eps, double t,
                                   const PlaneCurve& curve, double quad_tol,
                                   double a_param) {
  if (!(eps > 0) || !(t > 0))
    throw std::domain_error("dirac_rayleigh: eps, t > 0");
  const double e4 = eps * eps * eps * eps;
  const double t4 = t * t * t * t;
  const double a = (a_param > 0) ? a_param : 0.01 * t;

  const auto common = [&](double s, double rho, double& mSe_pe, double& qe) {
    const CurveData cd = curve_data(curve, s);
    const double c = cd.r2 + 1.0;
    const double u1 = rho * rho * c;
    const double W = u1 * u1 + t4;
    const double We = u1 * u1 + e4;
    const double det_h = 8.0 * std::pow(rho, 6.0) * c * c / std::sqrt(W);
    const double mSe = u1 * u1 / std::pow(We, 1.5);
    mSe_pe = mSe * std::sqrt(det_h) *
             std::exp(-6.0 * e4 * rho * std::sqrt(c));
    const double h22 = 2.0 * rho * rho * c * c / std::sqrt(W);
    const double diff = 1.0 / We - rho * std::sqrt(c);
    qe = 9.0 * e4 * e4 / (h22 * rho * rho) * diff * diff;
  };

  DiracRayleighResult out;
  const double rho_scale = std::max(1.0, 1.0 / (6.0 * e4));
  out.norm2 = surface_integral(
      curve,
      [&](double s, double rho) {
        double mSe_pe, qe;
        common(s, rho, mSe_pe, qe);
        return mSe_pe;
      },
      quad_tol, rho_scale);
  out.dirac_norm2 = surface_integral(
      curve,
      [&](double s, double rho) {
        double mSe_pe, qe;
        common(s, rho, mSe_pe, qe);
        return mSe_pe * qe;
      },
      quad_tol, rho_scale);
  out.quotient = out.dirac_norm2 / out.norm2;

  // The assembled bound is only claimed in the regime eps < t, 2 eps^4 < t^4.
  if (!(eps < t) || !(2.0 * e4 < t4)) {
    out.analytic_bound = std::numeric_limits<double>::quiet_NaN();
    return out;
  }

  // Assembled bound of the estimate chain (per-s, integrated over the curve).
  const double L = curve.total_length();
  const auto bound_num = [&](double s) {
    const CurveData cd = curve_data(curve, s);
    const double c = cd.r2 + 1.0;
    const BoundConstants bc = bound_constants(eps, t, a, std::sqrt(cd.r2));
    const double sc = std::sqrt(c);
    const double decay = std::exp(-6.0 * bc.Q * e4 * sc);
    return 9.0 * std::sqrt(2.0) * bc.N * t / sc *
           (1.0 / (bc.kappa * bc.kappa * eps * eps * eps) * (1.0 - decay) +
            std::pow(eps, 7.0) * decay) /
           (6.0 * e4 * sc);
  };
  const auto bound_den = [&](double s) {
    const CurveData cd = curve_data(curve, s);
    const double c = cd.r2 + 1.0;
    const BoundConstants bc = bound_constants(eps, t, a, std::sqrt(cd.r2));
    const double sc = std::sqrt(c);
    return bc.M / sc * std::exp(-6.0 * bc.P_a * e4 * sc) / (6.0 * e4 * sc);
  };
  double bn, bd;
  if (curve.is_circle()) {
    bn = L * bound_num(0.0);
    bd = L * bound_den(0.0);
  } else {
    bn = specfun::quadrature(bound_num, 0.0, L, 1e-9);
    bd = specfun::quadrature(bound_den, 0.0, L, 1e-9);
  }
  out.analytic_bound = bn / bd;
  return out;
}

RicciBounds ricci_spectral_bounds(double t) {
  if (!(t > 0))
    throw std::domain_error("ricci_spectral_bounds: unbounded for t = 0");
  return {-2.0 / (t * t), 1.0 / (t * t)};
}

}  // namespace ehsurf::spectral
