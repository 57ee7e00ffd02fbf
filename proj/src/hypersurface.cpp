#include "ehsurf/hypersurface.hpp"

#include <cmath>
#include <stdexcept>

namespace ehsurf::hyper {

namespace {

void require_chart(const ChartPoint& p) {
  if (!(p.rho > 0.0))
    throw std::domain_error("hypersurface: chart requires rho > 0");
}

struct Surf {
  CurveData cd;
  double c;       // r^2 + 1
  double u1;      // rho^2 c
  double W;       // u1^2 + t^4
  double sqrtW;
  double K, G, H;
  double t4;
};

Surf surf(const PlaneCurve& curve, double t, const ChartPoint& p) {
  require_chart(p);
  Surf s;
  s.cd = curve_data(curve, p.s);
  s.c = s.cd.r2 + 1.0;
  s.u1 = p.rho * p.rho * s.c;
  s.t4 = t * t * t * t;
  s.W = s.u1 * s.u1 + s.t4;
  s.sqrtW = std::sqrt(s.W);
  s.K = 2.0 * s.u1 / s.sqrtW;
  s.G = 2.0 * s.sqrtW / s.u1;
  s.H = 2.0 * s.t4 / (s.u1 * s.u1 * s.sqrtW);
  return s;
}

InducedMetric metric_from(const Surf& s, const ChartPoint& p) {
  InducedMetric h;
  const double rho = p.rho;
  h.u1 = s.u1;
  h.K = s.K;
  h.G = s.G;
  h.H = s.H;
  h.h11 = (s.K + s.H * rho * rho) * rho * rho;
  h.h12 = s.cd.a * rho * s.K;
  h.h13 = s.cd.b * rho * rho * s.K;
  h.h22 = s.c * s.K;
  h.h23 = 0.0;
  h.h33 = s.c * rho * rho * s.K;
  h.det_h = 4.0 * s.c * s.K * rho * rho * rho * rho;
  return h;
}

}  // namespace

ambient::AmbientPoint embed(const PlaneCurve& curve, const ChartPoint& p) {
  require_chart(p);
  const CurveJet j = curve.eval(p.s);
  const double cp = std::cos(p.phi), sp = std::sin(p.phi);
  const double zeta1 = j.u * cp - j.v * sp;
  const double zeta2 = j.v * cp + j.u * sp;
  return ambient::AmbientPoint{
      {p.rho * zeta1, p.rho * zeta2, p.rho * cp, p.rho * sp}};
}

std::array<Vec4, 3> embedding_tangents(const PlaneCurve& curve,
                                       const ChartPoint& p) {
  require_chart(p);
  const CurveJet j = curve.eval(p.s);
  const double cp = std::cos(p.phi), sp = std::sin(p.phi);
  const double zeta1 = j.u * cp - j.v * sp;
  const double zeta2 = j.v * cp + j.u * sp;
  const Vec4 ds = {p.rho * (j.du * cp - j.dv * sp),
                   p.rho * (j.dv * cp + j.du * sp), 0.0, 0.0};
  const Vec4 drho = {zeta1, zeta2, cp, sp};
  const Vec4 dphi = {-p.rho * zeta2, p.rho * zeta1, -p.rho * sp, p.rho * cp};
  return {ds, drho, dphi};
}

InducedMetric induced_metric(const PlaneCurve& curve, double t,
                             const ChartPoint& p) {
  return metric_from(surf(curve, t, p), p);
}

FrameData frame(const PlaneCurve& curve, double t, const ChartPoint& p) {
  const Surf s = surf(curve, t, p);
  const InducedMetric h = metric_from(s, p);
  FrameData f;
  f.Sigma = p.rho / std::sqrt(h.det_h);
  f.D = h.h22 * f.Sigma;
  f.E = -h.h12 * f.Sigma;
  f.F = -h.h13 / (p.rho * p.rho) * f.Sigma;
  const double s22 = std::sqrt(h.h22), s33 = std::sqrt(h.h33);
  f.Y1 = {0.0, 1.0 / s22, 0.0};
  f.Y2 = {0.0, 0.0, 1.0 / s33};
  f.Y3 = {f.D, f.E, f.F};
  f.omega1 = {-s22 * f.E / f.D, s22, 0.0};
  f.omega2 = {-s33 * f.F / f.D, 0.0, s33};
  f.omega3 = {1.0 / f.D, 0.0, 0.0};
  return f;
}

LogDerivs log_derivs(const PlaneCurve& curve, double t, const ChartPoint& p) {
  const Surf s = surf(curve, t, p);
  LogDerivs d;
  const double rho = p.rho;
  d.logK_r = 2.0 * s.t4 / (s.W * rho);
  d.logK_rr = -2.0 * s.t4 / (s.W * rho * rho) -
              8.0 * s.t4 * rho * rho * s.c * s.c / (s.W * s.W);
  d.logSigma_r = -1.0 / rho - 0.5 * d.logK_r;
  d.logD_r = -1.0 / rho + 0.5 * d.logK_r;
  d.logD_rr = 1.0 / (rho * rho) + 0.5 * d.logK_rr;
  return d;
}

ConnectionData connection(const PlaneCurve& curve, double t,
                          const ChartPoint& p) {
  const Surf s = surf(curve, t, p);
  const LogDerivs d = log_derivs(curve, t, p);
  const double s22 = std::sqrt(s.c * s.K);
  ConnectionData c;
  c.c1 = (1.0 / s22) * (1.0 / p.rho + 0.5 * d.logK_r);
  c.c2 = (1.0 / s22) * d.logD_r;
  return c;
}

CurvatureData curvature(const PlaneCurve& curve, double t,
                        const ChartPoint& p) {
  const Surf s = surf(curve, t, p);
  const LogDerivs d = log_derivs(curve, t, p);
  const double h22 = s.c * s.K;
  const double rho = p.rho;
  CurvatureData r;
  r.R1212 = (0.5 / h22) * (d.logK_r / rho + d.logK_rr);
  r.R2323 = -(0.5 / h22) * (2.0 / rho + d.logK_r) * d.logD_r;
  r.R1313 = (0.5 / h22) *
            (-2.0 * d.logD_rr + d.logK_r * d.logD_r + 2.0 * d.logD_r * d.logD_r);
  const double W32 = s.W * s.sqrtW;
  r.Ric = {s.t4 / W32, (2.0 * s.t4 - s.u1 * s.u1) / (2.0 * W32),
           (-4.0 * s.t4 - s.u1 * s.u1) / (2.0 * W32)};
  r.S = -s.u1 * s.u1 / W32;
  return r;
}

double scalar_curvature_u1(double u1, double t) {
  const double t4 = t * t * t * t;
  const double W = u1 * u1 + t4;
  return -u1 * u1 / (W * std::sqrt(W));
}

Vec4 unit_normal(const PlaneCurve& curve, double t, const ChartPoint& p) {
  const Surf s = surf(curve, t, p);
  const double cp = std::cos(p.phi), sp = std::sin(p.phi);
  const double w1 = s.cd.dv * cp + s.cd.du * sp;
  const double w2 = s.cd.du * cp - s.cd.dv * sp;
  // r w3 and r w4 stay regular through r = 0:
  const double rw3 = s.cd.a * sp + s.cd.b * cp;
  const double rw4 = s.cd.a * cp - s.cd.b * sp;
  const double coef = 0.5 * std::sqrt(s.K / s.c);
  return {coef * w1, -coef * w2, -coef * rw3, coef * rw4};
}

SecondForm second_form(const PlaneCurve& curve, double t,
                       const ChartPoint& p) {
  const Surf s = surf(curve, t, p);
  const FrameData f = frame(curve, t, p);
  const double rho = p.rho;

  SecondForm out;
  const double pre = 0.5 * rho * std::sqrt(s.K / s.c);
  const double euclid_kg = s.cd.du * s.cd.ddv - s.cd.dv * s.cd.ddu;
  const double II11 = pre * (s.G * euclid_kg - 2.0 * s.H * rho * rho * s.cd.b);
  const double II13 = pre * s.K;
  out.II_coord = Mat3::zero();
  out.II_coord(0, 0) = II11;
  out.II_coord(0, 2) = II13;
  out.II_coord(2, 0) = II13;

  // Congruence with the frame matrix A (rows = frame vectors in coordinates).
  Mat3 A = Mat3::zero();
  for (int j = 0; j < 3; ++j) {
    A(0, j) = f.Y1[j];
    A(1, j) = f.Y2[j];
    A(2, j) = f.Y3[j];
  }
  out.II_frame = A * out.II_coord * transpose(A);

  const double kg = geodesic_curvature(curve, p.s);
  out.mean_H = std::sqrt(2.0 / s.sqrtW) * kg;
  const double beta = (s.K / (4.0 * rho)) * std::sqrt(s.K / s.c);
  const double disc = std::sqrt(out.mean_H * out.mean_H + 4.0 * beta * beta);
  out.kappas = {0.0, 0.5 * (out.mean_H + disc), 0.5 * (out.mean_H - disc)};
  out.sigma2 = out.kappas[1] * out.kappas[2];
  return out;
}

}  // namespace ehsurf::hyper
