#pragma once

#include "ehsurf/ambient.hpp"
#include "ehsurf/curves.hpp"
#include "ehsurf/linalg.hpp"

namespace ehsurf::hyper {

// Chart (s, rho, phi) on the complement of the zero section;
// the embedding is Psi(s,rho,phi) = (rho zeta1, rho zeta2, rho cos phi,
// rho sin phi) with zeta1 = u cos phi - v sin phi, zeta2 = v cos phi + u sin phi.
struct ChartPoint {
  double s = 0;
  double rho = 1;
  double phi = 0;
};

struct InducedMetric {
  double h11, h12, h13, h22, h23, h33;
  double det_h;
  double u1;  // rho^2 (r^2 + 1)
  double K, G, H;
};

struct FrameData {
  double D, E, F, Sigma;
  // Frame vectors in the (d_s, d_rho, d_phi) basis.
  Vec3 Y1, Y2, Y3;
  // Dual coframe; omega[i] holds the coefficients of (ds, drho, dphi).
  Vec3 omega1, omega2, omega3;
};

struct ConnectionData {
  double c1;  // omega_12 = c1 * omega^2
  double c2;  // omega_13 = -c2 * omega^3
  // omega_23 vanishes identically.
};

struct CurvatureData {
  double R1212, R1313, R2323;
  Vec3 Ric;  // diagonal (R11, R22, R33) in the orthonormal frame
  double S;
};

struct SecondForm {
  Mat3 II_coord;  // coordinate basis (s, rho, phi)
  Mat3 II_frame;  // orthonormal frame
  double mean_H;
  Vec3 kappas;    // principal curvatures, kappas[0] = 0 pinned analytically
  double sigma2;  // kappa1 kappa2 + kappa1 kappa3 + kappa2 kappa3
};

// Closed-form rho-derivatives feeding the connection and curvature.
struct LogDerivs {
  double logK_r, logK_rr;
  double logSigma_r;
  double logD_r, logD_rr;
};

ambient::AmbientPoint embed(const PlaneCurve& curve, const ChartPoint& p);

InducedMetric induced_metric(const PlaneCurve& curve, double t,
                             const ChartPoint& p);
FrameData frame(const PlaneCurve& curve, double t, const ChartPoint& p);
ConnectionData connection(const PlaneCurve& curve, double t,
                          const ChartPoint& p);
LogDerivs log_derivs(const PlaneCurve& curve, double t, const ChartPoint& p);
CurvatureData curvature(const PlaneCurve& curve, double t,
                        const ChartPoint& p);
Vec4 unit_normal(const PlaneCurve& curve, double t, const ChartPoint& p);
SecondForm second_form(const PlaneCurve& curve, double t, const ChartPoint& p);

// Coordinate tangents of the embedding (columns Psi_* d_s, d_rho, d_phi).
std::array<Vec4, 3> embedding_tangents(const PlaneCurve& curve,
                                       const ChartPoint& p);

// Scalar curvature as a function of u1 = rho^2(r^2+1) alone.
double scalar_curvature_u1(double u1, double t);

}  // namespace ehsurf::hyper
