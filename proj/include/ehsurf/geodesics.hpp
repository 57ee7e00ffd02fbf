#pragma once

#include <vector>

#include "ehsurf/curves.hpp"
#include "ehsurf/hypersurface.hpp"

namespace ehsurf::geo {

struct GeodesicState {
  double tau = 0;
  hyper::ChartPoint q;
  Vec3 qdot{};  // (sdot, rhodot, phidot)
};

struct FirstIntegrals {
  double E = 0;
  double M1 = 0;
  double M2 = 0;
  bool M2_valid = false;  // only meaningful on constant-r (circle) bases
  int eps = +1;
};

struct Trajectory {
  std::vector<GeodesicState> samples;
  bool hit_floor = false;
  double tau_end = 0;
};

// Christoffel symbols of the induced metric h_t, by Richardson finite
// differences of the closed-form coefficients. gamma[k][i][j] = Gamma^k_ij
// in the (s, rho, phi) chart. With richardson = false the plain O(h^2)
// central difference is used.
using Rank3c = std::array<std::array<std::array<double, 3>, 3>, 3>;
Rank3c induced_christoffels(const PlaneCurve& curve, double t,
                            const hyper::ChartPoint& p, double h_step,
                            bool richardson = true);

struct IntegrateOptions {
  double tol = 1e-10;
  double rho_floor = 1e-6;
  double h_step = 0.0;        // 0 -> max(1e-4, 1e-3 rho) per evaluation
  double max_step = 0.0;      // 0 -> tau_end/16
  int max_steps = 2000000;
};

Trajectory integrate(const PlaneCurve& curve, double t,
                     const GeodesicState& init, double tau_end,
                     const IntegrateOptions& opt = {});

FirstIntegrals first_integrals(const PlaneCurve& curve, double t,
                               const GeodesicState& state);

// Radial equation rho_dot^2(rho; E, M1, M2) for circle bases.
double radial_rho_dot_sq(double rho, double r0, double t, double E, double M1,
                         double M2, int eps);

// Turning point: the root of radial_rho_dot_sq below the start radius,
// or 0 if none exists.
double turning_point(double r0, double t, double E, double M1, double M2,
                     int eps, double rho_hint);

// Distance to the zero section (Hopf circle base of radius r0), t > 0:
//   dist = u1 F(1/2,1/4,3/2,-u1^2/t^4) / (t sqrt(2)),  u1 = rho0^2 (r0^2+1).
double distance_to_zero_section(double rho0, double r0, double t);
// Degenerate case t = 0 has the elementary form sqrt(2 u1).
double distance_to_zero_section_t0(double rho0, double r0);
// Independent quadrature route (1/sqrt2) int_0^{u1} (x^2+t^4)^{-1/4} dx.
double distance_by_quadrature(double rho0, double r0, double t, double tol);

struct ClosedGeodesicParams {
  double M1 = 0;
  double M2 = 0;
  double E = 0;
  double sdot = 0;   // velocity reconstructed at rho0 with rho_dot = 0
  double phidot = 0;
  double period = 0;
};

// Torus-curve parameters for winding numbers (n, m), transcribed from the
// first-integral construction of the flow on circle bases.
ClosedGeodesicParams closed_geodesic_params(double rho0, double r0, int n,
                                            int m, int eps, double t);

double tube_volume(double rho_R, double r0, double t);
// (1/R) log vol(B_R) for each R (distance radii); decreasing toward zero.
std::vector<double> exponential_growth_estimate(double r0, double t,
                                                const std::vector<double>& Rs);

}  // namespace ehsurf::geo
