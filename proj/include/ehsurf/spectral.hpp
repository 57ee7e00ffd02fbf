#pragma once

#include <functional>
#include <vector>

#include "ehsurf/curves.hpp"
#include "ehsurf/hypersurface.hpp"

namespace ehsurf::spectral {

// Value and chart partials (to second order) of a scalar field.
struct ScalarJet {
  double f = 0;
  double fs = 0, fr = 0, fp = 0;
  double fss = 0, fsr = 0, fsp = 0, frr = 0, frp = 0, fpp = 0;
};

enum class Provenance { ClosedForm, FiniteDifference };

struct ScalarField {
  std::function<ScalarJet(const hyper::ChartPoint&)> eval;
  Provenance provenance = Provenance::ClosedForm;
};

// Delta f = -div grad f, assembled in the orthonormal frame with the
// closed-form connection scalars.
double laplacian_scalar(const ScalarField& field, const PlaneCurve& curve,
                        double t, const hyper::ChartPoint& p);

// The exhaustion function phi* = rho sqrt(r^2+1) and its cut-off version
// phi = phi* mu(rho).
double exhaustion_phi_star(const PlaneCurve& curve, const hyper::ChartPoint& p);
double exhaustion_phi(const PlaneCurve& curve, const hyper::ChartPoint& p);
ScalarField phi_star_field(const PlaneCurve& curve);
double grad_phi_star_sq(const PlaneCurve& curve, double t,
                        const hyper::ChartPoint& p);  // = 1/K
// Closed form of Delta phi*.
double laplacian_phi_star(const PlaneCurve& curve, double t,
                          const hyper::ChartPoint& p);

struct SubharmonicReport {
  bool all_negative = true;
  double max_laplacian = -1e300;  // most positive Delta phi* seen
  int n_points = 0;
};
SubharmonicReport subharmonic_report(const PlaneCurve& curve, double t,
                                     const std::vector<hyper::ChartPoint>& grid);

struct RayleighResult {
  double numerator = 0;
  double denominator = 0;
  double quotient = 0;
};

// Test function H_eps^2 derived from the mean-curvature trace; for t <= eps
// the quotient is bounded by 8/(21 eps^2).
RayleighResult laplace_rayleigh(double eps, double t, const PlaneCurve& curve,
                                double quad_tol);

struct BoundConstants {
  double a;
  double mu;      // cutting-point scale mu(eps,t,a)
  double P_a;     // mu / sqrt(r^2+1)
  double M;       // inf_{rho >= P_a} of -S_eps sqrt(det h) times sqrt(r^2+1)
  double N;       // t / (sqrt2 (t^4-eps^4)^{1/4})
  double Q;       // root of rho sqrt(r^2+1)(rho^4(r^2+1)^2 + eps^4) = 1
  double kappa;   // (6^6/5^5)^{1/4}
};

BoundConstants bound_constants(double eps, double t, double a, double r);

struct DiracRayleighResult {
  double norm2 = 0;        // ||psi_eps||^2 / (2 pi C)
  double dirac_norm2 = 0;  // ||D psi_eps||^2 / (2 pi C)
  double quotient = 0;
  double analytic_bound = 0;
};

// Rayleigh quotient of the approximators psi_eps (closed curve, t > 0),
// with the assembled analytic bound for the regime eps < t, 2 eps^4 < t^4.
DiracRayleighResult dirac_rayleigh(double eps, double t,
                                   const PlaneCurve& curve, double quad_tol,
                                   double a_param = -1.0);

struct RicciBounds {
  double ricci_lower;  // -2/t^2
  double mu0_upper;    // t^-2
};
RicciBounds ricci_spectral_bounds(double t);

}  // namespace ehsurf::spectral
