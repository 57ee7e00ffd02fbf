#pragma once

#include <functional>

namespace ehsurf::specfun {

// Gamma function for x > 0 (Lanczos). Nonpositive arguments are rejected.
double gamma_fn(double x);

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  bool converged = false;
};

// Adaptive Gauss-Kronrod (G7,K15) on a finite interval.
QuadratureResult quadrature_full(const std::function<double(double)>& f,
                                 double a, double b, double tol,
                                 int max_depth = 48);

// Convenience wrapper that throws if the requested tolerance was not met.
double quadrature(const std::function<double(double)>& f, double a, double b,
                  double tol);

// Single fixed Kronrod-15 panel (no adaptivity). Exact to machine precision
// on short smooth panels, and smooth in the endpoints, which matters when
// the result is differentiated numerically.
double gk15_panel(const std::function<double(double)>& f, double a, double b);

// Integral over [a, inf) via the substitution x = a + scale*tan(theta).
// A non-converging tail (max depth reached with growing estimate) is reported
// through `converged`; the throwing wrapper treats it as divergence.
QuadratureResult integrate_halfline_full(const std::function<double(double)>& f,
                                         double a, double tol,
                                         double scale = 1.0,
                                         int max_depth = 52);
double integrate_halfline(const std::function<double(double)>& f, double a,
                          double tol, double scale = 1.0);

// Bracketed root finding (Brent). Requires f(lo)*f(hi) <= 0.
double root_find(const std::function<double(double)>& f, double lo, double hi,
                 double tol);

struct Hyp2F1Args {
  double alpha;
  double beta;
  double gamma;
  double z;  // real, z <= 0
};

// Gauss hypergeometric function for real z <= 0.
//   |z| < 0.9        direct series
//   0.9 <= |z| <= 1.1 Euler transformation, series in z/(z-1)
//   |z| > 1.1        two-term analytic continuation in 1/z
double hyp2f1(const Hyp2F1Args& args, double tol = 1e-14);

// Antiderivative of (a x^2 + t^4)^(-1/4):  (x/t) F(1/2,1/4,3/2, -a x^2/t^4).
double hyp2f1_radial_antiderivative(double x, double a, double t);

// Smooth monotone cutoff: 0 for x <= 0, 1 for x >= 1.
double mollifier_mu(double x);
// Its derivative (exists in closed form up to the cached normalization).
double mollifier_mu_prime(double x);

}  // namespace ehsurf::specfun
