#include "ehsurf/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace ehsurf::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Lanczos approximation, g = 7, 9 coefficients.
const double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

double gamma_positive(double x) {
  if (x < 0.5) {
    // Not reached for x > 0.5; kept for the reflection helper below.
    return kPi / (std::sin(kPi * x) * gamma_positive(1.0 - x));
  }
  x -= 1.0;
  double a = kLanczos[0];
  const double t = x + 7.5;
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x + i);
  return std::sqrt(2.0 * kPi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

// Gamma on the real line minus the poles; used by the 2F1 continuation
// coefficients, which involve negative non-integer arguments.
double gamma_reflect(double x) {
  if (x > 0.0) return gamma_positive(x);
  const double nearest = std::round(x);
  if (std::abs(x - nearest) < 1e-12)
    throw std::domain_error("gamma: pole at nonpositive integer");
  return kPi / (std::sin(kPi * x) * gamma_positive(1.0 - x));
}

// Gauss 7 / Kronrod 15 nodes and weights on [-1,1].
const double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
const double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
const double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct GKEstimate {
  double kronrod;
  double err;
};

GKEstimate gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kXgk[i]);
    fv[14 - i] = f(c + h * kXgk[i]);
  }
  fv[7] = f(c);
  double resk = kWgk[7] * fv[7];
  double resg = kWg[3] * fv[7];
  for (int i = 0; i < 7; ++i) {
    resk += kWgk[i] * (fv[i] + fv[14 - i]);
    if (i % 2 == 1) resg += kWg[i / 2] * (fv[i] + fv[14 - i]);
  }
  resk *= h;
  resg *= h;
  return {resk, std::abs(resk - resg)};
}

// Accepts a panel when its error fits the share of the absolute tolerance
// proportional to its width, so the total stays below tol_density*(b-a).
void adapt(const std::function<double(double)>& f, double a, double b,
           double tol_density, int depth, int max_depth, long& budget,
           double& sum, double& err_sum, bool& hit_depth) {
  const GKEstimate e = gk15(f, a, b);
  --budget;
  const double tol = tol_density * std::abs(b - a);
  if (e.err <= tol || depth >= max_depth || budget <= 0) {
    if (e.err > tol) hit_depth = true;
    sum += e.kronrod;
    err_sum += e.err;
    return;
  }
  const double c = 0.5 * (a + b);
  adapt(f, a, c, tol_density, depth + 1, max_depth, budget, sum, err_sum,
        hit_depth);
  adapt(f, c, b, tol_density, depth + 1, max_depth, budget, sum, err_sum,
        hit_depth);
}

}  // namespace

double gamma_fn(double x) {
  if (!(x > 0.0)) throw std::domain_error("gamma_fn: requires x > 0");
  return gamma_positive(x);
}

QuadratureResult quadrature_full(const std::function<double(double)>& f,
                                 double a, double b, double tol,
                                 int max_depth) {
  if (a == b) return {0.0, 0.0, true};
  // Coarse pass to set an absolute tolerance target from the requested
  // (mostly relative) one.
  const GKEstimate coarse = gk15(f, a, b);
  double scale = std::max(std::abs(coarse.kronrod), 1e-30);
  QuadratureResult out;
  double first_sum = 0.0;
  // The coarse panel can underestimate integrals whose mass sits in a thin
  // region; a second pass rescales the tolerance by the first result, and
  // is only trusted when both passes agree on the magnitude.
  for (int pass = 0; pass < 2; ++pass) {
    double sum = 0.0, err = 0.0;
    bool hit_depth = false;
    long budget = 40000;  // bounds the cost of divergence detection
    const double abs_tol = std::max(tol * scale, 1e-300);
    adapt(f, a, b, abs_tol / std::abs(b - a), 0, max_depth, budget, sum, err,
          hit_depth);
    const bool converged =
        !hit_depth || err <= tol * std::max(std::abs(sum), 1e-30);
    if (pass == 1 &&
        std::abs(sum - first_sum) > 0.5 * std::max(std::abs(sum),
                                                   std::abs(first_sum))) {
      break;  // keep the honest non-converged first pass
    }
    out = {sum, err, converged};
    if (converged || std::abs(sum) <= scale) break;
    first_sum = sum;
    scale = std::abs(sum);
  }
  return out;
}

double quadrature(const std::function<double(double)>& f, double a, double b,
                  double tol) {
  const QuadratureResult r = quadrature_full(f, a, b, tol);
  if (!r.converged)
    throw std::runtime_error("quadrature: tolerance not reached (interval [" +
                             std::to_string(a) + "," + std::to_string(b) +
                             "])");
  return r.value;
}

double gk15_panel(const std::function<double(double)>& f, double a, double b) {
  return gk15(f, a, b).kronrod;
}

QuadratureResult integrate_halfline_full(const std::function<double(double)>& f,
                                         double a, double tol, double scale,
                                         int max_depth) {
  if (!(scale > 0.0)) throw std::invalid_argument("integrate_halfline: scale");
  const auto g = [&](double theta) {
    const double t = std::tan(theta);
    const double x = a + scale * t;
    const double sec2 = 1.0 + t * t;
    return f(x) * scale * sec2;
  };
  // Geometric pre-split toward theta = 0: a large tail scale compresses the
  // near field into a sliver there, which a single top-level panel would
  // step right over. Panels of every dyadic width keep it visible.
  QuadratureResult total{0.0, 0.0, true};
  double lo = 0.0;
  for (int k = 44; k >= 0; --k) {
    const double hi = 0.5 * kPi * std::ldexp(1.0, -k);
    const QuadratureResult part =
        quadrature_full(g, lo, hi, 0.5 * tol, max_depth);
    total.value += part.value;
    total.error += part.error;
    total.converged = total.converged && part.converged;
    lo = hi;
  }
  return total;
}

double integrate_halfline(const std::function<double(double)>& f, double a,
                          double tol, double scale) {
  const QuadratureResult r = integrate_halfline_full(f, a, tol, scale);
  if (!r.converged)
    throw std::runtime_error("integrate_halfline: integral did not converge");
  return r.value;
}

double root_find(const std::function<double(double)>& f, double lo, double hi,
                 double tol) {
  double a = lo, b = hi;
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (fa * fb > 0.0)
    throw std::invalid_argument("root_find: no sign change on bracket");
  // Brent's method.
  double c = a, fc = fa;
  double d = b - a, e = b - a;
  for (int iter = 0; iter < 200; ++iter) {
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 = 2.0 * std::numeric_limits<double>::epsilon() *
                            std::abs(b) + 0.5 * tol;
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) return b;
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      double p, q, r;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        q = fa / fc;
        r = fb / fc;
        p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
        q = (q - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q),
                             std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol1) ? d : (xm > 0 ? tol1 : -tol1);
    fb = f(b);
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
  }
  throw std::runtime_error("root_find: too many iterations");
}

namespace {

// Plain series sum; requires |z| < 1 for convergence.
double hyp2f1_series(double a, double b, double c, double z, double tol) {
  double term = 1.0, sum = 1.0;
  for (int k = 0; k < 100000; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
    sum += term;
    if (std::abs(term) <= tol * std::max(1.0, std::abs(sum)) &&
        std::abs(z) * std::abs((a + k + 1) * (b + k + 1) /
                               ((c + k + 1) * (k + 2.0))) < 1.0)
      return sum;
  }
  throw std::runtime_error("hyp2f1: series did not converge");
}

bool near_nonpositive_integer(double x) {
  return x <= 1e-12 && std::abs(x - std::round(x)) < 1e-12;
}

}  // namespace

double hyp2f1(const Hyp2F1Args& args, double tol) {
  const double a = args.alpha, b = args.beta, c = args.gamma, z = args.z;
  if (near_nonpositive_integer(c))
    throw std::domain_error("hyp2f1: gamma parameter is a nonpositive integer");
  if (z > 0.0)
    throw std::domain_error("hyp2f1: only real z <= 0 is supported");
  if (z == 0.0) return 1.0;
  // Degenerate parameter coincidences reduce to a binomial.
  if (std::abs(c - b) < 1e-12) return std::pow(1.0 - z, -a);
  if (std::abs(c - a) < 1e-12) return std::pow(1.0 - z, -b);

  const double az = -z;
  if (az < 0.9) return hyp2f1_series(a, b, c, z, tol);
  if (az <= 1.1) {
    // Euler transformation maps the seam band to w = z/(z-1), about 1/2.
    const double w = z / (z - 1.0);
    return std::pow(1.0 - z, -a) * hyp2f1_series(a, c - b, c, w, tol);
  }
  // Two-term continuation in 1/z; fails for integer a - b (log case).
  if (std::abs((a - b) - std::round(a - b)) < 1e-10)
    throw std::domain_error(
        "hyp2f1: continuation needs non-integer alpha-beta");
  if (near_nonpositive_integer(c - a) || near_nonpositive_integer(c - b))
    throw std::domain_error("hyp2f1: gamma-coefficient pole in continuation");
  const double w = 1.0 / z;
  const double coef1 = gamma_reflect(c) * gamma_reflect(b - a) /
                       (gamma_reflect(b) * gamma_reflect(c - a));
  const double coef2 = gamma_reflect(c) * gamma_reflect(a - b) /
                       (gamma_reflect(a) * gamma_reflect(c - b));
  const double term1 =
      coef1 * std::pow(az, -a) * hyp2f1_series(a, a + 1.0 - c, a + 1.0 - b, w, tol);
  const double term2 =
      coef2 * std::pow(az, -b) * hyp2f1_series(b, b + 1.0 - c, b + 1.0 - a, w, tol);
  return term1 + term2;
}

double hyp2f1_radial_antiderivative(double x, double a, double t) {
  if (!(t > 0.0))
    throw std::domain_error(
        "hyp2f1_radial_antiderivative: t = 0 needs the elementary limit");
  if (x == 0.0) return 0.0;
  const double z = -a * x * x / (t * t * t * t);
  return (x / t) * hyp2f1({0.5, 0.25, 1.5, z});
}

namespace {

double mollifier_kernel(double y) {
  if (y <= 0.0 || y >= 1.0) return 0.0;
  return std::exp(-1.0 / (y * y) - 1.0 / ((1.0 - y) * (1.0 - y)));
}

double mollifier_norm() {
  static const double z =
      quadrature([](double y) { return mollifier_kernel(y); }, 0.0, 1.0, 1e-12);
  return z;
}

}  // namespace

double mollifier_mu(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double num =
      quadrature([](double y) { return mollifier_kernel(y); }, 0.0, x, 1e-12);
  return std::min(1.0, num / mollifier_norm());
}

double mollifier_mu_prime(double x) {
  return mollifier_kernel(x) / mollifier_norm();
}

}  // namespace ehsurf::specfun
