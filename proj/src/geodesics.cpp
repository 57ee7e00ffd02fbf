#include "ehsurf/geodesics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ehsurf/specfun.hpp"

namespace ehsurf::geo {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

Mat3 metric_matrix(const PlaneCurve& curve, double t,
                   const hyper::ChartPoint& p) {
  const hyper::InducedMetric h = hyper::induced_metric(curve, t, p);
  Mat3 m;
  m(0, 0) = h.h11; m(0, 1) = h.h12; m(0, 2) = h.h13;
  m(1, 0) = h.h12; m(1, 1) = h.h22; m(1, 2) = h.h23;
  m(2, 0) = h.h13; m(2, 1) = h.h23; m(2, 2) = h.h33;
  return m;
}

}  // namespace

Rank3c induced_christoffels(const PlaneCurve& curve, double t,
                            const hyper::ChartPoint& p, double h_step,
                            bool richardson) {
  if (!(p.rho > 2.0 * h_step))
    throw std::domain_error("induced_christoffels: step too large near rho=0");
  // dh[k][i][j] = d_k h_ij; the coefficients are phi-independent.
  double dh[3][3][3] = {};
  for (int k = 0; k < 2; ++k) {
    const auto at = [&](double delta) {
      hyper::ChartPoint q = p;
      (k == 0 ? q.s : q.rho) += delta;
      return metric_matrix(curve, t, q);
    };
    const Mat3 hp = at(h_step), hm = at(-h_step);
    Mat3 hp2, hm2;
    if (richardson) {
      hp2 = at(0.5 * h_step);
      hm2 = at(-0.5 * h_step);
    }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const double d1 = (hp(i, j) - hm(i, j)) / (2.0 * h_step);
        double d = d1;
        if (richardson) {
          const double d2 = (hp2(i, j) - hm2(i, j)) / h_step;
          d = (4.0 * d2 - d1) / 3.0;
        }
        dh[k][i][j] = d;
      }
  }
  const Mat3 hinv = inverse(metric_matrix(curve, t, p));
  Rank3c gamma{};
  for (int kk = 0; kk < 3; ++kk)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double s = 0;
        for (int l = 0; l < 3; ++l)
          s += hinv(kk, l) * 0.5 * (dh[i][j][l] + dh[j][i][l] - dh[l][i][j]);
        gamma[kk][i][j] = s;
      }
  return gamma;
}

namespace {

// Dormand-Prince RK5(4) coefficients.
const double kA[7][6] = {
    {},
    {1.0 / 5.0},
    {3.0 / 40.0, 9.0 / 40.0},
    {44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0},
    {19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0},
    {9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0,
     -5103.0 / 18656.0},
    {35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0,
     11.0 / 84.0}};
const double kB5[7] = {35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0,
                       -2187.0 / 6784.0, 11.0 / 84.0, 0.0};
const double kB4[7] = {5179.0 / 57600.0, 0.0,          7571.0 / 16695.0,
                       393.0 / 640.0,    -92097.0 / 339200.0,
                       187.0 / 2100.0,   1.0 / 40.0};

struct State6 {
  double y[6];
};

}  // namespace

Trajectory integrate(const PlaneCurve& curve, double t,
                     const GeodesicState& init, double tau_end,
                     const IntegrateOptions& opt) {
  if (!(init.q.rho > 0))
    throw std::domain_error("integrate: initial rho must be positive");

  const auto rhs = [&](const State6& s, double* dy) {
    hyper::ChartPoint q{s.y[0], s.y[1], s.y[2]};
    double h = opt.h_step > 0 ? opt.h_step : std::max(1e-4, 1e-3 * q.rho);
    h = std::min(h, 0.4 * q.rho);  // keep the stencil inside the chart
    const Rank3c g = induced_christoffels(curve, t, q, h);
    const double qd[3] = {s.y[3], s.y[4], s.y[5]};
    dy[0] = qd[0];
    dy[1] = qd[1];
    dy[2] = qd[2];
    for (int k = 0; k < 3; ++k) {
      double acc = 0;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) acc += g[k][i][j] * qd[i] * qd[j];
      dy[3 + k] = -acc;
    }
  };

  Trajectory traj;
  State6 y{{init.q.s, init.q.rho, init.q.phi, init.qdot[0], init.qdot[1],
            init.qdot[2]}};
  double tau = 0;
  double step = tau_end / 256.0;
  const double max_step = opt.max_step > 0 ? opt.max_step : tau_end / 16.0;
  step = std::min(step, max_step);

  const auto push = [&](double tt, const State6& s) {
    GeodesicState gs;
    gs.tau = tt;
    gs.q = {s.y[0], s.y[1], s.y[2]};
    gs.qdot = {s.y[3], s.y[4], s.y[5]};
    traj.samples.push_back(gs);
  };
  push(0.0, y);

  int steps = 0;
  while (tau < tau_end && steps++ < opt.max_steps) {
    step = std::min(step, tau_end - tau);
    double k[7][6];
    State6 ytmp;
    bool bad = false;
    for (int stage = 0; stage < 7; ++stage) {
      for (int i = 0; i < 6; ++i) {
        double acc = y.y[i];
        for (int j = 0; j < stage; ++j) acc += step * kA[stage][j] * k[j][i];
        ytmp.y[i] = acc;
      }
      if (ytmp.y[1] <= opt.rho_floor) {  // rho dipped below the floor
        bad = true;
        break;
      }
      rhs(ytmp, k[stage]);
    }
    if (bad) {
      step *= 0.5;
      if (step < 1e-14 * std::max(1.0, tau_end)) {
        traj.hit_floor = true;
        break;
      }
      continue;
    }
    State6 y5, y4;
    for (int i = 0; i < 6; ++i) {
      double a5 = y.y[i], a4 = y.y[i];
      for (int j = 0; j < 7; ++j) {
        a5 += step * kB5[j] * k[j][i];
        a4 += step * kB4[j] * k[j][i];
      }
      y5.y[i] = a5;
      y4.y[i] = a4;
    }
    double err = 0;
    for (int i = 0; i < 6; ++i) {
      const double sc = opt.tol * (1.0 + std::abs(y5.y[i]));
      err = std::max(err, std::abs(y5.y[i] - y4.y[i]) / sc);
    }
    if (err <= 1.0) {
      tau += step;
      y = y5;
      push(tau, y);
      if (y.y[1] <= opt.rho_floor) {
        traj.hit_floor = true;
        break;
      }
    }
    const double fac =
        std::clamp(0.9 * std::pow(err > 0 ? err : 1e-10, -0.2), 0.2, 5.0);
    step = std::min(step * fac, max_step);
    if (step < 1e-15 * std::max(1.0, tau_end))
      throw std::runtime_error("integrate: step size underflow");
  }
  traj.tau_end = tau;
  return traj;
}

FirstIntegrals first_integrals(const PlaneCurve& curve, double t,
                               const GeodesicState& state) {
  const Mat3 h = metric_matrix(curve, t, state.q);
  const Vec3 qd = state.qdot;
  FirstIntegrals fi;
  double e = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) e += h(i, j) * qd[i] * qd[j];
  fi.E = 0.5 * e;
  fi.M1 = h(2, 0) * qd[0] + h(2, 1) * qd[1] + h(2, 2) * qd[2];
  fi.M2 = h(0, 0) * qd[0] + h(0, 1) * qd[1] + h(0, 2) * qd[2];
  fi.M2_valid = curve.is_circle();
  fi.eps = curve.is_circle() ? curve.circle_eps() : +1;
  return fi;
}

double radial_rho_dot_sq(double rho, double r0, double t, double E, double M1,
                         double M2, int eps) {
  if (!(rho > 0)) throw std::domain_error("radial_rho_dot_sq: rho > 0");
  const double c = r0 * r0 + 1.0;
  const double u1 = rho * rho * c;
  const double t4 = t * t * t * t;
  const double W = u1 * u1 + t4;
  const double diff = M1 - eps * M2 * r0;
  return std::sqrt(W) / (rho * rho * c * c) * E -
         (t4 * M1 * M1 / (rho * rho * rho * rho * c * c * c) + diff * diff +
          M2 * M2) /
             (4.0 * rho * rho * c);
}

double turning_point(double r0, double t, double E, double M1, double M2,
                     int eps, double rho_hint) {
  const auto f = [&](double rho) {
    return radial_rho_dot_sq(rho, r0, t, E, M1, M2, eps);
  };
  double hi = rho_hint;
  while (f(hi) < 0 && hi < 1e6) hi *= 2.0;
  double lo = hi;
  while (f(lo) > 0 && lo > 1e-12) lo *= 0.5;
  if (f(lo) > 0) return 0.0;
  return specfun::root_find(f, lo, hi, 1e-12);
}

double distance_to_zero_section(double rho0, double r0, double t) {
  if (!(t > 0))
    throw std::domain_error(
        "distance_to_zero_section: t = 0 has the elementary form");
  if (!(rho0 > 0)) throw std::domain_error("distance: rho0 > 0");
  const double u1 = rho0 * rho0 * (r0 * r0 + 1.0);
  const double t4 = t * t * t * t;
  return u1 / (t * std::sqrt(2.0)) *
         specfun::hyp2f1({0.5, 0.25, 1.5, -u1 * u1 / t4});
}

double distance_to_zero_section_t0(double rho0, double r0) {
  const double u1 = rho0 * rho0 * (r0 * r0 + 1.0);
  return std::sqrt(2.0 * u1);
}

double distance_by_quadrature(double rho0, double r0, double t, double tol) {
  const double u1 = rho0 * rho0 * (r0 * r0 + 1.0);
  const double t4 = t * t * t * t;
  return specfun::quadrature(
             [&](double x) { return std::pow(x * x + t4, -0.25); }, 0.0, u1,
             tol) /
         std::sqrt(2.0);
}

ClosedGeodesicParams closed_geodesic_params(double rho0, double r0, int n,
                                            int m, int eps, double t) {
  if (n == 0 && m == 0)
    throw std::invalid_argument("closed_geodesic_params: (n,m) = (0,0)");
  if (eps != 1 && eps != -1)
    throw std::invalid_argument("closed_geodesic_params: eps = +-1");
  const double c = r0 * r0 + 1.0;
  const double u1 = rho0 * rho0 * c;
  const double t4 = t * t * t * t;
  const double W = u1 * u1 + t4;

  ClosedGeodesicParams out;
  out.M1 = (m * c / 4.0 + eps * n * r0 * r0) * u1 * u1 / W;
  out.M2 = r0 / c * (n + eps * out.M1);
  const double diff = out.M1 - eps * out.M2 * r0;
  out.E = c / (4.0 * std::sqrt(W)) *
          (t4 * out.M1 * out.M1 / (rho0 * rho0 * rho0 * rho0 * c * c * c) +
           diff * diff + out.M2 * out.M2);
  if (!(out.E > 0))
    throw std::domain_error("closed_geodesic_params: nonpositive energy");

  const double sqrtW = std::sqrt(W);
  const double K = 2.0 * u1 / sqrtW;
  const double H = 2.0 * t4 / (u1 * u1 * sqrtW);
  out.sdot = K * (-eps * r0 * out.M1 + c * out.M2) / (4.0 * rho0 * rho0);
  out.phidot = ((K + H * rho0 * rho0) * out.M1 - eps * r0 * K * out.M2) /
               (4.0 * rho0 * rho0);
  if (n != 0 && std::abs(out.sdot) > 1e-300)
    out.period = 2.0 * kPi * r0 * n / out.sdot;
  else if (m != 0 && std::abs(out.phidot) > 1e-300)
    out.period = 2.0 * kPi * m / out.phidot;
  return out;
}

double tube_volume(double rho_R, double r0, double t) {
  if (!(rho_R > 0)) throw std::domain_error("tube_volume: rho_R > 0");
  const double c = r0 * r0 + 1.0;
  const double u1 = rho_R * rho_R * c;
  const double W = u1 * u1 + t * t * t * t;
  return 4.0 * kPi * kPi * r0 * std::sqrt(8.0) / (3.0 * c) *
         (std::pow(W, 0.75) - t * t * t);
}

std::vector<double> exponential_growth_estimate(
    double r0, double t, const std::vector<double>& Rs) {
  std::vector<double> out;
  out.reserve(Rs.size());
  for (const double R : Rs) {
    const auto dist_err = [&](double rho) {
      return distance_to_zero_section(rho, r0, t) - R;
    };
    double hi = 1.0;
    while (dist_err(hi) < 0) hi *= 2.0;
    const double rho_R = specfun::root_find(dist_err, hi * 1e-6, hi, 1e-10);
    out.push_back(std::log(tube_volume(rho_R, r0, t)) / R);
  }
  return out;
}

}  // namespace ehsurf::geo
