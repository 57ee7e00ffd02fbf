#include "ehsurf/spinors.hpp"

#include <cmath>
#include <stdexcept>

namespace ehsurf::spin {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
const Complex kI{0.0, 1.0};

// Clifford generators: Y1 -> g1 = diag(i,-i), Y2 -> g2 = [[0,i],[i,0]],
// Y3 -> -iT = [[0,-1],[1,0]].
Spinor apply_g1(const Spinor& p) { return {kI * p.c1, -kI * p.c2}; }
Spinor apply_g2(const Spinor& p) { return {kI * p.c2, kI * p.c1}; }
Spinor apply_g3(const Spinor& p) { return {-p.c2, p.c1}; }

// Pair products entering the spin connection:
// Y1Y2 = [[0,-1],[1,0]], Y1Y3 = -g2, Y2Y3 = g1.
Spinor apply_y1y2(const Spinor& p) { return {-p.c2, p.c1}; }
Spinor apply_y1y3(const Spinor& p) { return {-kI * p.c2, -kI * p.c1}; }

struct FrameOps {
  hyper::FrameData f;
  hyper::ConnectionData conn;
};

FrameOps frame_ops(const PlaneCurve& curve, double t,
                   const hyper::ChartPoint& p) {
  return {hyper::frame(curve, t, p), hyper::connection(curve, t, p)};
}

Spinor directional(const SpinorJet& jet, const Vec3& dir) {
  return {dir[0] * jet.d_s.c1 + dir[1] * jet.d_rho.c1 + dir[2] * jet.d_phi.c1,
          dir[0] * jet.d_s.c2 + dir[1] * jet.d_rho.c2 + dir[2] * jet.d_phi.c2};
}

Spinor cov_deriv_from(const FrameOps& fo, const SpinorJet& jet, int i) {
  const Vec3 Y = (i == 0) ? fo.f.Y1 : (i == 1) ? fo.f.Y2 : fo.f.Y3;
  Spinor d = directional(jet, Y);
  if (i == 1) {
    const Spinor w = apply_y1y2(jet.psi);  // omega_12(Y2) = c1
    d.c1 += 0.5 * fo.conn.c1 * w.c1;
    d.c2 += 0.5 * fo.conn.c1 * w.c2;
  } else if (i == 2) {
    const Spinor w = apply_y1y3(jet.psi);  // omega_13(Y3) = -c2
    d.c1 -= 0.5 * fo.conn.c2 * w.c1;
    d.c2 -= 0.5 * fo.conn.c2 * w.c2;
  }
  return d;
}

// Scalar-profile fields psi = A(s, rho) (C1, C2) with logarithmic partials
// supplied in closed form.
SpinorField scalar_profile_field(
    std::function<void(const hyper::ChartPoint&, double& A, double& dlogA_s,
                       double& dlogA_rho)>
        profile,
    Complex C1, Complex C2) {
  SpinorField f;
  f.eval = [profile, C1, C2](const hyper::ChartPoint& p) {
    double A, ls, lr;
    profile(p, A, ls, lr);
    SpinorJet jet;
    jet.psi = {A * C1, A * C2};
    jet.d_s = {A * ls * C1, A * ls * C2};
    jet.d_rho = {A * lr * C1, A * lr * C2};
    jet.d_phi = {Complex(0), Complex(0)};
    return jet;
  };
  return f;
}

}  // namespace

Spinor clifford_mul(const Vec3& v, const Spinor& psi) {
  const Spinor a = apply_g1(psi), b = apply_g2(psi), c = apply_g3(psi);
  return {v[0] * a.c1 + v[1] * b.c1 + v[2] * c.c1,
          v[0] * a.c2 + v[1] * b.c2 + v[2] * c.c2};
}

Spinor spin_cov_deriv(const SpinorField& field, int i, const PlaneCurve& curve,
                      double t, const hyper::ChartPoint& p) {
  if (i < 0 || i > 2) throw std::invalid_argument("spin_cov_deriv: i in 0..2");
  return cov_deriv_from(frame_ops(curve, t, p), field.eval(p), i);
}

Spinor dirac_apply(const SpinorField& field, const PlaneCurve& curve, double t,
                   const hyper::ChartPoint& p) {
  const FrameOps fo = frame_ops(curve, t, p);
  const SpinorJet jet = field.eval(p);
  const Spinor a = apply_g1(cov_deriv_from(fo, jet, 0));
  const Spinor b = apply_g2(cov_deriv_from(fo, jet, 1));
  const Spinor c = apply_g3(cov_deriv_from(fo, jet, 2));
  return {a.c1 + b.c1 + c.c1, a.c2 + b.c2 + c.c2};
}

SpinorField harmonic_kernel_field(const PlaneCurve& curve, Complex C1,
                                  Complex C2) {
  return scalar_profile_field(
      [curve](const hyper::ChartPoint& p, double& A, double& ls, double& lr) {
        const CurveData cd = curve_data(curve, p.s);
        const double c = cd.r2 + 1.0;
        A = 1.0 / (p.rho * std::sqrt(c));
        ls = -cd.a / c;
        lr = -1.0 / p.rho;
      },
      C1, C2);
}

SpinorField harmonic_spinor_beta(int beta, Complex B1, Complex B2, double r0,
                                 double t, int eps) {
  if (!(t > 0)) throw std::domain_error("harmonic_spinor_beta: t > 0");
  if (!(r0 > 0)) throw std::domain_error("harmonic_spinor_beta: r0 > 0");
  if (eps != 1 && eps != -1)
    throw std::invalid_argument("harmonic_spinor_beta: eps = +-1");
  if (eps * beta >= 0)
    throw std::domain_error(
        "harmonic_spinor_beta: eps*beta must be negative (not L^2 otherwise)");
  const double c = r0 * r0 + 1.0;
  const double delta = eps * c * beta / (2.0 * r0);
  const double t4 = t * t * t * t;
  SpinorField f;
  f.eval = [=](const hyper::ChartPoint& p) {
    const double u1 = p.rho * p.rho * c;
    const double sqrtW = std::sqrt(u1 * u1 + t4);
    const double Aarg = u1 + sqrtW;
    const double radial =
        std::pow(Aarg, delta) / (p.rho * std::pow(t, 2.0 * delta));
    const double phase_rate = beta * eps / r0;  // d(beta phi_Gamma)/ds
    const Complex phase = std::exp(kI * (phase_rate * p.s));
    const Complex A = radial * phase;
    const double dlog_rho = -1.0 / p.rho + delta * 2.0 * p.rho * c / sqrtW;
    SpinorJet jet;
    jet.psi = {A * B1, A * B2};
    jet.d_s = {kI * phase_rate * A * B1, kI * phase_rate * A * B2};
    jet.d_rho = {dlog_rho * A * B1, dlog_rho * A * B2};
    jet.d_phi = {Complex(0), Complex(0)};
    return jet;
  };
  return f;
}

SpinorField psi_eps_field(const PlaneCurve& curve, double eps, Complex C1,
                          Complex C2) {
  if (!(eps > 0)) throw std::domain_error("psi_eps_field: eps > 0");
  const double e4 = eps * eps * eps * eps;
  return scalar_profile_field(
      [curve, e4](const hyper::ChartPoint& p, double& A, double& ls,
                  double& lr) {
        const CurveData cd = curve_data(curve, p.s);
        const double c = cd.r2 + 1.0;
        const double rho = p.rho;
        const double u1 = rho * rho * c;
        const double We = u1 * u1 + e4;
        // sqrt(-S_eps) = rho^2 c / We^{3/4}
        A = rho * rho * c / std::pow(We, 0.75) *
            std::exp(-3.0 * e4 * rho * std::sqrt(c));
        lr = 2.0 / rho - 3.0 * rho * rho * rho * c * c / We -
             3.0 * e4 * std::sqrt(c);
        const double dc_ds = 2.0 * cd.a;
        ls = dc_ds / c - 1.5 * u1 * rho * rho * dc_ds / We -
             1.5 * e4 * rho * dc_ds / std::sqrt(c);
      },
      C1, C2);
}

SpinorField wk_spinor_t0(const PlaneCurve& curve, double lambda) {
  SpinorField f;
  f.eval = [curve, lambda](const hyper::ChartPoint& p) {
    const CurveData cd = curve_data(curve, p.s);
    const double c = cd.r2 + 1.0;
    const double amp = 1.0 / (p.rho * std::sqrt(c));
    const double theta = lambda * std::sqrt(2.0 * c) * p.rho;
    const Complex e_m = std::exp(-kI * theta);
    const Complex e_p = std::exp(kI * theta);
    // d/ds: amp' = -amp a/c ; theta_s = lambda sqrt(2) rho a / sqrt(c).
    const double dlog_amp_s = -cd.a / c;
    const double theta_s = lambda * std::sqrt(2.0) * p.rho * cd.a / std::sqrt(c);
    const double dlog_amp_r = -1.0 / p.rho;
    const double theta_r = lambda * std::sqrt(2.0 * c);
    SpinorJet jet;
    jet.psi = {amp * e_m, amp * e_p};
    jet.d_s = {amp * e_m * (dlog_amp_s - kI * theta_s),
               amp * e_p * (dlog_amp_s + kI * theta_s)};
    jet.d_rho = {amp * e_m * (dlog_amp_r - kI * theta_r),
                 amp * e_p * (dlog_amp_r + kI * theta_r)};
    jet.d_phi = {Complex(0), Complex(0)};
    return jet;
  };
  return f;
}

double radial_hartman_value(const RadialDiracProblem& prob, double rho) {
  const double c = prob.r0 * prob.r0 + 1.0;
  const double u1 = rho * rho * c;
  const double t4 = prob.t * prob.t * prob.t * prob.t;
  const double W = u1 * u1 + t4;
  const double K = 2.0 * u1 / std::sqrt(W);
  const double logK_r = 2.0 * t4 / (W * rho);
  const double K_r = K * logK_r;
  const double d = prob.delta();
  const double h22 = c * K;
  const double denom = d * d * K * K + prob.alpha * prob.alpha;
  const double q = -denom / (rho * rho);
  const double re_p = 1.0 / rho - d * d * K * K_r / denom;
  const double im_p = -prob.alpha * d * K_r / denom -
                      2.0 * prob.lambda * std::sqrt(h22);
  return -q - 0.25 * (re_p * re_p + im_p * im_p);
}

RadialSolution radial_dirac_solve(const RadialDiracProblem& prob,
                                  double rho_start, double rho_end,
                                  const Spinor& chi0, double tol,
                                  int n_samples) {
  if (!(rho_start > 0) || !(rho_end > 0))
    throw std::domain_error("radial_dirac_solve: rho span in (0,inf)");
  const double c = prob.r0 * prob.r0 + 1.0;
  const double t4 = prob.t * prob.t * prob.t * prob.t;
  const double d = prob.delta();

  // State: (chi1, chi2, Phi) with Phi' = sqrt(h22);
  // chi1' = f e^{2 i lambda Phi} chi2, chi2' = g e^{-2 i lambda Phi} chi1.
  struct St {
    Complex x1, x2;
    double Phi;
  };
  const auto rhs = [&](double rho, const St& s) {
    const double u1 = rho * rho * c;
    const double W = u1 * u1 + t4;
    const double K = 2.0 * u1 / std::sqrt(W);
    const double s22 = std::sqrt(c * K);
    const Complex f = (d * K - kI * double(prob.alpha)) / rho;
    const Complex g = (d * K + kI * double(prob.alpha)) / rho;
    const Complex ph = std::exp(2.0 * kI * prob.lambda * s.Phi);
    St out;
    out.x1 = f * ph * s.x2;
    out.x2 = g * std::conj(ph) * s.x1;
    out.Phi = s22;
    return out;
  };

  RadialSolution sol;
  sol.samples.reserve(n_samples + 1);
  St y{chi0.c1, chi0.c2, 0.0};
  const double dir = (rho_end > rho_start) ? 1.0 : -1.0;
  double rho = rho_start;
  const auto record = [&](double r, const St& s) {
    sol.samples.push_back({r, s.x1, s.x2, radial_hartman_value(prob, r)});
  };
  record(rho, y);

  // Log-spaced sample targets (the origin is a regular singular point).
  for (int k = 1; k <= n_samples; ++k) {
    const double target =
        rho_start * std::pow(rho_end / rho_start, double(k) / n_samples);
    // Adaptive RK4 with step halving between targets.
    double h = (target - rho) / 8.0;
    while (dir * (target - rho) > 1e-15 * std::max(1.0, std::abs(target))) {
      if (dir * (rho + h - target) > 0) h = target - rho;
      const auto step = [&](const St& s, double r0, double hh) {
        const St k1 = rhs(r0, s);
        St s2{s.x1 + 0.5 * hh * k1.x1, s.x2 + 0.5 * hh * k1.x2,
              s.Phi + 0.5 * hh * k1.Phi};
        const St k2 = rhs(r0 + 0.5 * hh, s2);
        St s3{s.x1 + 0.5 * hh * k2.x1, s.x2 + 0.5 * hh * k2.x2,
              s.Phi + 0.5 * hh * k2.Phi};
        const St k3 = rhs(r0 + 0.5 * hh, s3);
        St s4{s.x1 + hh * k3.x1, s.x2 + hh * k3.x2, s.Phi + hh * k3.Phi};
        const St k4 = rhs(r0 + hh, s4);
        return St{
            s.x1 + hh / 6.0 * (k1.x1 + 2.0 * k2.x1 + 2.0 * k3.x1 + k4.x1),
            s.x2 + hh / 6.0 * (k1.x2 + 2.0 * k2.x2 + 2.0 * k3.x2 + k4.x2),
            s.Phi + hh / 6.0 * (k1.Phi + 2.0 * k2.Phi + 2.0 * k3.Phi + k4.Phi)};
      };
      const St full = step(y, rho, h);
      const St half1 = step(y, rho, 0.5 * h);
      const St half2 = step(half1, rho + 0.5 * h, 0.5 * h);
      const double err =
          std::abs(full.x1 - half2.x1) + std::abs(full.x2 - half2.x2);
      const double scale =
          std::abs(half2.x1) + std::abs(half2.x2) + 1e-30;
      if (err <= tol * scale) {
        y = half2;
        rho += h;
        h *= 1.5;
      } else {
        h *= 0.5;
        if (std::abs(h) < 1e-16 * std::max(1.0, std::abs(rho)))
          throw std::runtime_error("radial_dirac_solve: stiff failure");
      }
    }
    rho = target;
    record(rho, y);
  }

  for (const auto& s : sol.samples)
    if (s.hartman < -1e-12) sol.hartman_nonneg = false;
  // Concavity indicator of |chi1|^2 on the log-spaced samples via
  // divided differences (second derivative estimate up to positive factor).
  double min_conc = 1e300;
  for (size_t i = 1; i + 1 < sol.samples.size(); ++i) {
    const double r0 = sol.samples[i - 1].rho, r1 = sol.samples[i].rho,
                 r2 = sol.samples[i + 1].rho;
    const double f0 = std::norm(sol.samples[i - 1].chi1),
                 f1 = std::norm(sol.samples[i].chi1),
                 f2 = std::norm(sol.samples[i + 1].chi1);
    const double dd =
        2.0 * (f0 / ((r1 - r0) * (r2 - r0)) - f1 / ((r1 - r0) * (r2 - r1)) +
               f2 / ((r2 - r1) * (r2 - r0)));
    min_conc = std::min(min_conc, dd);
  }
  sol.min_concavity = min_conc;
  return sol;
}

WkResidual wk_integrability_residual(double rho, double r, double t,
                                     double lambda) {
  if (!(rho > 0)) throw std::domain_error("wk_integrability_residual: rho > 0");
  const double c = r * r + 1.0;
  const double u1 = rho * rho * c;
  const double u1sq = u1 * u1;
  const double t4 = t * t * t * t;
  const double t8 = t4 * t4;
  const double W = u1sq + t4;
  const double W32 = W * std::sqrt(W);
  const double S = -u1sq / W32;

  WkResidual out;
  out.lhs = lambda * lambda * (-12.0 * t8 - 2.0 * u1sq * t4);
  out.rhs = S * (t8 - 6.0 * u1sq * t4);
  out.residual = out.lhs - out.rhs;

  const double R11 = t4 / W32;
  const double R22 = (2.0 * t4 - u1sq) / (2.0 * W32);
  const double R33 = (-4.0 * t4 - u1sq) / (2.0 * W32);
  const double ric2 = R11 * R11 + R22 * R22 + R33 * R33;
  out.delta_S = (8.0 * t8 - 18.0 * u1sq * t4 + u1sq * u1sq) / (W * W * W);
  // |dS|^2 = Y1(S)^2 = 2 u1^2 (2t^4 - u1^2)^2 / W^{9/2}
  out.dS_sq = 2.0 * u1sq * (2.0 * t4 - u1sq) * (2.0 * t4 - u1sq) /
              (W * W * W * W * std::sqrt(W));
  out.lhs_full = 8.0 * lambda * lambda * (2.0 * S * S - 4.0 * ric2);
  out.rhs_full = 2.0 * S * S * S + 3.0 * out.dS_sq + 4.0 * S * out.delta_S;
  return out;
}

Mat3 energy_momentum(const SpinorField& field, const PlaneCurve& curve,
                     double t, const hyper::ChartPoint& p) {
  const FrameOps fo = frame_ops(curve, t, p);
  const SpinorJet jet = field.eval(p);
  Spinor cov[3];
  for (int i = 0; i < 3; ++i) cov[i] = cov_deriv_from(fo, jet, i);
  const auto cliff = [&](int i, const Spinor& x) {
    return i == 0 ? apply_g1(x) : i == 1 ? apply_g2(x) : apply_g3(x);
  };
  Mat3 T;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const Spinor a = cliff(i, cov[j]);
      const Spinor b = cliff(j, cov[i]);
      T(i, j) = std::real(inner({a.c1 + b.c1, a.c2 + b.c2}, jet.psi));
    }
  return T;
}

Mat3 energy_momentum_normalized(const SpinorField& field,
                                const PlaneCurve& curve, double t,
                                const hyper::ChartPoint& p) {
  const SpinorJet jet = field.eval(p);
  const double n2 = norm2(jet.psi);
  if (!(n2 > 0))
    throw std::domain_error("energy_momentum_normalized: zero spinor");
  Mat3 T = energy_momentum(field, curve, t, p);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) T(i, j) /= n2;
  return T;
}

namespace {

// Right-hand side of the transport equation
//   dpsi/dtau = -(1/2) [ sum_{j<k} omega_jk(qdot) YjYk + II(qdot) . ] psi.
Spinor transport_rhs(const PlaneCurve& curve, double t,
                     const hyper::ChartPoint& q, const Vec3& qdot,
                     const Spinor& psi) {
  const hyper::FrameData f = hyper::frame(curve, t, q);
  const hyper::ConnectionData conn = hyper::connection(curve, t, q);
  const hyper::SecondForm sf = hyper::second_form(curve, t, q);
  const auto pair1 = [&](const Vec3& w, const Vec3& v) {
    return w[0] * v[0] + w[1] * v[1] + w[2] * v[2];
  };
  const double om1 = pair1(f.omega1, qdot);
  const double om2 = pair1(f.omega2, qdot);
  const double om3 = pair1(f.omega3, qdot);
  const double w12 = conn.c1 * om2;    // omega_12(qdot)
  const double w13 = -conn.c2 * om3;   // omega_13(qdot)
  // Frame components of II(qdot):
  const Vec3 v{om1, om2, om3};
  Vec3 IIv{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) IIv[i] += sf.II_frame(i, j) * v[j];

  Spinor out{0, 0};
  const Spinor a = apply_y1y2(psi);
  const Spinor b = apply_y1y3(psi);
  out.c1 = -0.5 * (w12 * a.c1 + w13 * b.c1);
  out.c2 = -0.5 * (w12 * a.c2 + w13 * b.c2);
  const Spinor cl = clifford_mul(IIv, psi);
  out.c1 -= 0.5 * cl.c1;
  out.c2 -= 0.5 * cl.c2;
  return out;
}

}  // namespace

SpinorField restricted_parallel_field(const PlaneCurve& curve, double t,
                                      const Spinor& psi_at,
                                      const hyper::ChartPoint& at) {
  SpinorField f;
  f.eval = [curve, t, psi_at, at](const hyper::ChartPoint& p) {
    // Local jet: value at the anchor, partials synthesized from the
    // transport equation in the three coordinate directions.
    if (std::abs(p.s - at.s) + std::abs(p.rho - at.rho) +
            std::abs(p.phi - at.phi) >
        1e-9)
      throw std::logic_error("restricted_parallel_field: off-anchor eval");
    SpinorJet jet;
    jet.psi = psi_at;
    jet.d_s = transport_rhs(curve, t, at, {1, 0, 0}, psi_at);
    jet.d_rho = transport_rhs(curve, t, at, {0, 1, 0}, psi_at);
    jet.d_phi = transport_rhs(curve, t, at, {0, 0, 1}, psi_at);
    return jet;
  };
  return f;
}

TransportResult tkilling_transport(const PlaneCurve& curve, double t,
                                   const ChartPath& loop, const Spinor& psi0,
                                   double tol) {
  const double n0 = norm(psi0);
  if (!(n0 > 0)) throw std::domain_error("tkilling_transport: zero spinor");
  // RK4 with step doubling on the path parameter.
  const auto rhs = [&](double tau, const Spinor& psi) {
    hyper::ChartPoint q;
    Vec3 qd;
    loop.eval(tau, q, qd);
    if (!(q.rho > 0))
      throw std::domain_error("tkilling_transport: path leaves the chart");
    return transport_rhs(curve, t, q, qd, psi);
  };
  const auto rk4 = [&](double tau, const Spinor& y, double h) {
    const Spinor k1 = rhs(tau, y);
    const Spinor k2 = rhs(tau + 0.5 * h, y + Complex(0.5 * h) * k1);
    const Spinor k3 = rhs(tau + 0.5 * h, y + Complex(0.5 * h) * k2);
    const Spinor k4 = rhs(tau + h, y + Complex(h) * k3);
    return y + Complex(h / 6.0) * (k1 + Complex(2.0) * k2 + Complex(2.0) * k3 + k4);
  };
  Spinor y = psi0;
  double tau = loop.tau0;
  double h = (loop.tau1 - loop.tau0) / 64.0;
  double norm_drift = 0.0;
  while (tau < loop.tau1 - 1e-15 * std::abs(loop.tau1 - loop.tau0)) {
    if (tau + h > loop.tau1) h = loop.tau1 - tau;
    const Spinor full = rk4(tau, y, h);
    const Spinor half = rk4(tau + 0.5 * h, rk4(tau, y, 0.5 * h), 0.5 * h);
    const double err = norm(full - half);
    if (err <= tol * std::max(1.0, norm(half))) {
      y = half;
      tau += h;
      norm_drift = std::max(norm_drift, std::abs(norm(y) - n0) / n0);
      h *= 1.4;
    } else {
      h *= 0.5;
      if (h < 1e-14 * std::abs(loop.tau1 - loop.tau0))
        throw std::runtime_error("tkilling_transport: step underflow");
    }
  }
  TransportResult res;
  res.psi_final = y;
  res.defect = norm(y - psi0) / n0;
  res.norm_drift = norm_drift;
  return res;
}

ChartPath phi_loop(double s, double rho) {
  ChartPath path;
  path.tau0 = 0.0;
  path.tau1 = 2.0 * kPi;
  path.eval = [s, rho](double tau, hyper::ChartPoint& q, Vec3& qd) {
    q = {s, rho, tau};
    qd = {0.0, 0.0, 1.0};
  };
  return path;
}

ChartPath s_loop(double rho, double phi, double length) {
  ChartPath path;
  path.tau0 = 0.0;
  path.tau1 = length;
  path.eval = [rho, phi](double tau, hyper::ChartPoint& q, Vec3& qd) {
    q = {tau, rho, phi};
    qd = {1.0, 0.0, 0.0};
  };
  return path;
}

}  // namespace ehsurf::spin
