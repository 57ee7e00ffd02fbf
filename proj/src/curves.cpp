#include "ehsurf/curves.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ehsurf/specfun.hpp"

namespace ehsurf {

namespace {

class CircleImpl final : public PlaneCurve::Impl {
 public:
  CircleImpl(double r0, int eps) : r0_(r0), eps_(eps) {
    if (!(r0 > 0)) throw std::invalid_argument("circle: r0 must be positive");
    if (eps != 1 && eps != -1) throw std::invalid_argument("circle: eps = +-1");
  }
  CurveJet eval(double s) const override {
    const double th = eps_ * s / r0_;
    const double c = std::cos(th), sn = std::sin(th);
    CurveJet j;
    j.u = r0_ * c;
    j.v = r0_ * sn;
    j.du = -eps_ * sn;
    j.dv = eps_ * c;
    j.ddu = -c / r0_;
    j.ddv = -sn / r0_;
    return j;
  }
  double total_length() const override { return 2.0 * M_PI * r0_; }
  bool closed() const override { return true; }
  CurveFamily family() const override { return CurveFamily::Circle; }
  double circle_radius() const override { return r0_; }
  int circle_eps() const override { return eps_; }

 private:
  double r0_;
  int eps_;
};

class LineImpl final : public PlaneCurve::Impl {
 public:
  LineImpl(Vec2 p0, Vec2 dir, double length) : p0_(p0), length_(length) {
    const double n = std::hypot(dir[0], dir[1]);
    if (!(n > 0)) throw std::invalid_argument("line: zero direction");
    dir_ = {dir[0] / n, dir[1] / n};
    if (!(length > 0)) throw std::invalid_argument("line: length > 0");
  }
  CurveJet eval(double s) const override {
    CurveJet j;
    j.u = p0_[0] + s * dir_[0];
    j.v = p0_[1] + s * dir_[1];
    j.du = dir_[0];
    j.dv = dir_[1];
    return j;
  }
  double total_length() const override { return length_; }
  bool closed() const override { return false; }
  CurveFamily family() const override { return CurveFamily::Line; }

 private:
  Vec2 p0_, dir_;
  double length_;
};

// Natural (open) or periodic (closed) cubic spline through given values.
struct Spline1D {
  std::vector<double> t, y, y2;  // nodes, values, second derivatives
  bool periodic = false;

  void build(const std::vector<double>& tt, const std::vector<double>& yy,
             bool per) {
    t = tt;
    y = yy;
    periodic = per;
    const int n = static_cast<int>(t.size());
    y2.assign(n, 0.0);
    if (n < 3) return;
    if (!periodic) {
      std::vector<double> u(n, 0.0);
      for (int i = 1; i < n - 1; ++i) {
        const double sig = (t[i] - t[i - 1]) / (t[i + 1] - t[i - 1]);
        const double p = sig * y2[i - 1] + 2.0;
        y2[i] = (sig - 1.0) / p;
        u[i] = (y[i + 1] - y[i]) / (t[i + 1] - t[i]) -
               (y[i] - y[i - 1]) / (t[i] - t[i - 1]);
        u[i] = (6.0 * u[i] / (t[i + 1] - t[i - 1]) - sig * u[i - 1]) / p;
      }
      for (int k = n - 2; k >= 0; --k) y2[k] = y2[k] * y2[k + 1] + u[k];
    } else {
      // Cyclic tridiagonal system via Sherman-Morrison. Nodes t[0..n-1],
      // with period t[n-1]-t[0] and y[n-1] == y[0] expected.
      const int m = n - 1;  // independent nodes
      std::vector<double> hseg(m);
      for (int i = 0; i < m; ++i) hseg[i] = t[i + 1] - t[i];
      const auto yv = [&](int i) { return y[((i % m) + m) % m]; };
      const auto hv = [&](int i) { return hseg[((i % m) + m) % m]; };
      std::vector<double> diag(m), rhs(m);
      for (int i = 0; i < m; ++i) {
        diag[i] = 2.0 * (hv(i - 1) + hv(i));
        rhs[i] = 6.0 * ((yv(i + 1) - yv(i)) / hv(i) -
                        (yv(i) - yv(i - 1)) / hv(i - 1));
      }
      // System: h(i-1) x(i-1) + diag(i) x(i) + h(i) x(i+1) = rhs(i), cyclic.
      const auto solve_tri = [&](const std::vector<double>& d,
                                 const std::vector<double>& b) {
        std::vector<double> c(m, 0.0), x(m, 0.0), dd(d), bb(b);
        for (int i = 1; i < m; ++i) {
          const double w = hv(i - 1) / dd[i - 1];
          dd[i] -= w * hv(i - 1);
          bb[i] -= w * bb[i - 1];
        }
        x[m - 1] = bb[m - 1] / dd[m - 1];
        for (int i = m - 2; i >= 0; --i)
          x[i] = (bb[i] - hv(i) * x[i + 1]) / dd[i];
        (void)c;
        return x;
      };
      // Sherman-Morrison with u = (gamma,0,...,h(m-1)), v = (1,0,...,alpha)
      const double alpha = hv(m - 1), beta = hv(m - 1);
      const double gamma = -diag[0];
      std::vector<double> dmod(diag);
      dmod[0] -= gamma;
      dmod[m - 1] -= alpha * beta / gamma;
      std::vector<double> uvec(m, 0.0);
      uvec[0] = gamma;
      uvec[m - 1] = beta;
      const std::vector<double> xs = solve_tri(dmod, rhs);
      const std::vector<double> zs = solve_tri(dmod, uvec);
      const double fact =
          (xs[0] + alpha * xs[m - 1] / gamma) /
          (1.0 + zs[0] + alpha * zs[m - 1] / gamma);
      std::vector<double> x(m);
      for (int i = 0; i < m; ++i) x[i] = xs[i] - fact * zs[i];
      for (int i = 0; i < m; ++i) y2[i] = x[i];
      y2[n - 1] = y2[0];
    }
  }

  void eval(double x, double& f, double& df, double& ddf) const {
    const int n = static_cast<int>(t.size());
    double xx = x;
    if (periodic) {
      const double period = t[n - 1] - t[0];
      xx = t[0] + std::fmod(std::fmod(x - t[0], period) + period, period);
    } else {
      xx = std::clamp(x, t.front(), t.back());
    }
    int lo = 0, hi = n - 1;
    while (hi - lo > 1) {
      const int mid = (lo + hi) / 2;
      if (t[mid] > xx) hi = mid; else lo = mid;
    }
    const double h = t[hi] - t[lo];
    const double A = (t[hi] - xx) / h, B = (xx - t[lo]) / h;
    f = A * y[lo] + B * y[hi] +
        ((A * A * A - A) * y2[lo] + (B * B * B - B) * y2[hi]) * h * h / 6.0;
    df = (y[hi] - y[lo]) / h -
         (3.0 * A * A - 1.0) / 6.0 * h * y2[lo] +
         (3.0 * B * B - 1.0) / 6.0 * h * y2[hi];
    ddf = A * y2[lo] + B * y2[hi];
  }
};

// Wraps a RawCurve with an exact chain rule from the raw parameter to arc
// length; the raw-parameter location for a given arc length comes from a
// lookup table plus local Newton refinement against quadrature.
class ReparamImpl final : public PlaneCurve::Impl {
 public:
  ReparamImpl(RawCurve raw, int n_samples, double tol)
      : raw_(std::move(raw)), tol_(tol) {
    if (n_samples < 8) n_samples = 8;
    const double lo = raw_.t0, hi = raw_.t1;
    nodes_.resize(n_samples + 1);
    cum_.resize(n_samples + 1);
    cum_[0] = 0.0;
    nodes_[0] = lo;
    for (int i = 1; i <= n_samples; ++i) {
      nodes_[i] = lo + (hi - lo) * i / n_samples;
      const double seg = specfun::quadrature(
          [&](double th) { return speed(th); }, nodes_[i - 1], nodes_[i],
          1e-13);
      if (seg <= 0)
        throw std::domain_error("arc_length_reparametrize: degenerate segment");
      cum_[i] = cum_[i - 1] + seg;
    }
    length_ = cum_.back();
    // Reject non-regular parametrizations (vanishing speed).
    for (int i = 0; i <= 4 * n_samples; ++i) {
      const double th = lo + (hi - lo) * i / (4.0 * n_samples);
      if (speed(th) < 1e-8)
        throw std::domain_error(
            "arc_length_reparametrize: non-regular point near parameter " +
            std::to_string(th));
    }
  }

  CurveJet eval(double s) const override {
    double ss = s;
    if (raw_.closed) {
      ss = std::fmod(std::fmod(s, length_) + length_, length_);
    } else {
      ss = std::clamp(s, 0.0, length_);
    }
    const double th = param_at(ss);
    const CurveJet r = raw_.eval(th);
    const double w = std::hypot(r.du, r.dv);        // |dGamma/dtheta|
    const double wp = (r.du * r.ddu + r.dv * r.ddv) / w;
    CurveJet j;
    j.u = r.u;
    j.v = r.v;
    j.du = r.du / w;
    j.dv = r.dv / w;
    j.ddu = r.ddu / (w * w) - r.du * wp / (w * w * w);
    j.ddv = r.ddv / (w * w) - r.dv * wp / (w * w * w);
    return j;
  }
  double total_length() const override { return length_; }
  bool closed() const override { return raw_.closed; }
  CurveFamily family() const override { return CurveFamily::Generic; }

 private:
  double speed(double th) const {
    const CurveJet r = raw_.eval(th);
    return std::hypot(r.du, r.dv);
  }

  double param_at(double s) const {
    const auto it = std::upper_bound(cum_.begin(), cum_.end(), s);
    int idx = static_cast<int>(it - cum_.begin()) - 1;
    idx = std::clamp(idx, 0, static_cast<int>(cum_.size()) - 2);
    // Newton on L(theta) = s within the bracketing cell. A single fixed
    // Kronrod panel keeps theta(s) smooth under outside differentiation.
    double th = nodes_[idx] + (nodes_[idx + 1] - nodes_[idx]) *
                                  (s - cum_[idx]) /
                                  (cum_[idx + 1] - cum_[idx]);
    for (int it2 = 0; it2 < 40; ++it2) {
      const double len =
          cum_[idx] + specfun::gk15_panel([&](double x) { return speed(x); },
                                          nodes_[idx], th);
      const double err = len - s;
      th -= err / speed(th);
      th = std::clamp(th, nodes_[idx] - 1e-9, nodes_[idx + 1] + 1e-9);
      if (std::abs(err) < 1e-15 * std::max(1.0, length_)) break;
    }
    return th;
  }

  RawCurve raw_;
  double tol_;
  double length_ = 0;
  std::vector<double> nodes_, cum_;
};

class SplineImpl final : public PlaneCurve::Impl {
 public:
  SplineImpl(const std::vector<Vec2>& pts_in, bool closed) : closed_(closed) {
    std::vector<Vec2> pts = pts_in;
    if (pts.size() < 4) throw std::invalid_argument("spline: need >= 4 points");
    if (closed) {
      const double gap = std::hypot(pts.front()[0] - pts.back()[0],
                                    pts.front()[1] - pts.back()[1]);
      if (gap > 1e-12) pts.push_back(pts.front());
    }
    const int n = static_cast<int>(pts.size());
    std::vector<double> t(n), uu(n), vv(n);
    t[0] = 0.0;
    for (int i = 1; i < n; ++i) {
      const double d = std::hypot(pts[i][0] - pts[i - 1][0],
                                  pts[i][1] - pts[i - 1][1]);
      if (d <= 0) throw std::invalid_argument("spline: repeated point");
      t[i] = t[i - 1] + d;
    }
    for (int i = 0; i < n; ++i) {
      uu[i] = pts[i][0];
      vv[i] = pts[i][1];
    }
    su_.build(t, uu, closed);
    sv_.build(t, vv, closed);
    t_max_ = t.back();
  }

  CurveJet jet_raw(double th) const {
    CurveJet j;
    su_.eval(th, j.u, j.du, j.ddu);
    sv_.eval(th, j.v, j.dv, j.ddv);
    return j;
  }
  double t_max() const { return t_max_; }
  bool closed_flag() const { return closed_; }

  // Unused directly; SplineImpl instances are wrapped by ReparamImpl.
  CurveJet eval(double s) const override { return jet_raw(s); }
  double total_length() const override { return t_max_; }
  bool closed() const override { return closed_; }
  CurveFamily family() const override { return CurveFamily::Generic; }

 private:
  Spline1D su_, sv_;
  double t_max_ = 0;
  bool closed_ = false;
};

}  // namespace

PlaneCurve make_circle(double r0, int eps) {
  return PlaneCurve(std::make_shared<CircleImpl>(r0, eps));
}

PlaneCurve make_line(Vec2 p0, Vec2 dir, double length) {
  return PlaneCurve(std::make_shared<LineImpl>(p0, dir, length));
}

PlaneCurve make_spline(const std::vector<Vec2>& points, bool closed) {
  auto spl = std::make_shared<SplineImpl>(points, closed);
  RawCurve raw;
  raw.eval = [spl](double th) { return spl->jet_raw(th); };
  raw.t0 = 0.0;
  raw.t1 = spl->t_max();
  raw.closed = closed;
  return arc_length_reparametrize(raw, 256, 1e-10);
}

CurveData curve_data(const PlaneCurve& curve, double s) {
  const CurveJet j = curve.eval(s);
  CurveData d;
  d.u = j.u; d.v = j.v;
  d.du = j.du; d.dv = j.dv;
  d.ddu = j.ddu; d.ddv = j.ddv;
  d.r2 = j.u * j.u + j.v * j.v;
  d.a = j.u * j.du + j.v * j.dv;
  d.b = j.u * j.dv - j.v * j.du;
  return d;
}

double geodesic_curvature(const PlaneCurve& curve, double s) {
  const CurveData d = curve_data(curve, s);
  return 0.5 * ((d.du * d.ddv - d.dv * d.ddu) * (d.r2 + 1.0) - 2.0 * d.b);
}

PlaneCurve arc_length_reparametrize(const RawCurve& raw, int n_samples,
                                    double tol) {
  return PlaneCurve(std::make_shared<ReparamImpl>(raw, n_samples, tol));
}

PlaneCurve mobius_apply(const Mat2c& A, const PlaneCurve& curve, double tol) {
  // Unitarity check.
  const Mat2c AtA = adjoint(A) * A;
  double dev = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      dev = std::max(dev, std::abs(AtA(i, j) - (i == j ? Complex(1) : Complex(0))));
  if (dev > std::max(tol, 1e-10))
    throw std::invalid_argument("mobius_apply: matrix is not unitary");

  const Complex a = A(0, 0), b = A(0, 1), c = A(1, 0), d = A(1, 1);
  const Complex detA = a * d - b * c;

  // Pole scan along the source curve.
  const double L = curve.total_length();
  for (int i = 0; i <= 512; ++i) {
    const double s = L * i / 512.0;
    const CurveJet j = curve.eval(s);
    const Complex z(j.u, j.v);
    if (std::abs(c * z + d) < 1e-6)
      throw std::domain_error("mobius_apply: curve crosses the pole near s=" +
                              std::to_string(s));
  }

  // Raw curve in the source arc-length parameter; chain rule for jets.
  RawCurve raw;
  raw.t0 = 0.0;
  raw.t1 = L;
  raw.closed = curve.closed();
  raw.eval = [A, curve, a, b, c, d, detA](double s) {
    const CurveJet j = curve.eval(s);
    const Complex z(j.u, j.v);
    const Complex dz(j.du, j.dv);
    const Complex ddz(j.ddu, j.ddv);
    const Complex den = c * z + d;
    const Complex w = (a * z + b) / den;
    const Complex wz = detA / (den * den);
    const Complex wzz = -2.0 * c * detA / (den * den * den);
    const Complex dw = wz * dz;
    const Complex ddw = wzz * dz * dz + wz * ddz;
    CurveJet out;
    out.u = w.real(); out.v = w.imag();
    out.du = dw.real(); out.dv = dw.imag();
    out.ddu = ddw.real(); out.ddv = ddw.imag();
    return out;
  };
  return arc_length_reparametrize(raw, 512, tol);
}

PlaneCurve curve_from_json(const nlohmann::json& j) {
  const std::string family = j.at("family").get<std::string>();
  if (family == "circle") {
    const double r0 = j.at("r0").get<double>();
    const int eps = j.value("eps", 1);
    return make_circle(r0, eps);
  }
  if (family == "line") {
    Vec2 p0{j.value("u0", 0.0), j.value("v0", 0.0)};
    Vec2 dir{j.value("du", 1.0), j.value("dv", 0.0)};
    const double length = j.value("length", 10.0);
    return make_line(p0, dir, length);
  }
  if (family == "samples") {
    std::vector<Vec2> pts;
    for (const auto& p : j.at("points"))
      pts.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    return make_spline(pts, j.value("closed", false));
  }
  throw std::invalid_argument("curve_from_json: unknown family " + family);
}

}  // namespace ehsurf
