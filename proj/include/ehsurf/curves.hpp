#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ehsurf/linalg.hpp"
#include <json.hpp>

namespace ehsurf {

// Position and s-derivatives (arc length) of a plane curve Gamma = u + i v.
struct CurveJet {
  double u = 0, v = 0;
  double du = 0, dv = 0;
  double ddu = 0, ddv = 0;
};

enum class CurveFamily { Circle, Line, Generic };

// Arc-length-parametrized plane curve. Immutable after construction.
class PlaneCurve {
 public:
  struct Impl {
    virtual ~Impl() = default;
    virtual CurveJet eval(double s) const = 0;
    virtual double total_length() const = 0;
    virtual bool closed() const = 0;
    virtual CurveFamily family() const = 0;
    // Circle radius when family() == Circle, else 0.
    virtual double circle_radius() const { return 0.0; }
    virtual int circle_eps() const { return +1; }
  };

  explicit PlaneCurve(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  CurveJet eval(double s) const { return impl_->eval(s); }
  double total_length() const { return impl_->total_length(); }
  bool closed() const { return impl_->closed(); }
  CurveFamily family() const { return impl_->family(); }
  bool is_circle() const { return family() == CurveFamily::Circle; }
  double circle_radius() const { return impl_->circle_radius(); }
  int circle_eps() const { return impl_->circle_eps(); }

 private:
  std::shared_ptr<const Impl> impl_;
};

// Per-point scalars derived from Cartesian data only:
//   r^2 = u^2+v^2,  a = u u' + v v' (= r r'),  b = u v' - v u' (= r^2 phi').
struct CurveData {
  double u, v, du, dv, ddu, ddv;
  double r2;
  double a;
  double b;
};

PlaneCurve make_circle(double r0, int eps = +1);
// Line through p0 with unit direction dir, s in [0, length).
PlaneCurve make_line(Vec2 p0, Vec2 dir, double length);
// Cubic spline through the sample points, reparametrized by arc length.
PlaneCurve make_spline(const std::vector<Vec2>& points, bool closed);

CurveData curve_data(const PlaneCurve& curve, double s);

// Geodesic curvature of Gamma as a curve in S^2 (stereographic chart):
//   k_g = ((u' v'' - v' u'')(r^2+1) - 2(u v' - v u')) / 2.
double geodesic_curvature(const PlaneCurve& curve, double s);

// A curve with an arbitrary regular parameter, to be reparametrized.
struct RawCurve {
  std::function<CurveJet(double)> eval;  // jets w.r.t. the raw parameter
  double t0 = 0, t1 = 1;
  bool closed = false;
};

PlaneCurve arc_length_reparametrize(const RawCurve& raw, int n_samples,
                                    double tol);

// Moebius transform z -> (a z + b)/(c z + d), A in U(2), re-arc-length
// parametrized. Rejects non-unitary A and curves crossing the pole.
PlaneCurve mobius_apply(const Mat2c& A, const PlaneCurve& curve, double tol);

// {"family":"circle","r0":2.0,"eps":1} | {"family":"line",...}
// | {"family":"samples","points":[[u,v],...],"closed":bool}
PlaneCurve curve_from_json(const nlohmann::json& j);

}  // namespace ehsurf
