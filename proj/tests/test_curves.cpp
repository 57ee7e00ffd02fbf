#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ehsurf/curves.hpp"

using namespace ehsurf;

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;

RawCurve ellipse_raw() {
  RawCurve raw;
  raw.t0 = 0.0;
  raw.t1 = 2.0 * kPi;
  raw.closed = true;
  raw.eval = [](double th) {
    CurveJet j;
    j.u = 2.0 * std::cos(th);
    j.v = std::sin(th);
    j.du = -2.0 * std::sin(th);
    j.dv = std::cos(th);
    j.ddu = -2.0 * std::cos(th);
    j.ddv = -std::sin(th);
    return j;
  };
  return raw;
}

}  // namespace

TEST_CASE("circle evaluation, arc length and closure") {
  const PlaneCurve c = make_circle(2.0);
  CHECK(c.total_length() == doctest::Approx(4.0 * kPi));
  CHECK(c.closed());
  for (int i = 0; i < 16; ++i) {
    const double s = c.total_length() * i / 16.0;
    const CurveJet j = c.eval(s);
    CHECK(std::abs(j.du * j.du + j.dv * j.dv - 1.0) < 1e-13);
  }
  const CurveJet a = c.eval(0.0), b = c.eval(c.total_length());
  CHECK(std::abs(a.u - b.u) < 1e-12);
  CHECK(std::abs(a.v - b.v) < 1e-12);
}

TEST_CASE("curve_data derived scalars") {
  SUBCASE("unit circle at s=0") {
    const CurveData d = curve_data(make_circle(1.0), 0.0);
    CHECK(d.u == doctest::Approx(1.0));
    CHECK(d.v == doctest::Approx(0.0));
    CHECK(d.a == doctest::Approx(0.0));
    CHECK(d.b == doctest::Approx(1.0));
  }
  SUBCASE("line u=s, v=0 at s=1") {
    const CurveData d = curve_data(make_line({0, 0}, {1, 0}, 10.0), 1.0);
    CHECK(d.r2 == doctest::Approx(1.0));
    CHECK(d.a == doctest::Approx(1.0));
    CHECK(d.b == doctest::Approx(0.0));
  }
  SUBCASE("circle r0=2 anywhere") {
    const PlaneCurve c = make_circle(2.0);
    for (const double s : {0.0, 1.0, 3.7}) {
      const CurveData d = curve_data(c, s);
      CHECK(d.r2 == doctest::Approx(4.0).epsilon(1e-13));
      CHECK(std::abs(d.a) < 1e-13);
      CHECK(d.b == doctest::Approx(2.0).epsilon(1e-13));
    }
  }
  SUBCASE("a^2 + b^2 = r^2 under arc length") {
    const PlaneCurve e = arc_length_reparametrize(ellipse_raw(), 256, 1e-10);
    for (int i = 0; i < 20; ++i) {
      const CurveData d = curve_data(e, e.total_length() * i / 20.0);
      CHECK(d.a * d.a + d.b * d.b == doctest::Approx(d.r2).epsilon(1e-10));
    }
  }
}

TEST_CASE("geodesic curvature on the sphere") {
  // Circles of radius r0 have k_g = (1 - r0^2)/(2 r0).
  for (const double r0 : {0.5, 1.0, 2.0, 3.0}) {
    const PlaneCurve c = make_circle(r0);
    const double expect = (1.0 - r0 * r0) / (2.0 * r0);
    for (int i = 0; i < 16; ++i) {
      const double s = c.total_length() * i / 16.0;
      CHECK(std::abs(geodesic_curvature(c, s) - expect) < 1e-12);
    }
  }
  // A line through the origin is a great circle through 0 and infinity.
  const PlaneCurve line = make_line({0, 0}, {1, 0}, 10.0);
  CHECK(std::abs(geodesic_curvature(line, 1.0)) < 1e-14);
  CHECK(geodesic_curvature(make_circle(2.0), 0.3) == doctest::Approx(-0.75));
}

TEST_CASE("arc length reparametrization") {
  SUBCASE("circle of radius 2 parametrized by angle") {
    RawCurve raw;
    raw.t0 = 0.0;
    raw.t1 = 2.0 * kPi;
    raw.closed = true;
    raw.eval = [](double th) {
      CurveJet j;
      j.u = 2.0 * std::cos(th);
      j.v = 2.0 * std::sin(th);
      j.du = -2.0 * std::sin(th);
      j.dv = 2.0 * std::cos(th);
      j.ddu = -2.0 * std::cos(th);
      j.ddv = -2.0 * std::sin(th);
      return j;
    };
    const PlaneCurve c = arc_length_reparametrize(raw, 64, 1e-12);
    CHECK(c.total_length() == doctest::Approx(4.0 * kPi).epsilon(1e-12));
    for (const double s : {0.0, 1.0, 5.0, 11.0}) {
      const CurveJet j = c.eval(s);
      CHECK(j.u == doctest::Approx(2.0 * std::cos(s / 2.0)).epsilon(1e-10));
      CHECK(j.v == doctest::Approx(2.0 * std::sin(s / 2.0)).epsilon(1e-10));
      CHECK(std::abs(j.du * j.du + j.dv * j.dv - 1.0) < 1e-12);
    }
  }
  SUBCASE("already-arc-length line stays itself") {
    RawCurve raw;
    raw.t0 = 0.0;
    raw.t1 = 5.0;
    raw.eval = [](double s) {
      CurveJet j;
      j.u = s;
      j.v = 0.0;
      j.du = 1.0;
      j.dv = 0.0;
      return j;
    };
    const PlaneCurve c = arc_length_reparametrize(raw, 32, 1e-12);
    CHECK(c.total_length() == doctest::Approx(5.0).epsilon(1e-13));
    const CurveJet j = c.eval(1.7);
    CHECK(j.u == doctest::Approx(1.7).epsilon(1e-12));
    CHECK(std::abs(j.v) < 1e-14);
  }
  SUBCASE("ellipse perimeter") {
    const PlaneCurve e = arc_length_reparametrize(ellipse_raw(), 256, 1e-10);
    CHECK(e.total_length() == doctest::Approx(9.688448220547675).epsilon(1e-9));
    for (int i = 0; i < 24; ++i) {
      const CurveJet j = e.eval(e.total_length() * i / 24.0);
      CHECK(std::abs(j.du * j.du + j.dv * j.dv - 1.0) < 1e-11);
    }
  }
  SUBCASE("non-regular parametrization is rejected with a location") {
    RawCurve raw;
    raw.t0 = -1.0;
    raw.t1 = 1.0;
    raw.eval = [](double th) {
      CurveJet j;  // speed vanishes at th = 0
      j.u = th * th;
      j.v = th * th * th;
      j.du = 2.0 * th;
      j.dv = 3.0 * th * th;
      j.ddu = 2.0;
      j.ddv = 6.0 * th;
      return j;
    };
    CHECK_THROWS_AS(arc_length_reparametrize(raw, 64, 1e-10), std::domain_error);
  }
}

TEST_CASE("sampled spline curves") {
  std::vector<Vec2> pts;
  const int n = 600;
  for (int i = 0; i < n; ++i) {
    const double th = 2.0 * kPi * i / n;
    pts.push_back({std::cos(th), std::sin(th)});
  }
  const PlaneCurve c = make_spline(pts, true);
  CHECK(c.total_length() == doctest::Approx(2.0 * kPi).epsilon(1e-6));
  // Differentiation consistency: central differences of (u,v) reproduce
  // (du,dv) to O(h^2).
  const double h = 1e-4;
  for (const double s : {0.4, 2.0, 5.5}) {
    const CurveJet j0 = c.eval(s);
    const CurveJet jp = c.eval(s + h), jm = c.eval(s - h);
    CHECK(std::abs((jp.u - jm.u) / (2.0 * h) - j0.du) < 1e-6);
    CHECK(std::abs((jp.v - jm.v) / (2.0 * h) - j0.dv) < 1e-6);
    CHECK(std::abs(j0.du * j0.du + j0.dv * j0.dv - 1.0) < 1e-10);
  }
  CHECK(std::abs(geodesic_curvature(c, 1.0)) < 1e-4);  // great circle
}

TEST_CASE("Moebius transforms") {
  SUBCASE("identity") {
    Mat2c A;
    A(0, 0) = A(1, 1) = 1.0;
    const PlaneCurve c = make_circle(2.0);
    const PlaneCurve m = mobius_apply(A, c, 1e-10);
    CHECK(m.total_length() == doctest::Approx(c.total_length()).epsilon(1e-10));
    const CurveJet a = c.eval(1.0), b = m.eval(1.0);
    CHECK(a.u == doctest::Approx(b.u).epsilon(1e-9));
    CHECK(a.v == doctest::Approx(b.v).epsilon(1e-9));
  }
  SUBCASE("rotation subgroup preserves k_g at matched arc length") {
    const double th = 0.8;
    Mat2c A;
    A(0, 0) = std::polar(1.0, th);
    A(1, 1) = 1.0;
    for (const double r0 : {0.7, 2.0}) {
      const PlaneCurve c = make_circle(r0);
      const PlaneCurve m = mobius_apply(A, c, 1e-10);
      CHECK(m.total_length() == doctest::Approx(c.total_length()).epsilon(1e-9));
      for (int i = 0; i < 8; ++i) {
        const double s = c.total_length() * i / 8.0;
        // z -> e^{i th} z maps Gamma(s) to the rotated circle at shifted
        // arc length; k_g is constant on circles so any sample matches.
        CHECK(geodesic_curvature(m, s) ==
              doctest::Approx(geodesic_curvature(c, s)).epsilon(1e-8));
      }
    }
  }
  SUBCASE("great-circle arc maps to a great circle (k_g = 0)") {
    // Open arc of the unit circle avoiding z = 1, where this A has its pole.
    RawCurve raw;
    raw.t0 = 0.7;
    raw.t1 = 2.0 * kPi - 0.7;
    raw.eval = [](double th) {
      CurveJet j;
      j.u = std::cos(th);
      j.v = std::sin(th);
      j.du = -std::sin(th);
      j.dv = std::cos(th);
      j.ddu = -std::cos(th);
      j.ddv = -std::sin(th);
      return j;
    };
    const PlaneCurve arc = arc_length_reparametrize(raw, 128, 1e-10);
    Mat2c A;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    A(0, 0) = inv_sqrt2;
    A(0, 1) = inv_sqrt2;
    A(1, 0) = -inv_sqrt2;
    A(1, 1) = inv_sqrt2;
    const PlaneCurve img = mobius_apply(A, arc, 1e-10);
    for (int i = 1; i < 12; ++i) {
      const double s = img.total_length() * i / 12.0;
      CHECK(std::abs(geodesic_curvature(img, s)) < 1e-8);
    }
  }
  SUBCASE("pole crossing and non-unitary matrices are rejected") {
    Mat2c A;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    A(0, 0) = inv_sqrt2;
    A(0, 1) = inv_sqrt2;
    A(1, 0) = -inv_sqrt2;
    A(1, 1) = inv_sqrt2;
    CHECK_THROWS_AS(mobius_apply(A, make_circle(1.0), 1e-10),
                    std::domain_error);  // unit circle passes through z = 1
    Mat2c B;
    B(0, 0) = 2.0;
    B(1, 1) = 1.0;
    CHECK_THROWS_AS(mobius_apply(B, make_circle(1.0), 1e-10),
                    std::invalid_argument);
  }
}

TEST_CASE("curve_from_json") {
  const PlaneCurve c =
      curve_from_json(nlohmann::json{{"family", "circle"}, {"r0", 2.0}, {"eps", 1}});
  CHECK(c.is_circle());
  CHECK(c.circle_radius() == doctest::Approx(2.0));
  nlohmann::json samples = {{"family", "samples"}, {"closed", true}};
  for (int i = 0; i < 64; ++i) {
    const double th = 2.0 * kPi * i / 64;
    samples["points"].push_back({1.5 * std::cos(th), 1.5 * std::sin(th)});
  }
  const PlaneCurve s = curve_from_json(samples);
  CHECK(s.total_length() == doctest::Approx(3.0 * kPi).epsilon(1e-3));
  CHECK_THROWS_AS(curve_from_json(nlohmann::json{{"family", "nope"}}),
                  std::invalid_argument);
}
