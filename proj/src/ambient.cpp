#include "ehsurf/ambient.hpp"

#include <cmath>
#include <stdexcept>

namespace ehsurf::ambient {

namespace {

void require_on_m4(const AmbientPoint& p) {
  if (!(p.u1() > 0.0))
    throw std::domain_error("ambient: point is on the zero section (u1 = 0)");
}

}  // namespace

Potentials potentials(const AmbientPoint& p, double t) {
  require_on_m4(p);
  if (t < 0.0) throw std::domain_error("ambient: t must be nonnegative");
  Potentials q;
  q.t = t;
  q.u1 = p.u1();
  const double t4 = t * t * t * t;
  const double s = std::sqrt(q.u1 * q.u1 + t4);
  q.G = 2.0 * s / q.u1;
  q.H = 2.0 * t4 / (q.u1 * q.u1 * s);
  q.K = q.G - q.H * q.u1;
  // Defined through H_{,x_i} = -2 x_i I, so
  //   I = 2 t^4 (3 u1^2 + 2 t^4) / (u1^3 (u1^2+t^4)^{3/2}).
  q.I = 2.0 * t4 * (3.0 * q.u1 * q.u1 + 2.0 * t4) /
        (q.u1 * q.u1 * q.u1 * s * s * s);

  const double sq12 = p.x[0] * p.x[0] + p.x[1] * p.x[1];
  const double sq34 = p.x[2] * p.x[2] + p.x[3] * p.x[3];
  q.A1 = 0.5 * q.H * q.H * sq34 - 0.25 * q.G * (2.0 * q.H - q.I * sq12);
  q.A2 = 0.5 * q.H * q.H * sq12 - 0.25 * q.G * (2.0 * q.H - q.I * sq34);
  q.B1 = 0.25 * (q.G * (q.H - q.I * sq12) + q.H * q.H * (sq12 - sq34));
  q.B2 = 0.25 * (q.G * (q.H - q.I * sq34) + q.H * q.H * (sq34 - sq12));
  q.C = q.I * q.G - 2.0 * q.H * q.H;
  return q;
}

AmbientMetric metric(const AmbientPoint& p, double t) {
  const Potentials q = potentials(p, t);
  const double x1 = p.x[0], x2 = p.x[1], x3 = p.x[2], x4 = p.x[3];
  const double G1 = q.G - q.H * (x1 * x1 + x2 * x2);
  const double G2 = q.G - q.H * (x3 * x3 + x4 * x4);
  const double G3 = q.H * (x1 * x4 - x2 * x3);
  const double G4 = q.H * (x1 * x3 + x2 * x4);
  AmbientMetric m;
  const double g[4][4] = {{G1, 0, -G4, -G3},
                          {0, G1, G3, -G4},
                          {-G4, G3, G2, 0},
                          {-G3, -G4, 0, G2}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m.g(i, j) = g[i][j];
  // The displayed inverse with prefactor 1/sqrt(det) = 1/4.
  const double gi[4][4] = {{G2, 0, G4, G3},
                           {0, G2, -G3, G4},
                           {G4, -G3, G1, 0},
                           {G3, G4, 0, G1}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m.g_inv(i, j) = 0.25 * gi[i][j];
  const double block = G1 * G2 - G3 * G3 - G4 * G4;
  m.det = block * block;
  return m;
}

namespace {

struct BaseSymbols {
  // First kind base entries Gamma_{11k}, Gamma_{13k} (k = 1..4).
  double g11[4];
  double g13[4];
};

BaseSymbols first_base(const AmbientPoint& p, const Potentials& q) {
  const double x1 = p.x[0], x2 = p.x[1], x3 = p.x[2], x4 = p.x[3];
  const double sq12 = x1 * x1 + x2 * x2;
  BaseSymbols b;
  b.g11[0] = -x1 * (2.0 * q.H - q.I * sq12);
  b.g11[1] = x2 * (2.0 * q.H - q.I * sq12);
  b.g11[2] = 2.0 * q.I * (x1 * x2 * x4 + 0.5 * x3 * (x1 * x1 - x2 * x2));
  b.g11[3] = -2.0 * q.I * (x1 * x2 * x3 + 0.5 * x4 * (x2 * x2 - x1 * x1));
  b.g13[0] = -x3 * (q.H - q.I * sq12);
  b.g13[1] = x4 * (q.H - q.I * sq12);
  // Gamma_{133}, Gamma_{134} via the index swap (1,2)<->(3,4):
  // Gamma_{133}(x) = Gamma_{131}(swap x), Gamma_{134}(x) = Gamma_{132}(swap x).
  const double sq34 = x3 * x3 + x4 * x4;
  b.g13[2] = -x1 * (q.H - q.I * sq34);
  b.g13[3] = x2 * (q.H - q.I * sq34);
  return b;
}

AmbientPoint swapped(const AmbientPoint& p) {
  return AmbientPoint{{p.x[2], p.x[3], p.x[0], p.x[1]}};
}

}  // namespace

Rank3 christoffels_first(const AmbientPoint& p, double t) {
  const Potentials q = potentials(p, t);
  const BaseSymbols b = first_base(p, q);
  const AmbientPoint ps = swapped(p);
  const Potentials qs = potentials(ps, t);
  const BaseSymbols bs = first_base(ps, qs);

  double g11[4], g12[4], g13[4], g14[4], g33[4], g34[4];
  for (int k = 0; k < 4; ++k) {
    g11[k] = b.g11[k];
    g13[k] = b.g13[k];
  }
  // Gamma_{33 k}(x) = Gamma_{11 kbar}(swap x), kbar = k+2 mod 4.
  for (int k = 0; k < 4; ++k) g33[k] = bs.g11[(k + 2) % 4];
  // Even/odd shifts (1-based indices: even k uses k-1, odd k uses -(k+1)).
  const auto shift = [](const double* src, double* dst) {
    dst[0] = -src[1];  // k=1 odd -> -src(2)
    dst[1] = src[0];   // k=2 even -> src(1)
    dst[2] = -src[3];  // k=3 odd -> -src(4)
    dst[3] = src[2];   // k=4 even -> src(3)
  };
  shift(g11, g12);
  shift(g13, g14);
  shift(g33, g34);

  Rank3 out{};
  const auto set = [&](int i, int j, const double* vals) {
    for (int k = 0; k < 4; ++k) {
      out[i][j][k] = vals[k];
      out[j][i][k] = vals[k];
    }
  };
  double g22[4], g24[4], g23[4], g44[4];
  for (int k = 0; k < 4; ++k) {
    g22[k] = -g11[k];
    g24[k] = -g13[k];
    g23[k] = g14[k];
    g44[k] = -g33[k];
  }
  set(0, 0, g11);
  set(0, 1, g12);
  set(0, 2, g13);
  set(0, 3, g14);
  set(1, 1, g22);
  set(1, 2, g23);
  set(1, 3, g24);
  set(2, 2, g33);
  set(2, 3, g34);
  set(3, 3, g44);
  return out;
}

Rank3 christoffels_second(const AmbientPoint& p, double t) {
  const Potentials q = potentials(p, t);
  const double x1 = p.x[0], x2 = p.x[1], x3 = p.x[2], x4 = p.x[3];
  const double P3 = x1 * x2 * x4 + 0.5 * x3 * (x1 * x1 - x2 * x2);
  const double P4 = x1 * x2 * x3 + 0.5 * x4 * (x2 * x2 - x1 * x1);
  const double Q1 = x2 * x3 * x4 + 0.5 * x1 * (x3 * x3 - x4 * x4);
  const double Q2 = x1 * x3 * x4 + 0.5 * x2 * (x4 * x4 - x3 * x3);

  // Upper-index tuples (i = 1..4) for the base lower pairs.
  double g11[4] = {x1 * q.A1, -x2 * q.A1, 0.5 * q.C * P3, -0.5 * q.C * P4};
  double g13[4] = {-x3 * q.B1, x4 * q.B1, -x1 * q.B2, x2 * q.B2};
  double g33[4] = {0.5 * q.C * Q1, -0.5 * q.C * Q2, x3 * q.A2, -x4 * q.A2};

  double g12[4], g14[4], g34[4];
  const auto shift = [](const double* src, double* dst) {
    dst[0] = -src[1];
    dst[1] = src[0];
    dst[2] = -src[3];
    dst[3] = src[2];
  };
  shift(g11, g12);
  shift(g13, g14);
  shift(g33, g34);

  double g22[4], g23[4], g24[4], g44[4];
  for (int i = 0; i < 4; ++i) {
    g22[i] = -g11[i];
    g23[i] = g14[i];
    g24[i] = -g13[i];
    g44[i] = -g33[i];
  }

  Rank3 out{};  // out[k][i][j] = Gamma^k_{ij}
  const auto set = [&](int i, int j, const double* vals) {
    for (int k = 0; k < 4; ++k) {
      out[k][i][j] = vals[k];
      out[k][j][i] = vals[k];
    }
  };
  set(0, 0, g11);
  set(0, 1, g12);
  set(0, 2, g13);
  set(0, 3, g14);
  set(1, 1, g22);
  set(1, 2, g23);
  set(1, 3, g24);
  set(2, 2, g33);
  set(2, 3, g34);
  set(3, 3, g44);
  return out;
}

}  // namespace ehsurf::ambient
