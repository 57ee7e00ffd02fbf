#pragma once

#include <array>

#include "ehsurf/linalg.hpp"

namespace ehsurf::ambient {

// Point on M^4 (the complement of the zero section), coordinates x1..x4
// = (Re z1, Im z1, Re z2, Im z2) on C^2 \ {0} / {+-1}.
struct AmbientPoint {
  Vec4 x{};
  double u1() const {
    return x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
  }
};

// Scalar potentials of the metric and its connection at a point:
//   G = 2 sqrt(u1^2+t^4)/u1,  H = 2 t^4 /(u1^2 sqrt(u1^2+t^4)),
//   K = G - H u1 = 4/G,       I = -dH/du1 /.. (H_{,x_i} = -2 x_i I),
// plus the combinations A1, A2, B1, B2, C entering the Christoffel symbols.
struct Potentials {
  double u1, t;
  double G, H, K, I;
  double A1, A2, B1, B2, C;
};

struct AmbientMetric {
  Mat4 g;
  Mat4 g_inv;
  double det = 0.0;  // identically 16
};

using Rank3 = std::array<std::array<std::array<double, 4>, 4>, 4>;

Potentials potentials(const AmbientPoint& p, double t);
AmbientMetric metric(const AmbientPoint& p, double t);

// First kind, gamma[i][j][k] = Gamma_{ijk}; second kind,
// gamma[k][i][j] = Gamma^k_{ij}. Six base entries per kind are evaluated
// from closed forms; the rest are produced by the symmetry table
// (index swap (1,2)<->(3,4), pair flips, even/odd shifts).
Rank3 christoffels_first(const AmbientPoint& p, double t);
Rank3 christoffels_second(const AmbientPoint& p, double t);

}  // namespace ehsurf::ambient
