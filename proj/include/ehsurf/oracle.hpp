#pragma once

#include <functional>
#include <vector>

namespace ehsurf::oracle {

// Finite-difference tensor calculus on a metric given as a raw callback.
// This engine is the independent cross-check for every closed form in the
// library; it never calls the modules it validates.

struct MetricFn {
  int dim = 0;
  // Fills g (row-major dim x dim, symmetric) at coords.
  std::function<void(const double* coords, double* g)> eval;
};

struct FdOptions {
  // Step for first derivatives of the metric; scaled by max(1,|coord|).
  double h1 = 1e-3;
  // Step for the outer derivative in curvature formulas.
  double h2 = 1e-2;
  bool richardson = true;
};

// Central difference with one Richardson step (O(h^4) with richardson=true).
double fd_partial(const std::function<double(const double*)>& f,
                  const double* coords, int dim, int index, double h,
                  bool richardson = true);

// Christoffel symbols of the first kind, Gamma[i][j][k] = Gamma_{ijk}.
std::vector<double> fd_christoffels_first(const MetricFn& m,
                                          const double* coords,
                                          const FdOptions& opt = {});

// Christoffel symbols of the second kind, Gamma[k][i][j] = Gamma^k_{ij}.
std::vector<double> fd_christoffels(const MetricFn& m, const double* coords,
                                    const FdOptions& opt = {});

// Riemann tensor R^a_{bcd} (index layout [a][b][c][d]) and Ricci R_{bd}.
std::vector<double> fd_riemann(const MetricFn& m, const double* coords,
                               const FdOptions& opt = {});
std::vector<double> fd_ricci(const MetricFn& m, const double* coords,
                             const FdOptions& opt = {});

// Covariant derivative of the metric (should vanish): nabla_k g_ij.
double fd_metric_compat_maxerr(const MetricFn& m, const double* coords,
                               const FdOptions& opt = {});

// Second fundamental form of a hypersurface embedded by `embedding`
// (chart dim n -> ambient dim n+1 ... here 3 -> 4), with unit normal
// `normal` and ambient Christoffels supplied by `ambient_gamma`
// (layout [k][i][j], evaluated at the ambient point).
// II_ij = g(d_i emb, nabla_{d_j} N).
struct ShapeOperatorInput {
  int chart_dim = 3;
  int ambient_dim = 4;
  std::function<void(const double* chart, double* ambient)> embedding;
  std::function<void(const double* chart, double* normal)> normal;
  std::function<void(const double* ambient, double* gamma)> ambient_gamma;
  MetricFn ambient_metric;
};

std::vector<double> fd_shape_operator(const ShapeOperatorInput& in,
                                      const double* chart_coords,
                                      double h = 1e-4);

// Scalar Laplacian with the positive convention (Delta = -div grad):
// Delta f = -(1/sqrt(det g)) d_i ( sqrt(det g) g^{ij} d_j f ).
double fd_laplacian(const std::function<double(const double*)>& f,
                    const MetricFn& m, const double* coords,
                    const FdOptions& opt = {});

}  // namespace ehsurf::oracle
