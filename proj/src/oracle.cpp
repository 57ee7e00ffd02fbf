#include "ehsurf/oracle.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>
#include <vector>

namespace ehsurf::oracle {

namespace {

double step_for(double coord, double h) { return h * std::max(1.0, std::abs(coord)); }

// Evaluates f at coords with coords[index] shifted by delta.
double shifted(const std::function<double(const double*)>& f,
               const double* coords, int dim, int index, double delta) {
  std::vector<double> x(coords, coords + dim);
  x[index] += delta;
  return f(x.data());
}

}  // namespace

double fd_partial(const std::function<double(const double*)>& f,
                  const double* coords, int dim, int index, double h,
                  bool richardson) {
  const double d1 = (shifted(f, coords, dim, index, h) -
                     shifted(f, coords, dim, index, -h)) /
                    (2.0 * h);
  if (!richardson) return d1;
  const double d2 = (shifted(f, coords, dim, index, 0.5 * h) -
                     shifted(f, coords, dim, index, -0.5 * h)) /
                    h;
  return (4.0 * d2 - d1) / 3.0;
}

namespace {

// dg[k][i][j] = d_k g_ij
std::vector<double> metric_partials(const MetricFn& m, const double* coords,
                                    const FdOptions& opt) {
  const int n = m.dim;
  std::vector<double> dg(n * n * n);
  std::vector<double> gp(n * n), gm(n * n), gp2(n * n), gm2(n * n);
  std::vector<double> x(coords, coords + n);
  for (int k = 0; k < n; ++k) {
    const double h = step_for(coords[k], opt.h1);
    x[k] = coords[k] + h;  m.eval(x.data(), gp.data());
    x[k] = coords[k] - h;  m.eval(x.data(), gm.data());
    if (opt.richardson) {
      x[k] = coords[k] + 0.5 * h;  m.eval(x.data(), gp2.data());
      x[k] = coords[k] - 0.5 * h;  m.eval(x.data(), gm2.data());
    }
    x[k] = coords[k];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const double d1 = (gp[i * n + j] - gm[i * n + j]) / (2.0 * h);
        double d = d1;
        if (opt.richardson) {
          const double d2 = (gp2[i * n + j] - gm2[i * n + j]) / h;
          d = (4.0 * d2 - d1) / 3.0;
        }
        dg[(k * n + i) * n + j] = d;
      }
  }
  return dg;
}

std::vector<double> metric_inverse(const MetricFn& m, const double* coords) {
  const int n = m.dim;
  std::vector<double> g(n * n);
  m.eval(coords, g.data());
  // Gauss-Jordan
  std::vector<double> a(g), inv(n * n, 0.0);
  for (int i = 0; i < n; ++i) inv[i * n + i] = 1.0;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
    if (a[piv * n + col] == 0.0)
      throw std::domain_error("oracle: singular metric");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a[piv * n + j], a[col * n + j]);
        std::swap(inv[piv * n + j], inv[col * n + j]);
      }
    const double p = 1.0 / a[col * n + col];
    for (int j = 0; j < n; ++j) {
      a[col * n + j] *= p;
      inv[col * n + j] *= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[r * n + col];
      if (f == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        a[r * n + j] -= f * a[col * n + j];
        inv[r * n + j] -= f * inv[col * n + j];
      }
    }
  }
  return inv;
}

}  // namespace

std::vector<double> fd_christoffels_first(const MetricFn& m,
                                          const double* coords,
                                          const FdOptions& opt) {
  const int n = m.dim;
  const std::vector<double> dg = metric_partials(m, coords, opt);
  std::vector<double> gamma(n * n * n);
  const auto d = [&](int k, int i, int j) { return dg[(k * n + i) * n + j]; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        gamma[(i * n + j) * n + k] =
            0.5 * (d(j, i, k) + d(i, j, k) - d(k, i, j));
  return gamma;
}

std::vector<double> fd_christoffels(const MetricFn& m, const double* coords,
                                    const FdOptions& opt) {
  const int n = m.dim;
  const std::vector<double> first = fd_christoffels_first(m, coords, opt);
  const std::vector<double> ginv = metric_inverse(m, coords);
  std::vector<double> gamma(n * n * n, 0.0);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int l = 0; l < n; ++l)
          s += ginv[k * n + l] * first[(i * n + j) * n + l];
        gamma[(k * n + i) * n + j] = s;
      }
  return gamma;
}

std::vector<double> fd_riemann(const MetricFn& m, const double* coords,
                               const FdOptions& opt) {
  const int n = m.dim;
  // dGamma[mu][k][i][j] = d_mu Gamma^k_ij, by Richardson central differences
  // of the (itself FD-assembled) Christoffels.
  std::vector<double> dG(n * n * n * n);
  std::vector<double> x(coords, coords + n);
  for (int mu = 0; mu < n; ++mu) {
    const double h = step_for(coords[mu], opt.h2);
    const auto eval_at = [&](double delta) {
      x[mu] = coords[mu] + delta;
      auto g = fd_christoffels(m, x.data(), opt);
      x[mu] = coords[mu];
      return g;
    };
    const auto gp = eval_at(h), gm = eval_at(-h);
    std::vector<double> gp2, gm2;
    if (opt.richardson) {
      gp2 = eval_at(0.5 * h);
      gm2 = eval_at(-0.5 * h);
    }
    for (int idx = 0; idx < n * n * n; ++idx) {
      const double d1 = (gp[idx] - gm[idx]) / (2.0 * h);
      double d = d1;
      if (opt.richardson) {
        const double d2 = (gp2[idx] - gm2[idx]) / h;
        d = (4.0 * d2 - d1) / 3.0;
      }
      dG[mu * n * n * n + idx] = d;
    }
  }
  const std::vector<double> G = fd_christoffels(m, coords, opt);
  const auto gam = [&](int k, int i, int j) { return G[(k * n + i) * n + j]; };
  const auto dgam = [&](int mu, int k, int i, int j) {
    return dG[((mu * n + k) * n + i) * n + j];
  };
  // R^a_{b c d} = d_c Gamma^a_db - d_d Gamma^a_cb
  //              + Gamma^a_{c l} Gamma^l_{d b} - Gamma^a_{d l} Gamma^l_{c b}
  std::vector<double> R(n * n * n * n, 0.0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          double v = dgam(c, a, d, b) - dgam(d, a, c, b);
          for (int l = 0; l < n; ++l)
            v += gam(a, c, l) * gam(l, d, b) - gam(a, d, l) * gam(l, c, b);
          R[((a * n + b) * n + c) * n + d] = v;
        }
  return R;
}

std::vector<double> fd_ricci(const MetricFn& m, const double* coords,
                             const FdOptions& opt) {
  const int n = m.dim;
  const std::vector<double> R = fd_riemann(m, coords, opt);
  std::vector<double> ric(n * n, 0.0);
  for (int b = 0; b < n; ++b)
    for (int d = 0; d < n; ++d) {
      double s = 0.0;
      for (int a = 0; a < n; ++a) s += R[((a * n + b) * n + a) * n + d];
      ric[b * n + d] = s;
    }
  return ric;
}

double fd_metric_compat_maxerr(const MetricFn& m, const double* coords,
                               const FdOptions& opt) {
  const int n = m.dim;
  const std::vector<double> dg = metric_partials(m, coords, opt);
  const std::vector<double> G = fd_christoffels(m, coords, opt);
  std::vector<double> g(n * n);
  m.eval(coords, g.data());
  const auto gam = [&](int k, int i, int j) { return G[(k * n + i) * n + j]; };
  double max_err = 0.0;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double v = dg[(k * n + i) * n + j];
        for (int l = 0; l < n; ++l)
          v -= gam(l, k, i) * g[l * n + j] + gam(l, k, j) * g[i * n + l];
        max_err = std::max(max_err, std::abs(v));
      }
  return max_err;
}

std::vector<double> fd_shape_operator(const ShapeOperatorInput& in,
                                      const double* chart_coords, double h) {
  const int cn = in.chart_dim, an = in.ambient_dim;
  std::vector<double> x(chart_coords, chart_coords + cn);

  const auto emb_at = [&](int k, double delta, std::vector<double>& out) {
    x[k] = chart_coords[k] + delta;
    out.resize(an);
    in.embedding(x.data(), out.data());
    x[k] = chart_coords[k];
  };
  const auto normal_at = [&](int k, double delta, std::vector<double>& out) {
    x[k] = chart_coords[k] + delta;
    out.resize(an);
    in.normal(x.data(), out.data());
    x[k] = chart_coords[k];
  };

  std::vector<double> ambient(an);
  in.embedding(chart_coords, ambient.data());
  std::vector<double> nvec(an);
  in.normal(chart_coords, nvec.data());
  std::vector<double> gamma(an * an * an);
  in.ambient_gamma(ambient.data(), gamma.data());
  std::vector<double> g(an * an);
  in.ambient_metric.eval(ambient.data(), g.data());

  // Tangents and dN/d(eta_k) by Richardson central differences.
  std::vector<double> tang(cn * an), dN(cn * an);
  std::vector<double> p1, m1, p2, m2;
  for (int k = 0; k < cn; ++k) {
    const double hk = step_for(chart_coords[k], h);
    emb_at(k, hk, p1);
    emb_at(k, -hk, m1);
    emb_at(k, 0.5 * hk, p2);
    emb_at(k, -0.5 * hk, m2);
    for (int i = 0; i < an; ++i) {
      const double d1 = (p1[i] - m1[i]) / (2.0 * hk);
      const double d2 = (p2[i] - m2[i]) / hk;
      tang[k * an + i] = (4.0 * d2 - d1) / 3.0;
    }
    normal_at(k, hk, p1);
    normal_at(k, -hk, m1);
    normal_at(k, 0.5 * hk, p2);
    normal_at(k, -0.5 * hk, m2);
    for (int i = 0; i < an; ++i) {
      const double d1 = (p1[i] - m1[i]) / (2.0 * hk);
      const double d2 = (p2[i] - m2[i]) / hk;
      dN[k * an + i] = (4.0 * d2 - d1) / 3.0;
    }
  }

  // (nabla_{d_j} N)^i = d_j N^i + Gamma^i_{kl} (d_j x^k) N^l
  std::vector<double> covN(cn * an, 0.0);
  for (int j = 0; j < cn; ++j)
    for (int i = 0; i < an; ++i) {
      double v = dN[j * an + i];
      for (int k = 0; k < an; ++k)
        for (int l = 0; l < an; ++l)
          v += gamma[(i * an + k) * an + l] * tang[j * an + k] * nvec[l];
      covN[j * an + i] = v;
    }

  std::vector<double> II(cn * cn, 0.0);
  for (int i = 0; i < cn; ++i)
    for (int j = 0; j < cn; ++j) {
      double v = 0.0;
      for (int p = 0; p < an; ++p)
        for (int q = 0; q < an; ++q)
          v += g[p * an + q] * tang[i * an + p] * covN[j * an + q];
      II[i * cn + j] = v;
    }
  return II;
}

double fd_laplacian(const std::function<double(const double*)>& f,
                    const MetricFn& m, const double* coords,
                    const FdOptions& opt) {
  const int n = m.dim;
  // F^i(x) = sqrt(det g) g^{ij} d_j f, then Delta f = -(d_i F^i)/sqrt(det g).
  const auto sqrt_det = [&](const double* x) {
    std::vector<double> g(n * n);
    m.eval(x, g.data());
    // determinant by LU (small n)
    std::vector<double> a(g);
    double det = 1.0;
    for (int col = 0; col < n; ++col) {
      int piv = col;
      for (int r = col + 1; r < n; ++r)
        if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
      if (a[piv * n + col] == 0.0) return 0.0;
      if (piv != col) {
        for (int j = 0; j < n; ++j) std::swap(a[piv * n + j], a[col * n + j]);
        det = -det;
      }
      det *= a[col * n + col];
      for (int r = col + 1; r < n; ++r) {
        const double fac = a[r * n + col] / a[col * n + col];
        for (int j = col; j < n; ++j) a[r * n + j] -= fac * a[col * n + j];
      }
    }
    return std::sqrt(det);
  };

  const auto flux = [&](const double* x, int i) {
    MetricFn mm = m;
    const std::vector<double> ginv = metric_inverse(mm, x);
    double v = 0.0;
    for (int j = 0; j < n; ++j) {
      const double h = step_for(x[j], opt.h1);
      const double dfj = fd_partial(f, x, n, j, h, opt.richardson);
      v += ginv[i * n + j] * dfj;
    }
    return sqrt_det(x) * v;
  };

  double divergence = 0.0;
  std::vector<double> x(coords, coords + n);
  for (int i = 0; i < n; ++i) {
    const double h = step_for(coords[i], opt.h2);
    const auto fi = [&](const double* y) { return flux(y, i); };
    divergence += fd_partial(fi, coords, n, i, h, opt.richardson);
  }
  return -divergence / sqrt_det(coords);
}

}  // namespace ehsurf::oracle
