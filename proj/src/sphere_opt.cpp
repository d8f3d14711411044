#include "qnr/sphere_opt.hpp"

#include <algorithm>
#include <cmath>

namespace qnr {

namespace {

constexpr std::array<Quaternion, 4> kUnits = {Quaternion(1, 0, 0, 0), Quaternion(0, 1, 0, 0),
                                             Quaternion(0, 0, 1, 0), Quaternion(0, 0, 0, 1)};

double residual_norm(const std::vector<double>& r) {
  double s = 0.0;
  for (double v : r) s += v * v;
  return std::sqrt(s);
}

// Solves the small symmetric positive definite system M y = b in place.
std::vector<double> solve_small(std::vector<std::vector<double>> m, std::vector<double> b) {
  const std::size_t k = b.size();
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < k; ++r)
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    std::swap(m[c], m[piv]);
    std::swap(b[c], b[piv]);
    if (m[c][c] == 0.0) m[c][c] = 1e-300;
    for (std::size_t r = c + 1; r < k; ++r) {
      const double f = m[r][c] / m[c][c];
      for (std::size_t l = c; l < k; ++l) m[r][l] -= f * m[c][l];
      b[r] -= f * b[c];
    }
  }
  std::vector<double> y(k);
  for (std::size_t c = k; c-- > 0;) {
    double s = b[c];
    for (std::size_t l = c + 1; l < k; ++l) s -= m[c][l] * y[l];
    y[c] = s / m[c][c];
  }
  return y;
}

using Objective = std::function<double(const Quaternion&)>;

double objective_at(const QMatrix& a, const Objective& f, const std::vector<double>& x) {
  const QVector v = QVector::from_real(x);
  return f(quadratic_form_unchecked(a, v) * (1.0 / v.norm2()));
}

std::vector<double> normalized(std::vector<double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  s = std::sqrt(s);
  for (double& v : x) v /= s;
  return x;
}

}  // namespace

QuaternionResidual section_target_residual(Complex target) {
  QuaternionResidual res;
  if (std::abs(target.imag()) <= 1e-14) {
    const double t = target.real();
    res.size = 4;
    res.eval = [t](const Quaternion& q, std::vector<double>& r, std::vector<std::array<double, 4>>& jac) {
      r = {q.q0 - t, q.q1, q.q2, q.q3};
      jac = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    };
    return res;
  }
  res.size = 2;
  res.eval = [target](const Quaternion& q, std::vector<double>& r, std::vector<std::array<double, 4>>& jac) {
    const double im = q.im_norm();
    r = {q.q0 - target.real(), im - target.imag()};
    if (im > 1e-300)
      jac = {{1, 0, 0, 0}, {0, q.q1 / im, q.q2 / im, q.q3 / im}};
    else
      jac = {{1, 0, 0, 0}, {0, 1, 0, 0}};
  };
  return res;
}

QuaternionResidual projection_target_residual(Complex target) {
  QuaternionResidual res;
  res.size = 2;
  res.eval = [target](const Quaternion& q, std::vector<double>& r, std::vector<std::array<double, 4>>& jac) {
    r = {q.q0 - target.real(), q.q1 - target.imag()};
    jac = {{1, 0, 0, 0}, {0, 1, 0, 0}};
  };
  return res;
}

std::vector<Quaternion> quadratic_form_gradient(const QMatrix& a, const QVector& x) {
  const std::size_t n = x.size();
  const QVector ax = a * x;
  // w_l = sum_r conj(x_r) A_rl
  std::vector<Quaternion> w(n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t r = 0; r < n; ++r) w[l] += x[r].conj() * a(r, l);
  std::vector<Quaternion> grad(4 * n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t u = 0; u < 4; ++u) grad[4 * l + u] = kUnits[u].conj() * ax[l] + w[l] * kUnits[u];
  return grad;
}

SphereSolveResult solve_on_sphere(const QMatrix& a, QVector start, const QuaternionResidual& res, double tol,
                                  int max_iter) {
  const std::size_t dim = 4 * start.size();
  const std::size_t k = static_cast<std::size_t>(res.size);
  std::vector<double> x = normalized(start.to_real());
  std::vector<double> r;
  std::vector<std::array<double, 4>> jq;

  auto evaluate = [&](const std::vector<double>& pt, std::vector<double>& rr, std::vector<std::array<double, 4>>& jj) {
    res.eval(quadratic_form_unchecked(a, QVector::from_real(pt)), rr, jj);
  };
  evaluate(x, r, jq);
  double rn = residual_norm(r);
  double mu = -1.0;

  SphereSolveResult out;
  int it = 0;
  for (; it < max_iter && rn > tol; ++it) {
    const auto grad = quadratic_form_gradient(a, QVector::from_real(x));
    // J = Jq * Dq, projected onto the tangent space at x.
    std::vector<std::vector<double>> jac(k, std::vector<double>(dim));
    for (std::size_t row = 0; row < k; ++row) {
      double dot = 0.0;
      for (std::size_t c = 0; c < dim; ++c) {
        const auto g = grad[c].components();
        double v = 0.0;
        for (int u = 0; u < 4; ++u) v += jq[row][u] * g[u];
        jac[row][c] = v;
        dot += v * x[c];
      }
      for (std::size_t c = 0; c < dim; ++c) jac[row][c] -= dot * x[c];
    }
    std::vector<std::vector<double>> jjt(k, std::vector<double>(k));
    double trace = 0.0;
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t q = 0; q < k; ++q) {
        double s = 0.0;
        for (std::size_t c = 0; c < dim; ++c) s += jac[p][c] * jac[q][c];
        jjt[p][q] = s;
        if (p == q) trace += s;
      }
    if (mu < 0.0) mu = 1e-6 * std::max(trace, 1e-12);

    bool accepted = false;
    for (int attempt = 0; attempt < 30 && !accepted; ++attempt) {
      auto m = jjt;
      for (std::size_t p = 0; p < k; ++p) m[p][p] += mu;
      const auto y = solve_small(m, r);
      std::vector<double> trial(x);
      for (std::size_t c = 0; c < dim; ++c) {
        double s = 0.0;
        for (std::size_t p = 0; p < k; ++p) s += jac[p][c] * y[p];
        trial[c] -= s;
      }
      trial = normalized(trial);
      std::vector<double> tr;
      std::vector<std::array<double, 4>> tj;
      evaluate(trial, tr, tj);
      const double tn = residual_norm(tr);
      if (tn < rn) {
        x = std::move(trial);
        r = std::move(tr);
        jq = std::move(tj);
        rn = tn;
        mu = std::max(mu / 3.0, 1e-18 * std::max(trace, 1e-12));
        accepted = true;
      } else {
        mu *= 4.0;
      }
    }
    if (!accepted) break;
  }
  out.x = QVector::from_real(x);
  out.residual = rn;
  out.iterations = it;
  return out;
}

AscentResult ascend_modulus(const QMatrix& a, QVector start, double h, int max_iter) {
  return ascend_on_sphere(a, std::move(start), [](const Quaternion& q) { return q.norm(); }, h, max_iter);
}

AscentResult ascend_on_sphere(const QMatrix& a, QVector start, const Objective& objective, double h, int max_iter) {
  std::vector<double> x = normalized(start.to_real());
  const std::size_t dim = x.size();
  double f = objective_at(a, objective, x);
  double eta = 0.1;
  AscentResult out;
  int it = 0;
  int stalls = 0;
  for (; it < max_iter; ++it) {
    std::vector<double> g(dim);
    for (std::size_t c = 0; c < dim; ++c) {
      auto xp = x, xm = x;
      xp[c] += h;
      xm[c] -= h;
      g[c] = (objective_at(a, objective, xp) - objective_at(a, objective, xm)) / (2.0 * h);
    }
    double dot = 0.0, gn = 0.0;
    for (std::size_t c = 0; c < dim; ++c) dot += g[c] * x[c];
    for (std::size_t c = 0; c < dim; ++c) {
      g[c] -= dot * x[c];
      gn += g[c] * g[c];
    }
    if (std::sqrt(gn) < 1e-13) break;

    bool accepted = false;
    while (eta > 1e-14) {
      std::vector<double> trial(x);
      for (std::size_t c = 0; c < dim; ++c) trial[c] += eta * g[c];
      trial = normalized(trial);
      const double ft = objective_at(a, objective, trial);
      if (ft > f) {
        const double gain = ft - f;
        x = std::move(trial);
        f = ft;
        eta *= 1.5;
        accepted = true;
        stalls = gain < 1e-12 ? stalls + 1 : 0;
        break;
      }
      eta *= 0.5;
    }
    if (!accepted || stalls >= 3) break;
  }
  out.x = QVector::from_real(x);
  out.value = f;
  out.iterations = it;
  return out;
}

}  // namespace qnr
