#include "qnr/chi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "qnr/detail/golden.hpp"

namespace qnr {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_same(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw DimensionError(std::string(what) + ": dimension mismatch");
}

// Hermitian part of e^{i theta} B.
CMatrix rotated_hermitian_part(const CMatrix& b, double theta) {
  const Complex ph = std::polar(1.0, theta);
  const std::size_t m = b.m();
  CMatrix h(m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) h(r, c) = 0.5 * (ph * b(r, c) + std::conj(ph * b(c, r)));
  return h;
}

// Complex Givens rotation G = [[c, s], [-conj(s), c]] with G [a; b] = [r; 0].
struct Givens {
  double c;
  Complex s;
};

Givens make_givens(Complex a, Complex b) {
  const double aa = std::abs(a), ab = std::abs(b);
  if (ab == 0.0) return {1.0, 0.0};
  if (aa == 0.0) return {0.0, 1.0};
  const double nrm = std::hypot(aa, ab);
  const Complex alpha = a / aa;
  return {aa / nrm, alpha * std::conj(b) / nrm};
}

// Householder reflector I - 2 v v* mapping x onto a multiple of e_0.
// Returns false when x is already (numerically) zero below its head.
bool householder(std::vector<Complex>& v) {
  double tail = 0.0;
  for (std::size_t l = 1; l < v.size(); ++l) tail += std::norm(v[l]);
  if (tail == 0.0) return false;
  const double xnorm = std::sqrt(std::norm(v[0]) + tail);
  const Complex phase = std::abs(v[0]) > 0.0 ? v[0] / std::abs(v[0]) : Complex(1.0);
  v[0] += phase * xnorm;
  const double vn = cnorm(v);
  for (auto& x : v) x /= vn;
  return true;
}

// Implicit QL on a real symmetric tridiagonal matrix; eigenvalues land in d.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e) {
  const int n = static_cast<int>(d.size());
  if (n == 0) return;
  e.resize(n, 0.0);
  e[n - 1] = 0.0;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= kEps * dd) break;
      }
      if (m != l) {
        if (iter++ == 60) throw ConvergenceError("tridiagonal QL did not converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        bool underflow = false;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double bb = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * bb;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - bb;
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

// Reduces a Hermitian matrix to real symmetric tridiagonal form (d, e).
void tridiagonalize(CMatrix h, std::vector<double>& d, std::vector<double>& e) {
  const std::size_t m = h.m();
  for (std::size_t k = 0; k + 2 < m; ++k) {
    std::vector<Complex> v(m, 0.0);
    std::vector<Complex> x(m - k - 1);
    for (std::size_t r = k + 1; r < m; ++r) x[r - k - 1] = h(r, k);
    if (!householder(x)) continue;
    for (std::size_t r = k + 1; r < m; ++r) v[r] = x[r - k - 1];
    // H <- H - 2 v w* - 2 w v*, w = H v - (v* H v) v
    std::vector<Complex> p = h * v;
    const double kappa = cdot(v, p).real();
    for (std::size_t r = 0; r < m; ++r) p[r] -= kappa * v[r];
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) h(r, c) -= 2.0 * (v[r] * std::conj(p[c]) + p[r] * std::conj(v[c]));
  }
  d.assign(m, 0.0);
  e.assign(m, 0.0);
  for (std::size_t r = 0; r < m; ++r) d[r] = h(r, r).real();
  // |e| suffices: a diagonal unitary similarity makes the off-diagonal real.
  for (std::size_t r = 0; r + 1 < m; ++r) e[r] = std::abs(h(r + 1, r));
}

}  // namespace

CMatrix::CMatrix(std::size_t m, std::vector<Complex> entries) : m_(m), entries_(std::move(entries)) {
  if (entries_.size() != m * m) throw DimensionError("complex matrix entry count must be m*m");
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows) : m_(rows.size()) {
  for (const auto& row : rows) {
    if (row.size() != m_) throw DimensionError("complex matrix rows must have length m");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

CMatrix CMatrix::identity(std::size_t m) {
  CMatrix out(m);
  for (std::size_t r = 0; r < m; ++r) out(r, r) = 1.0;
  return out;
}

CMatrix CMatrix::operator+(const CMatrix& o) const {
  require_same(m_, o.m_, "cmatrix add");
  CMatrix out(m_);
  for (std::size_t l = 0; l < entries_.size(); ++l) out.entries_[l] = entries_[l] + o.entries_[l];
  return out;
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
  require_same(m_, o.m_, "cmatrix subtract");
  CMatrix out(m_);
  for (std::size_t l = 0; l < entries_.size(); ++l) out.entries_[l] = entries_[l] - o.entries_[l];
  return out;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
  require_same(m_, o.m_, "cmatrix multiply");
  CMatrix out(m_);
  for (std::size_t r = 0; r < m_; ++r)
    for (std::size_t l = 0; l < m_; ++l) {
      const Complex a = (*this)(r, l);
      if (a == Complex(0.0)) continue;
      for (std::size_t c = 0; c < m_; ++c) out(r, c) += a * o(l, c);
    }
  return out;
}

CMatrix CMatrix::operator*(Complex s) const {
  CMatrix out(*this);
  for (auto& z : out.entries_) z *= s;
  return out;
}

std::vector<Complex> CMatrix::operator*(const std::vector<Complex>& x) const {
  require_same(m_, x.size(), "cmatrix-vector multiply");
  std::vector<Complex> y(m_);
  for (std::size_t r = 0; r < m_; ++r) {
    Complex s = 0.0;
    for (std::size_t c = 0; c < m_; ++c) s += (*this)(r, c) * x[c];
    y[r] = s;
  }
  return y;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(m_);
  for (std::size_t r = 0; r < m_; ++r)
    for (std::size_t c = 0; c < m_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

double CMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

double CMatrix::distance(const CMatrix& o) const { return (*this - o).frobenius_norm(); }

bool CMatrix::is_hermitian(double tol) const { return distance(adjoint()) <= tol; }

CMatrix chi_embed(const QMatrix& a) {
  const std::size_t n = a.n();
  CMatrix out(2 * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const auto [z1, z2] = complex_pair(a(r, c));
      out(r, c) = z1;
      out(r, n + c) = z2;
      out(n + r, c) = -std::conj(z2);
      out(n + r, n + c) = std::conj(z1);
    }
  return out;
}

Complex cdot(const std::vector<Complex>& x, const std::vector<Complex>& y) {
  require_same(x.size(), y.size(), "cdot");
  Complex s = 0.0;
  for (std::size_t l = 0; l < x.size(); ++l) s += std::conj(x[l]) * y[l];
  return s;
}

double cnorm(const std::vector<Complex>& x) {
  double s = 0.0;
  for (const auto& z : x) s += std::norm(z);
  return std::sqrt(s);
}

HermitianEigen hermitian_eigen(const CMatrix& input) {
  const std::size_t m = input.m();
  const double scale = std::max(1.0, input.frobenius_norm());
  if (!input.is_hermitian(1e-10 * scale)) throw std::invalid_argument("hermitian_eigen: matrix is not Hermitian");

  CMatrix h = input;
  CMatrix v = CMatrix::identity(m);
  for (std::size_t r = 0; r < m; ++r) h(r, r) = h(r, r).real();

  const double frob = h.frobenius_norm();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = p + 1; q < m; ++q) off += std::norm(h(p, q));
    if (std::sqrt(off) <= 1e-16 * frob || off == 0.0) break;

    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = p + 1; q < m; ++q) {
        const Complex hpq = h(p, q);
        const double g = std::abs(hpq);
        if (g <= std::numeric_limits<double>::min()) continue;
        const double a = h(p, p).real(), b = h(q, q).real();
        const Complex ph = hpq / g;
        const double tau = (b - a) / (2.0 * g);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // U = diag(1, conj(ph)) * [[c, s], [-s, c]]
        const Complex u00 = c, u01 = s, u10 = -s * std::conj(ph), u11 = c * std::conj(ph);
        for (std::size_t k = 0; k < m; ++k) {
          const Complex hkp = h(k, p), hkq = h(k, q);
          h(k, p) = hkp * u00 + hkq * u10;
          h(k, q) = hkp * u01 + hkq * u11;
        }
        for (std::size_t k = 0; k < m; ++k) {
          const Complex hpk = h(p, k), hqk = h(q, k);
          h(p, k) = std::conj(u00) * hpk + std::conj(u10) * hqk;
          h(q, k) = std::conj(u01) * hpk + std::conj(u11) * hqk;
        }
        h(p, q) = 0.0;
        h(q, p) = 0.0;
        h(p, p) = h(p, p).real();
        h(q, q) = h(q, q).real();
        for (std::size_t k = 0; k < m; ++k) {
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * u00 + vkq * u10;
          v(k, q) = vkp * u01 + vkq * u11;
        }
      }
  }

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return h(x, x).real() < h(y, y).real(); });
  HermitianEigen out{std::vector<double>(m), CMatrix(m)};
  for (std::size_t c = 0; c < m; ++c) {
    out.values[c] = h(order[c], order[c]).real();
    for (std::size_t r = 0; r < m; ++r) out.vectors(r, c) = v(r, order[c]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& h) {
  std::vector<double> d, e;
  tridiagonalize(h, d, e);
  tridiagonal_ql(d, e);
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<Complex> general_eigenvalues(const CMatrix& input) {
  const std::size_t m = input.m();
  if (m == 0) return {};
  CMatrix h = input;

  // Hessenberg reduction.
  for (std::size_t k = 0; k + 2 < m; ++k) {
    std::vector<Complex> x(m - k - 1);
    for (std::size_t r = k + 1; r < m; ++r) x[r - k - 1] = h(r, k);
    if (!householder(x)) continue;
    std::vector<Complex> v(m, 0.0);
    for (std::size_t r = k + 1; r < m; ++r) v[r] = x[r - k - 1];
    // H <- P H P with P = I - 2 v v*.
    for (std::size_t c = 0; c < m; ++c) {
      Complex s = 0.0;
      for (std::size_t r = k + 1; r < m; ++r) s += std::conj(v[r]) * h(r, c);
      for (std::size_t r = k + 1; r < m; ++r) h(r, c) -= 2.0 * v[r] * s;
    }
    for (std::size_t r = 0; r < m; ++r) {
      Complex s = 0.0;
      for (std::size_t c = k + 1; c < m; ++c) s += h(r, c) * v[c];
      for (std::size_t c = k + 1; c < m; ++c) h(r, c) -= 2.0 * s * std::conj(v[c]);
    }
    for (std::size_t r = k + 2; r < m; ++r) h(r, k) = 0.0;
  }

  const double frob = std::max(h.frobenius_norm(), std::numeric_limits<double>::min());
  std::vector<Complex> eig(m);
  const long cap = 100L * static_cast<long>(m * m);
  long total = 0;
  int hi = static_cast<int>(m) - 1;
  int since_deflation = 0;
  while (hi >= 0) {
    if (hi == 0) {
      eig[0] = h(0, 0);
      break;
    }
    int l = hi;
    for (; l > 0; --l) {
      double tst = std::abs(h(l - 1, l - 1)) + std::abs(h(l, l));
      if (tst == 0.0) tst = frob;
      if (std::abs(h(l, l - 1)) <= kEps * tst) {
        h(l, l - 1) = 0.0;
        break;
      }
    }
    if (l == hi) {
      eig[hi] = h(hi, hi);
      --hi;
      since_deflation = 0;
      continue;
    }
    if (++total > cap) throw ConvergenceError("general_eigenvalues: QR iteration did not converge");
    ++since_deflation;

    Complex mu;
    if (since_deflation % 11 == 10) {
      // exceptional shift
      mu = h(hi, hi) + Complex(0.75, 0.4375) * std::abs(h(hi, hi - 1));
    } else {
      const Complex a = h(hi - 1, hi - 1), b = h(hi - 1, hi), c = h(hi, hi - 1), d = h(hi, hi);
      const Complex half = 0.5 * (a - d);
      const Complex disc = std::sqrt(half * half + b * c);
      const Complex m1 = 0.5 * (a + d) + disc, m2 = 0.5 * (a + d) - disc;
      mu = std::abs(m1 - d) < std::abs(m2 - d) ? m1 : m2;
    }

    for (int k = l; k <= hi; ++k) h(k, k) -= mu;
    std::vector<Givens> rots;
    rots.reserve(hi - l);
    for (int k = l; k < hi; ++k) {
      const Givens g = make_givens(h(k, k), h(k + 1, k));
      rots.push_back(g);
      for (int c = k; c <= hi; ++c) {
        const Complex x = h(k, c), y = h(k + 1, c);
        h(k, c) = g.c * x + g.s * y;
        h(k + 1, c) = -std::conj(g.s) * x + g.c * y;
      }
    }
    for (int k = l; k < hi; ++k) {
      const Givens& g = rots[k - l];
      const int rmax = std::min(k + 2, hi);
      for (int r = l; r <= rmax; ++r) {
        const Complex x = h(r, k), y = h(r, k + 1);
        h(r, k) = x * g.c + y * std::conj(g.s);
        h(r, k + 1) = -x * g.s + y * g.c;
      }
    }
    for (int k = l; k <= hi; ++k) h(k, k) += mu;
  }
  return eig;
}

double smallest_singular_value(const CMatrix& b) {
  const auto vals = hermitian_eigenvalues(b.adjoint() * b);
  return std::sqrt(std::max(0.0, vals.front()));
}

std::vector<Complex> solve_perturbed(const CMatrix& input, const std::vector<Complex>& rhs) {
  const std::size_t m = input.m();
  require_same(m, rhs.size(), "solve");
  CMatrix a = input;
  std::vector<Complex> x = rhs;
  const double floor = std::max(a.frobenius_norm(), 1.0) * 1e-14;
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t piv = k;
    for (std::size_t r = k + 1; r < m; ++r)
      if (std::abs(a(r, k)) > std::abs(a(piv, k))) piv = r;
    if (piv != k) {
      for (std::size_t c = 0; c < m; ++c) std::swap(a(k, c), a(piv, c));
      std::swap(x[k], x[piv]);
    }
    if (std::abs(a(k, k)) < floor) a(k, k) = floor;
    for (std::size_t r = k + 1; r < m; ++r) {
      const Complex f = a(r, k) / a(k, k);
      if (f == Complex(0.0)) continue;
      for (std::size_t c = k; c < m; ++c) a(r, c) -= f * a(k, c);
      x[r] -= f * x[k];
    }
  }
  for (std::size_t k = m; k-- > 0;) {
    Complex s = x[k];
    for (std::size_t c = k + 1; c < m; ++c) s -= a(k, c) * x[c];
    x[k] = s / a(k, k);
  }
  return x;
}

double operator_norm(const CMatrix& b) {
  if (b.m() == 0) return 0.0;
  const auto eig = hermitian_eigen(b.adjoint() * b);
  return std::sqrt(std::max(0.0, eig.values.back()));
}

double operator_norm(const QMatrix& a) { return operator_norm(chi_embed(a)); }

double support_value(const CMatrix& b, double theta) {
  return hermitian_eigenvalues(rotated_hermitian_part(b, theta)).back();
}

Complex supporting_point(const CMatrix& b, double theta) {
  const auto eig = hermitian_eigen(rotated_hermitian_part(b, theta));
  const std::size_t m = b.m();
  std::vector<Complex> u(m);
  for (std::size_t r = 0; r < m; ++r) u[r] = eig.vectors(r, m - 1);
  return cdot(u, b * u);
}

SweepResult complex_range_sweep(const CMatrix& b, int angles, bool collect_boundary) {
  if (angles < 8) throw std::invalid_argument("complex_range_sweep: angles must be >= 8");
  SweepResult out;
  out.angles = angles;
  if (b.m() == 0) return out;
  const double step = 2.0 * std::numbers::pi / angles;
  out.thetas.resize(angles);
  out.support.resize(angles);
  if (collect_boundary) out.boundary.reserve(angles + 1);

  for (int k = 0; k < angles; ++k) {
    const double theta = step * k;
    out.thetas[k] = theta;
    if (collect_boundary) {
      const auto eig = hermitian_eigen(rotated_hermitian_part(b, theta));
      const std::size_t m = b.m();
      std::vector<Complex> u(m);
      for (std::size_t r = 0; r < m; ++r) u[r] = eig.vectors(r, m - 1);
      out.support[k] = eig.values.back();
      out.boundary.push_back(cdot(u, b * u));
    } else {
      out.support[k] = support_value(b, theta);
    }
  }

  // Ties broken by the smaller angle.
  int best = 0;
  for (int k = 1; k < angles; ++k)
    if (out.support[k] > out.support[best]) best = k;
  double radius = out.support[best];
  double best_theta = out.thetas[best];

  // The support function is Lipschitz with constant |B|; any grid-local
  // maximum within that slack of the best may hide the true maximum.
  const double slack = b.frobenius_norm() * step;
  for (int k = 0; k < angles; ++k) {
    const double here = out.support[k];
    const double prev = out.support[(k + angles - 1) % angles];
    const double next = out.support[(k + 1) % angles];
    if (here < prev || here < next || here < out.support[best] - slack) continue;
    const auto [theta, value] = detail::golden_maximize(
        [&](double t) { return support_value(b, t); }, out.thetas[k] - step, out.thetas[k] + step, 1e-10);
    if (value > radius || (value == radius && theta < best_theta)) {
      radius = value;
      best_theta = theta;
    }
  }
  out.radius = std::max(radius, 0.0);
  out.best_theta = best_theta;
  if (collect_boundary) out.boundary.push_back(supporting_point(b, best_theta));
  return out;
}

double range_margin(const CMatrix& b, const SweepResult& sweep, Complex z) {
  const int n = static_cast<int>(sweep.thetas.size());
  if (n == 0) throw std::invalid_argument("range_margin: empty sweep");
  const double step = 2.0 * std::numbers::pi / n;
  auto gap = [&](double theta, double support) {
    return support - (std::polar(1.0, theta) * z).real();
  };
  std::vector<double> g(n);
  double lowest = std::numeric_limits<double>::infinity();
  for (int k = 0; k < n; ++k) {
    g[k] = gap(sweep.thetas[k], sweep.support[k]);
    lowest = std::min(lowest, g[k]);
  }
  // The gap is Lipschitz with constant max |w - z| over W(B), which is at
  // most |B - cI| + |c - z| for the centroid c = tr(B) / m.
  Complex c;
  for (std::size_t l = 0; l < b.m(); ++l) c += b(l, l);
  c /= static_cast<double>(b.m());
  double spread = 0.0;
  for (std::size_t r = 0; r < b.m(); ++r)
    for (std::size_t col = 0; col < b.m(); ++col) spread += std::norm(b(r, col) - (r == col ? c : Complex()));
  const double slack = (std::sqrt(spread) + std::abs(c - z)) * step;
  const double rounding = 64.0 * std::numeric_limits<double>::epsilon() * (std::abs(c) + std::sqrt(spread) + std::abs(z));
  std::vector<int> order;
  for (int k = 0; k < n; ++k) {
    if (g[k] > g[(k + n - 1) % n] || g[k] > g[(k + 1) % n] || g[k] > lowest + slack) continue;
    if (g[k] > slack && lowest > slack) continue;
    order.push_back(k);
  }
  std::sort(order.begin(), order.end(), [&](int x, int y) { return g[x] < g[y]; });
  double result = lowest;
  for (int k : order) {
    if (g[k] - slack >= result - rounding) continue;
    const auto [theta, value] = detail::golden_minimize(
        [&](double t) { return gap(t, support_value(b, t)); }, sweep.thetas[k] - step, sweep.thetas[k] + step,
        1e-11);
    (void)theta;
    result = std::min(result, value);
  }
  return result;
}

}  // namespace qnr
