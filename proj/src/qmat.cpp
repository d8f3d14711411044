#include "qnr/qmat.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace qnr {

namespace {

void require_same(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                         std::to_string(b) + ")");
}

double frobenius_diff(const QMatrix& a, const QMatrix& b) {
  double s = 0.0;
  for (std::size_t l = 0; l < a.entries().size(); ++l) s += (a.entries()[l] - b.entries()[l]).norm2();
  return std::sqrt(s);
}

}  // namespace

QVector QVector::basis(std::size_t n, std::size_t index) {
  QVector e(n);
  e[index] = Quaternion(1.0);
  return e;
}

double QVector::norm2() const {
  double s = 0.0;
  for (const auto& q : entries_) s += q.norm2();
  return s;
}

QVector QVector::normalized() const {
  const double n = norm();
  if (!(n > 0.0)) throw std::invalid_argument("cannot normalize a zero vector");
  QVector out(*this);
  for (auto& q : out.entries_) q *= 1.0 / n;
  return out;
}

QVector QVector::operator*(const Quaternion& q) const {
  QVector out(size());
  for (std::size_t l = 0; l < size(); ++l) out[l] = entries_[l] * q;
  return out;
}

QVector QVector::operator+(const QVector& o) const {
  require_same(size(), o.size(), "vector add");
  QVector out(size());
  for (std::size_t l = 0; l < size(); ++l) out[l] = entries_[l] + o[l];
  return out;
}

QVector QVector::operator-(const QVector& o) const {
  require_same(size(), o.size(), "vector subtract");
  QVector out(size());
  for (std::size_t l = 0; l < size(); ++l) out[l] = entries_[l] - o[l];
  return out;
}

std::vector<double> QVector::to_real() const {
  std::vector<double> x;
  x.reserve(4 * size());
  for (const auto& q : entries_) {
    x.push_back(q.q0);
    x.push_back(q.q1);
    x.push_back(q.q2);
    x.push_back(q.q3);
  }
  return x;
}

QVector QVector::from_real(const std::vector<double>& x) {
  if (x.size() % 4 != 0) throw DimensionError("real coordinate count must be a multiple of 4");
  QVector out(x.size() / 4);
  for (std::size_t l = 0; l < out.size(); ++l) out[l] = {x[4 * l], x[4 * l + 1], x[4 * l + 2], x[4 * l + 3]};
  return out;
}

QMatrix::QMatrix(std::size_t n, std::vector<Quaternion> entries) : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n * n) throw DimensionError("matrix entry count must be n*n");
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows) : n_(rows.size()) {
  entries_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw DimensionError("matrix rows must have length n");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) out(r, r) = Quaternion(1.0);
  return out;
}

QMatrix QMatrix::diagonal(const std::vector<Quaternion>& d) {
  QMatrix out(d.size());
  for (std::size_t r = 0; r < d.size(); ++r) out(r, r) = d[r];
  return out;
}

QMatrix QMatrix::block_diagonal(const QMatrix& a, const QMatrix& b) {
  QMatrix out(a.n() + b.n());
  for (std::size_t r = 0; r < a.n(); ++r)
    for (std::size_t c = 0; c < a.n(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.n(); ++r)
    for (std::size_t c = 0; c < b.n(); ++c) out(a.n() + r, a.n() + c) = b(r, c);
  return out;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  require_same(n_, o.n_, "matrix add");
  QMatrix out(n_);
  for (std::size_t l = 0; l < entries_.size(); ++l) out.entries_[l] = entries_[l] + o.entries_[l];
  return out;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  require_same(n_, o.n_, "matrix subtract");
  QMatrix out(n_);
  for (std::size_t l = 0; l < entries_.size(); ++l) out.entries_[l] = entries_[l] - o.entries_[l];
  return out;
}

QMatrix QMatrix::operator*(double s) const {
  QMatrix out(*this);
  for (auto& q : out.entries_) q *= s;
  return out;
}

QMatrix QMatrix::right_scaled(const Quaternion& q) const {
  QMatrix out(*this);
  for (auto& e : out.entries_) e = e * q;
  return out;
}

double QMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& q : entries_) s += q.norm2();
  return std::sqrt(s);
}

bool QMatrix::all_finite() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Quaternion& q) {
    return std::isfinite(q.q0) && std::isfinite(q.q1) && std::isfinite(q.q2) && std::isfinite(q.q3);
  });
}

Quaternion qdot(const QVector& x, const QVector& y) {
  require_same(x.size(), y.size(), "qdot");
  Quaternion s;
  for (std::size_t l = 0; l < x.size(); ++l) s += x[l].conj() * y[l];
  return s;
}

QVector qmatvec(const QMatrix& a, const QVector& x) {
  require_same(a.n(), x.size(), "qmatvec");
  QVector out(a.n());
  for (std::size_t r = 0; r < a.n(); ++r) {
    Quaternion s;
    for (std::size_t c = 0; c < a.n(); ++c) s += a(r, c) * x[c];
    out[r] = s;
  }
  return out;
}

QMatrix qmatmul(const QMatrix& a, const QMatrix& b) {
  require_same(a.n(), b.n(), "qmatmul");
  const std::size_t n = a.n();
  QMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Quaternion s;
      for (std::size_t l = 0; l < n; ++l) s += a(r, l) * b(l, c);
      out(r, c) = s;
    }
  return out;
}

QMatrix qadjoint(const QMatrix& a) {
  QMatrix out(a.n());
  for (std::size_t r = 0; r < a.n(); ++r)
    for (std::size_t c = 0; c < a.n(); ++c) out(c, r) = a(r, c).conj();
  return out;
}

Quaternion quadratic_form(const QMatrix& a, const QVector& x) {
  if (std::abs(x.norm() - 1.0) > 1e-10) throw std::invalid_argument("quadratic_form: X must be a unit vector");
  return quadratic_form_unchecked(a, x);
}

Quaternion quadratic_form_unchecked(const QMatrix& a, const QVector& x) { return qdot(x, qmatvec(a, x)); }

bool is_selfadjoint(const QMatrix& a, double tol) { return frobenius_diff(a, qadjoint(a)) <= tol; }

bool is_normal(const QMatrix& a, double tol) {
  const QMatrix ah = qadjoint(a);
  return frobenius_diff(ah * a, a * ah) <= tol;
}

bool is_unitary(const QMatrix& a, double tol) {
  return frobenius_diff(qadjoint(a) * a, QMatrix::identity(a.n())) <= tol;
}

QVector random_unit_vector(std::size_t n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("random_unit_vector: n must be >= 1");
  std::normal_distribution<double> normal;
  for (;;) {
    QVector x(n);
    for (std::size_t l = 0; l < n; ++l) x[l] = {normal(rng), normal(rng), normal(rng), normal(rng)};
    if (x.norm2() > 1e-300) return x.normalized();
  }
}

QVector random_unit_vector(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_unit_vector(n, rng);
}

QMatrix random_matrix(std::size_t n, Rng& rng) {
  std::normal_distribution<double> normal;
  QMatrix a(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = {normal(rng), normal(rng), normal(rng), normal(rng)};
  return a;
}

QMatrix random_unitary(std::size_t n, Rng& rng) {
  QMatrix u = QMatrix::identity(n);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (std::size_t pass = 0; pass < n + 1; ++pass) {
    const QVector v = random_unit_vector(n, rng);
    QMatrix h = QMatrix::identity(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) h(r, c) -= v[r] * v[c].conj() * 2.0;
    u = h * u;
  }
  // Random unit phases on the right keep the product unitary and break the
  // real-reflection structure.
  QMatrix d(n);
  for (std::size_t r = 0; r < n; ++r) {
    const Quaternion s(unit(rng), unit(rng), unit(rng), unit(rng));
    d(r, r) = s / s.norm();
  }
  return u * d;
}

std::vector<QVector> orthonormalize(const std::vector<QVector>& columns, Rng& rng) {
  std::vector<QVector> basis;
  for (const auto& col : columns) {
    QVector v = col;
    for (int attempt = 0;; ++attempt) {
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& b : basis) v = v - b * qdot(b, v);
      if (v.norm() > 1e-8 * std::max(1.0, col.norm())) break;
      if (attempt > 16) throw std::runtime_error("orthonormalize: cannot complete basis");
      v = random_unit_vector(col.size(), rng);
    }
    basis.push_back(v.normalized());
  }
  return basis;
}

QMatrix from_columns(const std::vector<QVector>& columns) {
  const std::size_t n = columns.empty() ? 0 : columns.front().size();
  require_same(n, columns.size(), "from_columns");
  QMatrix out(n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) out(r, c) = columns[c][r];
  return out;
}

QVector column(const QMatrix& a, std::size_t c) {
  QVector out(a.n());
  for (std::size_t r = 0; r < a.n(); ++r) out[r] = a(r, c);
  return out;
}

}  // namespace qnr
