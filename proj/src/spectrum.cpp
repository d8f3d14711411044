#include "qnr/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace qnr {

namespace {

// Single-linkage clusters of folded eigenvalues; returns cluster labels.
std::vector<int> cluster(const std::vector<Complex>& folded, double tol) {
  const std::size_t m = folded.size();
  std::vector<int> label(m, -1);
  int next = 0;
  for (std::size_t s = 0; s < m; ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t b = 0; b < m; ++b)
        if (label[b] < 0 && std::abs(folded[a] - folded[b]) <= tol) {
          label[b] = next;
          stack.push_back(b);
        }
    }
    ++next;
  }
  return label;
}

}  // namespace

QMatrix delta_matrix(const QMatrix& a, const Quaternion& q) {
  QMatrix out = a * a - a * (2.0 * q.re());
  for (std::size_t r = 0; r < a.n(); ++r) out(r, r) += Quaternion(q.norm2());
  return out;
}

StdEigenList spherical_spectrum(const QMatrix& a, double dedup_tol) {
  if (a.n() == 0) return {};
  const auto eig = general_eigenvalues(chi_embed(a));
  double scale = 1.0;
  for (const auto& z : eig) scale = std::max(scale, std::abs(z));

  std::vector<Complex> folded(eig.size());
  std::transform(eig.begin(), eig.end(), folded.begin(),
                 [](Complex z) { return Complex(z.real(), std::abs(z.imag())); });

  for (double tol = dedup_tol * scale; tol <= 1e-4 * scale * (1.0 + 1e-12); tol *= 10.0) {
    const auto label = cluster(folded, tol);
    const int groups = *std::max_element(label.begin(), label.end()) + 1;
    std::vector<std::vector<std::size_t>> members(groups);
    for (std::size_t l = 0; l < label.size(); ++l) members[label[l]].push_back(l);
    if (std::any_of(members.begin(), members.end(), [](const auto& g) { return g.size() % 2 != 0; })) continue;

    std::vector<std::pair<Complex, int>> out;
    for (const auto& g : members) {
      double min_im = std::numeric_limits<double>::infinity();
      Complex folded_mean = 0.0, raw_mean = 0.0;
      for (std::size_t l : g) {
        min_im = std::min(min_im, folded[l].imag());
        folded_mean += folded[l];
        raw_mean += eig[l];
      }
      folded_mean /= static_cast<double>(g.size());
      raw_mean /= static_cast<double>(g.size());
      // A cluster touching the real axis is a real eigenvalue: the plain mean
      // cancels the conjugate jitter (trace is preserved under perturbation).
      const Complex rep = min_im <= tol ? Complex(raw_mean.real(), 0.0) : folded_mean;
      out.emplace_back(rep, static_cast<int>(g.size() / 2));
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
      if (x.first.real() != y.first.real()) return x.first.real() < y.first.real();
      return x.first.imag() < y.first.imag();
    });
    StdEigenList list;
    for (const auto& [z, mult] : out) {
      list.values.push_back(z);
      list.multiplicities.push_back(mult);
    }
    return list;
  }
  throw SpectrumError("spherical_spectrum: eigenvalues of chi_A do not pair into conjugates");
}

QVector right_eigenvector(const QMatrix& a, Complex z) {
  const std::size_t n = a.n();
  const CMatrix chi = chi_embed(a);
  CMatrix shifted = chi;
  for (std::size_t r = 0; r < 2 * n; ++r) shifted(r, r) -= z;

  const double scale = std::max(1.0, chi.frobenius_norm());
  const auto eig = hermitian_eigen(shifted.adjoint() * shifted);
  if (std::sqrt(std::max(0.0, eig.values.front())) > 1e-6 * scale)
    throw SpectrumError("right_eigenvector: z is not a standard eigenvalue");

  std::vector<Complex> v(2 * n);
  for (std::size_t r = 0; r < 2 * n; ++r) v[r] = eig.vectors(r, 0);
  for (int step = 0; step < 2; ++step) {
    v = solve_perturbed(shifted, v);
    const double nv = cnorm(v);
    for (auto& x : v) x /= nv;
  }

  // v = [X1; -conj(X2)] with X = X1 + X2 j.
  QVector x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = from_complex_pair(v[r], -std::conj(v[n + r]));
  x = x.normalized();

  const double residual = (a * x - x * Quaternion::from_complex(z)).norm();
  if (residual > 1e-7 * std::max(operator_norm(chi), 1e-300))
    throw SpectrumError("right_eigenvector: recovered eigenvector residual too large");
  return x;
}

SpectrumReport verify_spectrum(const QMatrix& a) {
  SpectrumReport report;
  const double norm = operator_norm(a);
  report.bound = 1e-6 * norm * norm;
  const auto spec = spherical_spectrum(a);
  for (std::size_t l = 0; l < spec.values.size(); ++l) {
    SpectrumCheck check;
    check.value = spec.values[l];
    check.multiplicity = spec.multiplicities[l];
    try {
      check.eigenvector = right_eigenvector(a, check.value);
      const Quaternion zq = Quaternion::from_complex(check.value);
      check.eigen_residual = (a * check.eigenvector - check.eigenvector * zq).norm();
      check.delta_residual = (delta_matrix(a, zq) * check.eigenvector).norm();
      check.pass = check.delta_residual <= report.bound;
    } catch (const SpectrumError&) {
      check.pass = false;
    }
    report.all_pass = report.all_pass && check.pass;
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace qnr
