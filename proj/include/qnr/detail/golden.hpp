#pragma once

#include <cmath>
#include <utility>

namespace qnr::detail {

/// Golden-section search for a maximum of f on [lo, hi]. Returns (x, f(x))
/// for the best point evaluated, including both ends of the bracket.
template <class F>
std::pair<double, double> golden_maximize(F&& f, double lo, double hi, double xtol) {
  constexpr double kInvPhi = 0.6180339887498949;
  double best_x = lo, best_f = f(lo);
  if (const double fh = f(hi); fh > best_f) best_x = hi, best_f = fh;

  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a), d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > xtol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
    if (fc > best_f) best_x = c, best_f = fc;
    if (fd > best_f) best_x = d, best_f = fd;
  }
  return {best_x, best_f};
}

template <class F>
std::pair<double, double> golden_minimize(F&& f, double lo, double hi, double xtol) {
  auto [x, v] = golden_maximize([&](double t) { return -f(t); }, lo, hi, xtol);
  return {x, -v};
}

}  // namespace qnr::detail
