#pragma once

#include <cmath>
#include <utility>
#include <vector>

namespace toruscurv::detail {

struct Minimum {
  double x;
  double value;
};

// Golden-section descent on [lo, hi] until the bracket is narrower than tol.
// Assumes f is unimodal on the bracket.
template <typename F>
Minimum golden_section_minimize(F&& f, double lo, double hi, double tol = 1e-12) {
  constexpr double kInvPhi = 0.61803398874989484820;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? Minimum{x1, f1} : Minimum{x2, f2};
}

// Samples f on t_i = 2*pi*i/n, refines every periodic local minimum of the
// samples over [t_{i-1}, t_{i+1}] and returns the refined minima in [0, 2*pi).
template <typename F>
std::vector<Minimum> periodic_local_minima(F&& f, int n, double tol = 1e-12) {
  constexpr double kTwoPi = 6.283185307179586476925286766559;
  const double h = kTwoPi / n;
  std::vector<double> values(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = f(h * i);

  std::vector<Minimum> minima;
  for (int i = 0; i < n; ++i) {
    const double prev = values[static_cast<std::size_t>((i + n - 1) % n)];
    const double next = values[static_cast<std::size_t>((i + 1) % n)];
    const double here = values[static_cast<std::size_t>(i)];
    if (!(here <= prev && here < next)) continue;
    Minimum m = golden_section_minimize(f, h * (i - 1), h * (i + 1), tol);
    if (here < m.value) m = {h * i, here};
    m.x = std::fmod(m.x + kTwoPi, kTwoPi);
    minima.push_back(m);
  }
  return minima;
}

}  // namespace toruscurv::detail
