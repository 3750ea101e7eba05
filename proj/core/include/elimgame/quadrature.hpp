#pragma once

#include <cmath>
#include <cstddef>

namespace elimgame::quadrature {

namespace detail {

template <class F>
double simpson(F& f, double lo, double mid, double hi, double flo, double fmid,
               double fhi) {
  (void)f;
  (void)mid;
  return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
}

template <class F>
double adapt(F& f, double lo, double hi, double flo, double fmid, double fhi,
             double whole, double tol, int depth) {
  const double mid = 0.5 * (lo + hi);
  const double lmid = 0.5 * (lo + mid);
  const double rmid = 0.5 * (mid + hi);
  const double flmid = f(lmid);
  const double frmid = f(rmid);
  const double left = simpson(f, lo, lmid, mid, flo, flmid, fmid);
  const double right = simpson(f, mid, rmid, hi, fmid, frmid, fhi);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adapt(f, lo, mid, flo, flmid, fmid, left, 0.5 * tol, depth - 1) +
         adapt(f, mid, hi, fmid, frmid, fhi, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson integration of f over [lo, hi] with absolute tolerance.
template <class F>
double integrate(F&& f, double lo, double hi, double abs_tol = 1e-12,
                 int max_depth = 48) {
  if (lo == hi) return 0.0;
  double sign = 1.0;
  if (hi < lo) {
    std::swap(lo, hi);
    sign = -1.0;
  }
  const double mid = 0.5 * (lo + hi);
  const double flo = f(lo);
  const double fmid = f(mid);
  const double fhi = f(hi);
  const double whole = detail::simpson(f, lo, mid, hi, flo, fmid, fhi);
  return sign *
         detail::adapt(f, lo, hi, flo, fmid, fhi, whole, abs_tol, max_depth);
}

/// Fixed composite Simpson over `panels` equal panels (two subpanels each).
template <class F>
double composite_simpson(F&& f, double lo, double hi, std::size_t panels) {
  if (panels == 0) panels = 1;
  const double h = (hi - lo) / static_cast<double>(panels);
  double sum = 0.0;
  double fleft = f(lo);
  for (std::size_t i = 0; i < panels; ++i) {
    const double a = lo + h * static_cast<double>(i);
    const double b = (i + 1 == panels) ? hi : a + h;
    const double fm = f(0.5 * (a + b));
    const double fr = f(b);
    sum += (b - a) / 6.0 * (fleft + 4.0 * fm + fr);
    fleft = fr;
  }
  return sum;
}

}  // namespace elimgame::quadrature
