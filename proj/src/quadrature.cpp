#include "sixv/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace sixv::quad {

namespace {

// One tanh-sinh level: nodes x = mid + half*tanh((pi/2) sinh(k h)).
Real level_sum(const std::function<Real(const Real&)>& f, const Real& mid, const Real& half,
               double h, Precision prec) {
  Real half_pi = Real::pi(prec) / Real::of_int(2, prec);
  Real acc(prec);
  const double t_max = 4.5;
  int kmax = static_cast<int>(t_max / h);
  for (int k = -kmax; k <= kmax; ++k) {
    Real t = Real::of(k * h, prec);
    Real u = half_pi * Real::sinh(t);
    Real sech = Real::of_int(1, prec) / Real::cosh(u);
    Real x = mid + half * Real::tanh(u);
    Real w = half_pi * Real::cosh(t) * sech * sech;
    acc += f(x) * w;
  }
  return acc * half * Real::of(h, prec);
}

}  // namespace

Real tanh_sinh(const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
               Precision prec, const Real& tol) {
  Real two = Real::of_int(2, prec);
  Real mid = (a + b) / two;
  Real half = (b - a) / two;
  double h = 0.5;
  Real prev = level_sum(f, mid, half, h, prec);
  for (int level = 0; level < 13; ++level) {
    h /= 2;
    Real cur = level_sum(f, mid, half, h, prec);
    Real scale = Real::abs(cur);
    if (scale < Real::of_int(1, prec)) scale = Real::of_int(1, prec);
    if (Real::abs(cur - prev) < tol * scale) return cur;
    prev = cur;
  }
  return prev;
}

Real laplace_moment(const HomParams& p, int n) {
  // the target accuracy is 1e-18, so the integrand runs at modest precision
  Precision prec = Precision::digits(60);
  Real lam = Real::of_str(p.lambda.re().str(70), prec);
  Real eta = Real::of_str(p.eta.re().str(70), prec);
  Real pi = Real::pi(prec);
  Real half_pi = pi / Real::of_int(2, prec);

  // decay rates of the integrand on both tails
  double kp = (pi - lam - eta).to_double();
  double km = (lam - eta).to_double();
  double kappa = std::min(kp, km);
  if (kappa <= 0) throw numeric_error("laplace_moment: outside the disordered regime");
  double x_cut = (60.0 + 8.0 * n) / kappa;

  Real tiny = Real::pow10(-30, prec);
  Real two_eta_over_pi = (eta + eta) / pi;
  auto f = [&](const Real& x) -> Real {
    Real envelope = Real::exp(x * (lam - half_pi));
    Real ratio = (Real::abs(x) < tiny) ? two_eta_over_pi
                                       : Real::sinh(eta * x) / Real::sinh(half_pi * x);
    Real mono = Real::of_int(1, prec);
    for (int k = 0; k < n; ++k) mono *= x;
    return envelope * ratio * mono;
  };
  Real x_max = Real::of(x_cut, prec);
  return tanh_sinh(f, -x_max, x_max, prec, Real::pow10(-18, prec));
}

}  // namespace sixv::quad
