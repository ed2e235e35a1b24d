#include "sixv/series.hpp"

#include <numeric>

namespace sixv {

namespace {

// sin t and cos t for a series t with zero constant term, by direct Taylor
// summation; terminates once t^k truncates to zero.
void sincos_nilpotent(const MultiSeries& t, MultiSeries& sin_t, MultiSeries& cos_t) {
  Precision p = t.prec();
  int total = std::accumulate(t.orders().begin(), t.orders().end(), 0);
  sin_t = MultiSeries(t.num_vars(), t.orders(), p);
  cos_t = MultiSeries::constant(Scalar::one(p), t.orders());
  MultiSeries tk = t;  // t^k
  Real kfact = Real::of_int(1, p);
  for (int k = 1; k <= total && !tk.is_identically_zero(); ++k) {
    kfact *= Real::of_int(k, p);
    Scalar coef = Scalar(Real::of_int(1, p) / kfact);
    if ((k / 2) % 2 == 1) coef = -coef;  // sign (-1)^floor(k/2)
    if (k % 2 == 1)
      sin_t += tk * coef;
    else
      cos_t += tk * coef;
    if (k < total) tk *= t;
  }
}

}  // namespace

MultiSeries sin_series(const MultiSeries& a) {
  Precision p = a.prec();
  Scalar c = a.constant_term();
  MultiSeries t = a - MultiSeries::constant(c, a.orders());
  MultiSeries st(a.num_vars(), a.orders(), p), ct(a.num_vars(), a.orders(), p);
  sincos_nilpotent(t, st, ct);
  return ct * Scalar::sin(c) + st * Scalar::cos(c);
}

MultiSeries cos_series(const MultiSeries& a) {
  Precision p = a.prec();
  Scalar c = a.constant_term();
  MultiSeries t = a - MultiSeries::constant(c, a.orders());
  MultiSeries st(a.num_vars(), a.orders(), p), ct(a.num_vars(), a.orders(), p);
  sincos_nilpotent(t, st, ct);
  return ct * Scalar::cos(c) - st * Scalar::sin(c);
}

MultiSeries sine_jet(const Scalar& center, int var_index, const std::vector<int>& orders) {
  Precision p = center.prec();
  MultiSeries eps = MultiSeries::variable(var_index, orders, p);
  MultiSeries st(eps.num_vars(), orders, p), ct(eps.num_vars(), orders, p);
  sincos_nilpotent(eps, st, ct);
  return ct * Scalar::sin(center) + st * Scalar::cos(center);
}

}  // namespace sixv
