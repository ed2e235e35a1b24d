#include "sixv/detform.hpp"

namespace sixv::detform {

ScalarMatrix phi_matrix(const InhomParams& p) {
  int n = p.n();
  ScalarMatrix m(n, n, p.prec());
  for (int a = 0; a < n; ++a)
    for (int k = 0; k < n; ++k) m.at(a, k) = phi(p.lambdas[a], p.nus[k], p.eta);
  return m;
}

IkResult z_ik(const InhomParams& p) {
  p.validate();
  int n = p.n();
  Precision prec = p.prec();
  // near-coincident parameters are legal but flagged
  bool warn = false;
  Real cond = Real::pow10(-10, prec);
  for (int i = 0; i < n && !warn; ++i)
    for (int j = i + 1; j < n && !warn; ++j)
      warn = (p.lambdas[i] - p.lambdas[j]).abs() < cond || (p.nus[i] - p.nus[j]).abs() < cond;

  Scalar num = Scalar::one(prec);
  for (int a = 0; a < n; ++a)
    for (int k = 0; k < n; ++k)
      num *= weight_a(p.lambdas[a], p.nus[k], p.eta) * weight_b(p.lambdas[a], p.nus[k], p.eta);
  Scalar den = Scalar::one(prec);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) den *= d_fn(p.lambdas[b], p.lambdas[a]);
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) den *= d_fn(p.nus[j], p.nus[k]);
  Scalar det = determinant(phi_matrix(p));
  return {num / den * det, n, warn};
}

Scalar z_ik_inhom(const InhomParams& p) { return z_ik(p).value; }

std::vector<Scalar> phi_derivatives(const HomParams& p, int order) {
  MultiSeries jet = phi_jet(p, 0, {order < 1 ? 1 : order});
  Precision prec = p.prec();
  std::vector<Scalar> d;
  d.reserve(order + 1);
  Real kfact = Real::of_int(1, prec);
  for (int k = 0; k <= order; ++k) {
    if (k > 0) kfact *= Real::of_int(k, prec);
    d.push_back(jet.coeff({k}) * Scalar(kfact));
  }
  return d;
}

Scalar phi_derivative_det(const HomParams& p, int n) {
  std::vector<Scalar> d = phi_derivatives(p, 2 * n - 2);
  ScalarMatrix m(n, n, p.prec());
  for (int a = 0; a < n; ++a)
    for (int k = 0; k < n; ++k) m.at(a, k) = d[a + k];
  return determinant(m);
}

Scalar z_hom(const HomParams& p, int n) {
  if (n < 1) throw numeric_error("z_hom: N must be positive");
  Precision prec = p.prec();
  Scalar pref = (p.b() * p.a()).pow_int(static_cast<long>(n) * n);
  Real fact = Real::of_int(1, prec);
  Real nf = Real::of_int(1, prec);
  for (int k = 1; k <= n - 1; ++k) {
    nf *= Real::of_int(k, prec);
    fact *= nf * nf;
  }
  return pref * phi_derivative_det(p, n) * Scalar(Real::of_int(1, prec) / fact);
}

}  // namespace sixv::detform
