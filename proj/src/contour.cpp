#include "sixv/contour.hpp"

#include <algorithm>

#include "sixv/detform.hpp"
#include "sixv/linalg.hpp"
#include "sixv/oracle.hpp"
#include "sixv/orthopoly.hpp"

namespace sixv::contour {

namespace {

void check_caps(int n, int r, int s, int cap, const char* what) {
  if (r < 1 || r > n || s < 1 || s > n)
    throw numeric_error(std::string(what) + ": r, s must lie in [1, N]");
  if (s > cap) throw numeric_error(std::string(what) + ": s exceeds the configured cap");
}

// z~ = b^2 z / ((a^2+b^2-c^2) z - a^2) as a series in the ring of z.
MultiSeries z_tilde_series(const HomParams& p, const MultiSeries& z) {
  Precision prec = p.prec();
  Scalar a2 = p.a() * p.a(), b2 = p.b() * p.b(), c2 = p.c() * p.c();
  MultiSeries den = (a2 + b2 - c2) * z - MultiSeries::constant(a2, z.orders());
  return b2 * z * den.reciprocal();
}

// sin(xi)/xi as a univariate jet in variable `var`.
MultiSeries sinc_jet(int var, const std::vector<int>& orders, Precision prec) {
  MultiSeries s(static_cast<int>(orders.size()), orders, prec);
  Real fact = Real::of_int(1, prec);  // (2m+1)!
  std::vector<int> e(orders.size(), 0);
  for (int m = 0; 2 * m <= orders[var]; ++m) {
    if (m > 0) fact *= Real::of_int(2 * m, prec) * Real::of_int(2 * m + 1, prec);
    Scalar c = Scalar(Real::of_int(1, prec) / fact);
    e[var] = 2 * m;
    s.set_coeff(e, (m % 2) ? -c : c);
  }
  return s;
}

Scalar residue_coeff(const MultiSeries& a, int r) {
  std::vector<int> e(a.orders().size(), r - 1);
  return a.coeff(e);
}

int pair_sign(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t j = 0; j < perm.size(); ++j)
    for (std::size_t k = j + 1; k < perm.size(); ++k)
      if (perm[j] > perm[k]) ++inv;
  return inv % 2 ? -1 : 1;
}

}  // namespace

Scalar efp_mir1(const HomParams& p, int n, int r, int s, int taylor_order) {
  check_caps(n, r, s, kMirSCap, "efp_mir1");
  Precision prec = p.prec();
  int order = taylor_order < 0 ? r + s + 2 : taylor_order;
  std::vector<int> orders(s, order);

  std::vector<ortho::Poly> h;
  for (int k = 1; k <= s; ++k) h.push_back(ortho::gen_h(p, n - k + 1));

  // each column carries the z_j^r monomial clearing the pole, so the row-k
  // entry becomes z^{k-1} (z-1)^{-k} h_{N-k+1}(z), analytic at 0
  MultiSeries one = MultiSeries::constant(Scalar::one(prec), orders);
  std::vector<std::vector<MultiSeries>> m;
  for (int k = 1; k <= s; ++k) {
    std::vector<MultiSeries> row;
    for (int j = 0; j < s; ++j) {
      MultiSeries z = MultiSeries::variable(j, orders, prec);
      row.push_back(z.pow_int(k - 1) * (z - one).pow_int(-k) * h[k - 1].eval_series(z));
    }
    m.push_back(std::move(row));
  }
  MultiSeries integrand = series_determinant(m);

  for (int j = 0; j < s; ++j) {
    MultiSeries zj = MultiSeries::variable(j, orders, prec);
    MultiSeries ztj = z_tilde_series(p, zj);
    for (int k = j + 1; k < s; ++k) {
      MultiSeries zk = MultiSeries::variable(k, orders, prec);
      integrand *= (ztj - one) * (zk - one) * (ztj * zk - one).reciprocal();
    }
  }

  Scalar res = residue_coeff(integrand, r);
  return (s % 2) ? -res : res;
}

Scalar efp_mir2(const HomParams& p, int n, int r, int s, int taylor_order) {
  check_caps(n, r, s, kMirSCap, "efp_mir2");
  Precision prec = p.prec();
  int order = taylor_order < 0 ? r + s + 2 : taylor_order;
  std::vector<int> orders(s, order);

  Scalar a = p.a(), b = p.b(), c = p.c();
  Scalar t = b / a;
  Scalar delta = anisotropy_delta(p);
  Scalar q = t * t - (t + t) * delta;  // t^2 - 2 t Delta

  MultiSeries one = MultiSeries::constant(Scalar::one(prec), orders);
  std::vector<MultiSeries> z, qz1;  // variables and (q z + 1)
  for (int j = 0; j < s; ++j) {
    z.push_back(MultiSeries::variable(j, orders, prec));
    qz1.push_back(q * z[j] + one);
  }

  MultiSeries integrand = one;
  for (int j = 0; j < s; ++j)
    for (int k = j + 1; k < s; ++k) {
      MultiSeries d = z[k] - z[j];
      integrand *= d * d;
    }
  Scalar two_t_delta = (t + t) * delta;
  for (int j = 0; j < s; ++j)
    for (int k = 0; k < s; ++k) {
      if (k == j) continue;
      integrand *= ((t * t) * z[j] * z[k] - two_t_delta * z[j] + one).reciprocal();
    }
  // z_j^r is absorbed into the residue read-off; keep the analytic part only
  for (int j = 0; j < s; ++j)
    integrand *= qz1[j].pow_int(s - 1) * (z[j] - one).pow_int(-s);

  integrand *= ortho::hns_poly(p, n, s).eval_series(z);

  std::vector<MultiSeries> u;
  for (int j = 0; j < s; ++j) u.push_back(-(z[j] - one) * qz1[j].reciprocal());
  integrand *= ortho::hns_poly(p, s, s).eval_series(u);

  Scalar zs = detform::z_hom(p, s);
  Scalar pref = zs / (Scalar(Real::factorial(static_cast<unsigned long>(s), prec)) *
                      a.pow_int(static_cast<long>(s) * (s - 1)) * c.pow_int(s));
  if ((s * (s + 1) / 2) % 2) pref = -pref;
  return pref * residue_coeff(integrand, r);
}

Scalar efp_mir3(const HomParams& p, int n, int r, int s, ZnSource source, int taylor_order) {
  check_caps(n, r, s, kMir3SCap, "efp_mir3");
  if (source == ZnSource::oracle && n > oracle::kSizeCap)
    throw numeric_error("efp_mir3: N exceeds the enumeration cap for the oracle jet source");
  Precision prec = p.prec();
  int order = taylor_order < 0 ? r + 2 : taylor_order;
  std::vector<int> orders(s, order);

  Scalar a = p.a(), b = p.b(), c = p.c();
  Scalar two_eta = p.eta + p.eta;
  MultiSeries one = MultiSeries::constant(Scalar::one(prec), orders);
  MultiSeries c2eta = MultiSeries::constant(two_eta, orders);

  std::vector<MultiSeries> xi;
  for (int j = 0; j < s; ++j) xi.push_back(MultiSeries::variable(j, orders, prec));

  MultiSeries integrand = one;
  for (int j = 0; j < s; ++j)
    for (int k = j + 1; k < s; ++k) {
      MultiSeries d = sin_series(xi[k] - xi[j]);
      integrand *= d * d;
    }
  for (int j = 0; j < s; ++j)
    for (int k = 0; k < s; ++k) {
      if (k == j) continue;
      integrand *= sin_series(xi[j] - xi[k] + c2eta).reciprocal();
    }
  for (int j = 0; j < s; ++j) {
    integrand *= sine_jet(-two_eta, j, orders).pow_int(-(n - r));
    integrand *= sine_jet(p.lambda - p.eta, j, orders).pow_int(-s);
    // sin(xi)^r = xi^r * sinc^r; the monomial is absorbed into the read-off
    integrand *= sinc_jet(j, orders, prec).pow_int(-r);
  }

  // Z_N(eta - xi_1, .., eta - xi_s, lambda, .., lambda) as a jet
  if (source == ZnSource::oracle) {
    std::vector<MultiSeries> a_row, b_row;
    MultiSeries a_hom = MultiSeries::constant(a, orders);
    MultiSeries b_hom = MultiSeries::constant(b, orders);
    MultiSeries c_jet = MultiSeries::constant(c, orders);
    for (int row = 1; row <= n; ++row) {
      if (row <= s) {
        a_row.push_back(sin_series(c2eta - xi[row - 1]));
        b_row.push_back(sin_series(-xi[row - 1]));
      } else {
        a_row.push_back(a_hom);
        b_row.push_back(b_hom);
      }
    }
    oracle::JetWeightFn fn = [&](int kind, int, int row) -> const MultiSeries& {
      return kind == 0 ? a_row[row - 1] : (kind == 1 ? b_row[row - 1] : c_jet);
    };
    integrand *= oracle::brute_z_jet(n, fn);
  } else {
    std::vector<MultiSeries> om;
    for (int j = 0; j < s; ++j) om.push_back(omega_jet(p, j, orders));
    MultiSeries zn = detform::z_hom(p, n) * ortho::hns_poly(p, n, s).eval_series(om);
    Scalar inv_a = a.inverse();
    for (int j = 0; j < s; ++j)
      zn *= (inv_a * sin_series(c2eta - xi[j])).pow_int(n - 1);
    integrand *= zn;
  }

  // Z_s(lambda + xi_1, .., lambda + xi_s) as an exact oracle jet
  {
    std::vector<MultiSeries> a_row, b_row;
    MultiSeries c_jet = MultiSeries::constant(c, orders);
    for (int row = 1; row <= s; ++row) {
      a_row.push_back(sine_jet(p.lambda + p.eta, row - 1, orders));
      b_row.push_back(sine_jet(p.lambda - p.eta, row - 1, orders));
    }
    oracle::JetWeightFn fn = [&](int kind, int, int row) -> const MultiSeries& {
      return kind == 0 ? a_row[row - 1] : (kind == 1 ? b_row[row - 1] : c_jet);
    };
    integrand *= oracle::brute_z_jet(s, fn);
  }

  Scalar zn_hom = detform::z_hom(p, n);
  Scalar pref = a.pow_int(static_cast<long>(n - r) * s) * b.pow_int(static_cast<long>(r) * s) /
                (Scalar(Real::factorial(static_cast<unsigned long>(s), prec)) *
                 c.pow_int(s) * zn_hom);
  if ((n * s + s * (s + 1) / 2) % 2) pref = -pref;
  return pref * residue_coeff(integrand, r);
}

Scalar mir1_det_value(const HomParams& p, int n, int r, int s,
                      const std::vector<Scalar>& z) {
  Precision prec = p.prec();
  if (static_cast<int>(z.size()) != s) throw numeric_error("mir1_det_value: wrong point count");
  Scalar one = Scalar::one(prec);
  ScalarMatrix m(s, s, prec);
  for (int k = 1; k <= s; ++k) {
    ortho::Poly h = ortho::gen_h(p, n - k + 1);
    for (int j = 0; j < s; ++j)
      m.at(k - 1, j) = h.eval(z[j]) * z[j].pow_int(-(r - k + 1)) * (z[j] - one).pow_int(-k);
  }
  return determinant(m);
}

Scalar asym_pair_lhs(const HomParams& p, const std::vector<Scalar>& z) {
  Precision prec = p.prec();
  int s = static_cast<int>(z.size());
  Scalar one = Scalar::one(prec);
  std::vector<Scalar> zt;
  for (const Scalar& v : z) zt.push_back(z_tilde(v, p));

  Scalar acc = Scalar::zero(prec);
  std::vector<int> perm(s);
  for (int j = 0; j < s; ++j) perm[j] = j;
  do {
    Scalar term = one;
    for (int j = 0; j < s; ++j)
      for (int k = j + 1; k < s; ++k)
        term *= (zt[perm[j]] - one) * (z[perm[k]] - one) /
                (zt[perm[j]] * z[perm[k]] - one);
    acc += pair_sign(perm) > 0 ? term : -term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc / Scalar(Real::factorial(static_cast<unsigned long>(s), prec));
}

Scalar asym_pair_rhs(const HomParams& p, const std::vector<Scalar>& z) {
  Precision prec = p.prec();
  int s = static_cast<int>(z.size());
  Scalar one = Scalar::one(prec);
  Scalar a = p.a(), c = p.c();
  Scalar t = p.b() / a;
  Scalar delta = anisotropy_delta(p);
  Scalar q = t * t - (t + t) * delta;
  Scalar two_t_delta = (t + t) * delta;

  Scalar num = detform::z_hom(p, s);
  for (int j = 0; j < s; ++j)
    for (int k = j + 1; k < s; ++k) num *= z[k] - z[j];
  std::vector<Scalar> u;
  for (int j = 0; j < s; ++j) {
    num *= (q * z[j] + one).pow_int(s - 1);
    u.push_back(-(z[j] - one) / (q * z[j] + one));
  }
  num *= ortho::h_Ns(p, s, s, u);

  Scalar den = Scalar(Real::factorial(static_cast<unsigned long>(s), prec)) *
               a.pow_int(static_cast<long>(s) * (s - 1)) * c.pow_int(s);
  for (int j = 0; j < s; ++j)
    for (int k = 0; k < s; ++k) {
      if (k == j) continue;
      den *= t * t * z[j] * z[k] - two_t_delta * z[j] + one;
    }
  return num / den;
}

}  // namespace sixv::contour
