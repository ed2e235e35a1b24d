#include "sixv/orthopoly.hpp"

#include <algorithm>

namespace sixv::ortho {

Poly poly_mul(const Poly& a, const Poly& b) {
  Precision prec = max_prec(a.prec(), b.prec());
  Poly r;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Scalar::zero(prec));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  return r;
}

MomentTable moments(const HomParams& p, int n_max) {
  Precision prec = p.prec();
  MomentTable t{p, n_max, {}, {}, {}};
  MultiSeries jet = phi_jet(p, 0, {n_max});
  Real kfact = Real::of_int(1, prec);
  t.c.reserve(n_max + 1);
  for (int k = 0; k <= n_max; ++k) {
    if (k > 0) kfact *= Real::of_int(k, prec);
    t.c.push_back(jet.coeff({k}) * Scalar(kfact));
  }
  int m = n_max / 2 + 1;
  t.hankel.reserve(m + 1);
  t.hankel.push_back(Scalar::one(prec));  // empty determinant
  for (int n = 1; n <= m; ++n) {
    ScalarMatrix h(n, n, prec);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) h.at(i, j) = t.c[i + j];
    t.hankel.push_back(determinant(h));
  }
  Real thresh = singularity_threshold(prec);
  t.norms.reserve(n_max / 2 + 1);
  for (int n = 0; n <= n_max / 2; ++n) {
    if (t.hankel[n].abs() < thresh)
      throw singularity_error("moments: degenerate Hankel determinant");
    t.norms.push_back(t.hankel[n + 1] / t.hankel[n]);
  }
  return t;
}

Poly monic_P(const MomentTable& table, int n) {
  Precision prec = table.params.prec();
  if (2 * n - 1 > table.n_max) throw numeric_error("monic_P: moment table too short");
  Poly p;
  p.coeffs.assign(n + 1, Scalar::zero(prec));
  p.coeffs[n] = Scalar::one(prec);
  if (n == 0) return p;
  // orthogonality to x^k, k < n: sum_m p_m c_{m+k} = -c_{n+k}
  ScalarMatrix a(n, n, prec);
  std::vector<Scalar> b(n, Scalar::zero(prec));
  for (int k = 0; k < n; ++k) {
    for (int m = 0; m < n; ++m) a.at(k, m) = table.c[m + k];
    b[k] = -table.c[n + k];
  }
  std::vector<Scalar> x = solve_linear(a, b);
  for (int m = 0; m < n; ++m) p.coeffs[m] = x[m];
  return p;
}

Poly K_poly(const MomentTable& table, int n) {
  Precision prec = table.params.prec();
  if (n >= static_cast<int>(table.norms.size()))
    throw numeric_error("K_poly: moment table too short");
  Poly p = monic_P(table, n);
  Scalar factor = Scalar(Real::factorial(static_cast<unsigned long>(n), prec)) *
                  table.c[0].pow_int(n + 1) / table.norms[n];
  for (auto& v : p.coeffs) v *= factor;
  return p;
}

namespace {

std::vector<Real> factorials(int up_to, Precision prec) {
  std::vector<Real> f;
  f.reserve(up_to + 1);
  f.push_back(Real::of_int(1, prec));
  for (int k = 1; k <= up_to; ++k) f.push_back(f.back() * Real::of_int(k, prec));
  return f;
}

// Pairing K(d/deps) w(eps) at eps = 0 for a univariate jet w.
Scalar apply_K(const Poly& k, const MultiSeries& w, const std::vector<Real>& fact) {
  Precision prec = w.prec();
  Scalar acc = Scalar::zero(prec);
  int top = std::min(k.degree(), w.orders()[0]);
  for (int j = 0; j <= top; ++j) acc += k.coeffs[j] * Scalar(fact[j]) * w.coeff({j});
  return acc;
}

// Exact division of a polynomial (stored as a series) by (u_vk - u_vj).
MultiSeries divide_linear(const MultiSeries& num, int vk, int vj) {
  Precision prec = num.prec();
  MultiSeries uj = MultiSeries::variable(vj, num.orders(), prec);
  MultiSeries q(num.num_vars(), num.orders(), prec);
  MultiSeries qm(num.num_vars(), num.orders(), prec);  // coefficient Q_m, starts at Q_d = 0
  for (int m = num.degree_in(vk); m >= 1; --m) {
    MultiSeries qprev = num.coeff_slice(vk, m) + uj * qm;
    q += qprev.shift_var(vk, m - 1);
    qm = qprev;
  }
  return q;
}

}  // namespace

std::vector<Scalar> boundary_H(const HomParams& p, int n) {
  Precision prec = p.prec();
  if (n < 1) throw numeric_error("boundary_H: N must be positive");
  if (n == 1) return {Scalar::one(prec)};
  MomentTable table = moments(p, 2 * n - 2);
  Poly k = K_poly(table, n - 1);
  std::vector<Real> fact = factorials(n - 1, prec);
  std::vector<int> orders{n - 1};
  MultiSeries om = omega_jet(p, 0, orders);
  MultiSeries w = rho_jet(p, 0, orders).pow_int(n - 1);  // r = n term: omega^0
  std::vector<Scalar> h(n, Scalar::zero(prec));
  for (int r = n; r >= 1; --r) {
    h[r - 1] = apply_K(k, w, fact);
    if (r > 1) w *= om;
  }
  return h;
}

Poly gen_h(const HomParams& p, int n) { return Poly{boundary_H(p, n)}; }

std::vector<Scalar> v_vector(const HomParams& p, int n) {
  Precision prec = p.prec();
  if (n == 1) return {Scalar::one(prec)};
  MomentTable table = moments(p, 2 * n - 2);
  Poly k = K_poly(table, n - 1);
  std::vector<Real> fact = factorials(n - 1, prec);
  std::vector<int> orders{n - 1};
  MultiSeries om = omega_jet(p, 0, orders);
  MultiSeries w = MultiSeries::constant(Scalar::one(prec), orders);  // p = n term
  std::vector<Scalar> v(n, Scalar::zero(prec));
  for (int q = n; q >= 1; --q) {
    v[q - 1] = apply_K(k, w, fact);
    if (q > 1) w *= om;
  }
  return v;
}

MultiSeries hns_poly(const HomParams& p, int n, int s) {
  Precision prec = p.prec();
  std::vector<int> orders(s, n + s - 2 < 1 ? 1 : n + s - 2);
  std::vector<Poly> h;
  for (int k = 1; k <= s; ++k) h.push_back(gen_h(p, n - s + k));

  std::vector<std::vector<MultiSeries>> m;
  MultiSeries one = MultiSeries::constant(Scalar::one(prec), orders);
  for (int k = 1; k <= s; ++k) {
    std::vector<MultiSeries> row;
    for (int j = 0; j < s; ++j) {
      MultiSeries u = MultiSeries::variable(j, orders, prec);
      row.push_back(u.pow_int(s - k) * (u - one).pow_int(k - 1) * h[k - 1].eval_series(u));
    }
    m.push_back(std::move(row));
  }
  MultiSeries det = series_determinant(m);
  for (int j = 0; j < s; ++j)
    for (int k = j + 1; k < s; ++k) det = divide_linear(det, k, j);
  return det;
}

Scalar h_Ns(const HomParams& p, int n, int s, const std::vector<Scalar>& points) {
  Precision prec = p.prec();
  if (static_cast<int>(points.size()) != s) throw numeric_error("h_Ns: wrong number of points");
  if (s < 1 || s > n) throw numeric_error("h_Ns: s must lie in [1, N]");
  if (s == 1) return gen_h(p, n).eval(points[0]);

  Real sep_threshold = Real::pow10(-10, prec);
  bool coincident = false;
  for (int j = 0; j < s && !coincident; ++j)
    for (int k = j + 1; k < s && !coincident; ++k)
      coincident = (points[k] - points[j]).abs() < sep_threshold;
  if (coincident) return hns_poly(p, n, s).eval(points);

  std::vector<Poly> h;
  for (int k = 1; k <= s; ++k) h.push_back(gen_h(p, n - s + k));
  ScalarMatrix m(s, s, prec);
  Scalar one = Scalar::one(prec);
  for (int k = 1; k <= s; ++k)
    for (int j = 0; j < s; ++j)
      m.at(k - 1, j) = points[j].pow_int(s - k) * (points[j] - one).pow_int(k - 1) *
                       h[k - 1].eval(points[j]);
  Scalar vdm = one;
  for (int j = 0; j < s; ++j)
    for (int k = j + 1; k < s; ++k) vdm *= points[k] - points[j];
  return determinant(m) / vdm;
}

Scalar bare_z(const HomParams& p, int n, const std::vector<Scalar>& xis) {
  Precision prec = p.prec();
  int s = static_cast<int>(xis.size());
  if (s < 1 || s > n) throw numeric_error("bare_z: need between 1 and N inhomogeneities");
  Scalar a0 = p.a();
  check_denominator(a0, "bare_z: a(lambda)");
  Scalar factor = Scalar::one(prec);
  std::vector<Scalar> u;
  for (const Scalar& xi : xis) {
    factor *= (Scalar::sin(p.lambda + xi + p.eta) / a0).pow_int(n - 1);
    u.push_back(gamma_fn(xi, p));
  }
  return factor * h_Ns(p, n, s, u);
}

Scalar efp_ortho(const HomParams& p, int n, int r, int s, int s_cap) {
  Precision prec = p.prec();
  if (r < 1 || r > n || s < 1 || s > n)
    throw numeric_error("efp_ortho: r, s must lie in [1, N]");
  if (s > s_cap) throw numeric_error("efp_ortho: s exceeds the configured cap");
  if (s > r) return Scalar::zero(prec);

  MomentTable table = moments(p, 2 * n - 2);
  std::vector<Poly> k;  // K_{n-s+1} .. K_n ... rows use K_{n-s}..K_{n-1}
  for (int row = 0; row < s; ++row) k.push_back(K_poly(table, n - s + row));
  std::vector<Real> fact = factorials(n - 1, prec);

  std::vector<int> orders(s, n - 1);
  MultiSeries w = MultiSeries::constant(Scalar::one(prec), orders);
  std::vector<MultiSeries> om, om_t;
  for (int j = 0; j < s; ++j) {
    om.push_back(omega_jet(p, j, orders));
    om_t.push_back(omega_t_jet(p, j, orders));
    w *= om[j].pow_int(n - r) * rho_jet(p, j, orders).pow_int(n);
  }
  MultiSeries one = MultiSeries::constant(Scalar::one(prec), orders);
  for (int j = 0; j < s; ++j)
    for (int kk = j + 1; kk < s; ++kk) {
      MultiSeries den = rho_t_jet(p, j, orders) * rho_jet(p, kk, orders) *
                        (om_t[j] * om[kk] - one);
      w *= den.reciprocal();
    }

  // operator determinant det[K_{n-s+row}(d/deps_j)] applied to w at 0
  Scalar det = Scalar::zero(prec);
  std::vector<int> perm(s);
  for (int j = 0; j < s; ++j) perm[j] = j;
  do {
    int inv = 0;
    for (int j = 0; j < s; ++j)
      for (int kk = j + 1; kk < s; ++kk)
        if (perm[j] > perm[kk]) ++inv;
    Scalar acc = Scalar::zero(prec);
    w.for_each_nonzero([&](const std::vector<int>& e, const Scalar& v) {
      Scalar t = v;
      for (int j = 0; j < s; ++j) {
        const Poly& kp = k[perm[j]];
        if (e[j] > kp.degree()) return;
        t *= kp.coeffs[e[j]] * Scalar(fact[e[j]]);
      }
      acc += t;
    });
    det += (inv % 2) ? -acc : acc;
  } while (std::next_permutation(perm.begin(), perm.end()));

  return (s % 2) ? -det : det;
}

}  // namespace sixv::ortho
