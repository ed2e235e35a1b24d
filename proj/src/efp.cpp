#include "sixv/efp.hpp"

#include <algorithm>
#include <map>

namespace sixv::efp {

namespace {

// det of the phi matrix with rows `rows` (0-based) and columns 0..s-1 removed;
// the empty 0x0 minor counts as 1.
Scalar minor_det(const ScalarMatrix& m, std::vector<int> rows, int s, Precision prec) {
  if (m.rows() == s) return Scalar::one(prec);
  std::vector<int> cols(s);
  for (int j = 0; j < s; ++j) cols[j] = j;
  return determinant(m.without(rows, cols));
}

// Cache of minor determinants keyed by the sorted removed-row set.
class MinorCache {
 public:
  MinorCache(const ScalarMatrix& m, int s, Precision prec) : m_(m), s_(s), prec_(prec) {}

  const Scalar& get(std::vector<int> rows) {
    std::sort(rows.begin(), rows.end());
    auto it = cache_.find(rows);
    if (it == cache_.end())
      it = cache_.emplace(rows, minor_det(m_, rows, s_, prec_)).first;
    return it->second;
  }

 private:
  const ScalarMatrix& m_;
  int s_;
  Precision prec_;
  std::map<std::vector<int>, Scalar> cache_;
};

// prod_{j=1..s} prod_{k>j} d(nu_j, nu_k) / (prod_{b<=r} a(l_b, nu_j) prod_{b>r} b(l_b, nu_j))
Scalar sum_prefactor(const InhomParams& p, int r, int s) {
  int n = p.n();
  Scalar pref = Scalar::one(p.prec());
  for (int j = 0; j < s; ++j) {
    for (int k = j + 1; k < n; ++k) pref *= d_fn(p.nus[j], p.nus[k]);
    Scalar den = Scalar::one(p.prec());
    for (int b = 0; b < r; ++b) den *= weight_a(p.lambdas[b], p.nus[j], p.eta);
    for (int b = r; b < n; ++b) den *= weight_b(p.lambdas[b], p.nus[j], p.eta);
    pref = pref / den;
  }
  return pref;
}

void check_rs(const InhomParams& p, int r, int s, const char* what) {
  if (r < 1 || r > p.n() || s < 1 || s > p.n())
    throw numeric_error(std::string(what) + ": r, s must lie in [1, N]");
}

}  // namespace

Scalar g_r_fn(const Scalar& lambda, const InhomParams& p, int r) {
  int n = p.n();
  Scalar num = Scalar::one(p.prec());
  for (int a = r; a < n; ++a) num *= d_fn(p.lambdas[a], lambda);
  for (int a = 0; a < r; ++a) num *= e_fn(p.lambdas[a], lambda, p.eta);
  Scalar den = Scalar::one(p.prec());
  for (int k = 0; k < n; ++k) den *= weight_b(lambda, p.nus[k], p.eta);
  check_denominator(den, "g_r_fn");
  return num / den;
}

Scalar efp_inhom(const InhomParams& p, int r, int s) {
  p.validate();
  check_rs(p, r, s, "efp_inhom");
  Precision prec = p.prec();
  if (s > r) return Scalar::zero(prec);

  ScalarMatrix m = detform::phi_matrix(p);
  Scalar det_m = determinant(m);
  check_denominator(det_m, "efp_inhom: det of the phi matrix");
  MinorCache minors(m, s, prec);

  std::vector<Scalar> g(r, Scalar::zero(prec));
  for (int a = 0; a < r; ++a) g[a] = g_r_fn(p.lambdas[a], p, r);

  // ordered tuples (alpha_1..alpha_s) of pairwise distinct indices in 1..r
  Scalar total = Scalar::zero(prec);
  std::vector<int> alpha(s);           // 0-based
  std::vector<char> used(r, 0);
  auto term = [&]() {
    int sign_exp = s;
    for (int k = 0; k < s; ++k) sign_exp += alpha[k] + 1;
    for (int j = 0; j < s; ++j)
      for (int k = j + 1; k < s; ++k)
        if (alpha[k] > alpha[j]) ++sign_exp;
    Scalar t = minors.get(alpha);
    for (int j = 0; j < s; ++j) t *= g[alpha[j]];
    for (int j = 0; j < s; ++j)
      for (int k = j + 1; k < s; ++k)
        t *= weight_a(p.lambdas[alpha[j]], p.nus[k], p.eta) *
             weight_b(p.lambdas[alpha[k]], p.nus[j], p.eta) /
             e_fn(p.lambdas[alpha[j]], p.lambdas[alpha[k]], p.eta);
    if (sign_exp % 2) t = -t;
    total += t;
  };
  // depth-first odometer over the tuple positions
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == s) {
      term();
      return;
    }
    for (int a = 0; a < r; ++a) {
      if (used[a]) continue;
      used[a] = 1;
      alpha[pos] = a;
      self(self, pos + 1);
      used[a] = 0;
    }
  };
  rec(rec, 0);

  return sum_prefactor(p, r, s) * total / det_m;
}

Scalar efp_inhom_s2(const InhomParams& p, int r) {
  p.validate();
  check_rs(p, r, 2, "efp_inhom_s2");
  Precision prec = p.prec();
  if (r < 2) return Scalar::zero(prec);

  ScalarMatrix m = detform::phi_matrix(p);
  Scalar det_m = determinant(m);
  check_denominator(det_m, "efp_inhom_s2: det of the phi matrix");
  MinorCache minors(m, 2, prec);

  std::vector<Scalar> g(r, Scalar::zero(prec));
  for (int a = 0; a < r; ++a) g[a] = g_r_fn(p.lambdas[a], p, r);

  Scalar total = Scalar::zero(prec);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      if (b == a) continue;
      // (-1)^(alpha+beta+chi(beta,alpha)) with 1-based alpha, beta
      int sign_exp = (a + 1) + (b + 1) + (b > a ? 1 : 0);
      Scalar t = weight_a(p.lambdas[a], p.nus[1], p.eta) *
                 weight_b(p.lambdas[b], p.nus[0], p.eta) /
                 e_fn(p.lambdas[a], p.lambdas[b], p.eta) * g[a] * g[b] *
                 minors.get({a, b});
      total += (sign_exp % 2) ? -t : t;
    }
  return sum_prefactor(p, r, 2) * total / det_m;
}

Scalar efp_inhom_s3(const InhomParams& p, int r) {
  p.validate();
  check_rs(p, r, 3, "efp_inhom_s3");
  Precision prec = p.prec();
  if (r < 3) return Scalar::zero(prec);

  ScalarMatrix m = detform::phi_matrix(p);
  Scalar det_m = determinant(m);
  check_denominator(det_m, "efp_inhom_s3: det of the phi matrix");
  MinorCache minors(m, 3, prec);

  std::vector<Scalar> g(r, Scalar::zero(prec));
  for (int a = 0; a < r; ++a) g[a] = g_r_fn(p.lambdas[a], p, r);

  Scalar total = Scalar::zero(prec);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      if (b == a) continue;
      for (int c = 0; c < r; ++c) {
        if (c == a || c == b) continue;
        int sign_exp = (a + 1) + (b + 1) + (c + 1) + 1 + (c > a ? 1 : 0) +
                       (c > b ? 1 : 0) + (b > a ? 1 : 0);
        Scalar t = weight_a(p.lambdas[a], p.nus[1], p.eta) *
                   weight_a(p.lambdas[a], p.nus[2], p.eta) *
                   weight_a(p.lambdas[b], p.nus[2], p.eta) *
                   weight_b(p.lambdas[b], p.nus[0], p.eta) *
                   weight_b(p.lambdas[c], p.nus[0], p.eta) *
                   weight_b(p.lambdas[c], p.nus[1], p.eta) /
                   (e_fn(p.lambdas[a], p.lambdas[b], p.eta) *
                    e_fn(p.lambdas[a], p.lambdas[c], p.eta) *
                    e_fn(p.lambdas[b], p.lambdas[c], p.eta)) *
                   g[a] * g[b] * g[c] * minors.get({a, b, c});
        total += (sign_exp % 2) ? -t : t;
      }
    }
  return sum_prefactor(p, r, 3) * total / det_m;
}

MultiSeries hom_tail_jet(const HomParams& p, int n, int r, int s) {
  Precision prec = p.prec();
  std::vector<int> orders(s, n - 1 < 1 ? 1 : n - 1);
  Scalar two_eta = p.eta + p.eta;
  MultiSeries g = MultiSeries::constant(Scalar::one(prec), orders);
  for (int j = 0; j < s; ++j) {
    MultiSeries sin_e = sine_jet(Scalar::zero(prec), j, orders);
    MultiSeries sin_em = sine_jet(-two_eta, j, orders);
    MultiSeries sin_den = sine_jet(p.lambda - p.eta, j, orders);
    g *= sin_e.pow_int(n - r) * sin_em.pow_int(r) * sin_den.pow_int(-n);
  }
  for (int j = 0; j < s; ++j)
    for (int k = j + 1; k < s; ++k) {
      MultiSeries num = sine_jet(p.lambda + p.eta, j, orders) *
                        sine_jet(p.lambda - p.eta, k, orders);
      MultiSeries den = sin_series(MultiSeries::variable(j, orders, prec) -
                                   MultiSeries::variable(k, orders, prec) +
                                   MultiSeries::constant(two_eta, orders));
      g *= num * den.reciprocal();
    }
  return g;
}

Scalar efp_hom(const HomParams& p, int n, int r, int s, int s_cap) {
  if (r < 1 || r > n || s < 1 || s > n)
    throw numeric_error("efp_hom: r, s must lie in [1, N]");
  if (s > s_cap) throw numeric_error("efp_hom: s exceeds the configured cap");
  Precision prec = p.prec();
  if (s > r) return Scalar::zero(prec);

  std::vector<Scalar> d = detform::phi_derivatives(p, 2 * n - 2);
  Scalar det_n = detform::phi_derivative_det(p, n);
  check_denominator(det_n, "efp_hom: det of the derivative matrix");
  MultiSeries g = hom_tail_jet(p, n, r, s);

  std::vector<Real> fact(n, Real(prec));
  for (int k = 0; k < n; ++k) fact[k] = Real::factorial(static_cast<unsigned long>(k), prec);

  // generalized Laplace over the s rightmost (operator) columns: pick the row
  // subset carrying the operator entries, pair with the complementary minor
  int col_sum = 0;
  for (int c = n - s; c < n; ++c) col_sum += c;

  Scalar det_total = Scalar::zero(prec);
  std::vector<int> rows(s);  // chosen rows, increasing, 0-based
  for (int j = 0; j < s; ++j) rows[j] = j;
  while (true) {
    int row_sum = 0;
    for (int i : rows) row_sum += i;

    // operator block: det over permutations, paired with jet coefficients of g
    Scalar op = Scalar::zero(prec);
    std::vector<int> perm(s);
    for (int j = 0; j < s; ++j) perm[j] = j;
    do {
      int inv = 0;
      for (int j = 0; j < s; ++j)
        for (int k = j + 1; k < s; ++k)
          if (perm[j] > perm[k]) ++inv;
      std::vector<int> e(s);
      Real f = Real::of_int(1, prec);
      for (int c = 0; c < s; ++c) {
        e[c] = rows[perm[c]];
        f *= fact[e[c]];
      }
      Scalar t = g.coeff(e) * Scalar(f);
      op += (inv % 2) ? -t : t;
    } while (std::next_permutation(perm.begin(), perm.end()));

    Scalar num_minor = Scalar::one(prec);
    if (s < n) {
      ScalarMatrix minor(n - s, n - s, prec);
      int mr = 0;
      for (int i = 0; i < n; ++i) {
        if (std::find(rows.begin(), rows.end(), i) != rows.end()) continue;
        for (int k = 0; k < n - s; ++k) minor.at(mr, k) = d[i + k];
        ++mr;
      }
      num_minor = determinant(minor);
    }
    Scalar t = op * num_minor;
    det_total += ((row_sum + col_sum) % 2) ? -t : t;

    // next s-combination of {0..n-1}
    int j = s - 1;
    while (j >= 0 && rows[j] == n - s + j) --j;
    if (j < 0) break;
    ++rows[j];
    for (int k = j + 1; k < s; ++k) rows[k] = rows[k - 1] + 1;
  }

  Real pf = Real::of_int(1, prec);
  for (int j = 1; j <= s; ++j) pf *= fact[n - j];
  Scalar denom = p.a().pow_int(static_cast<long>(r) * s) *
                 p.b().pow_int(static_cast<long>(n - r) * s) * det_n;
  Scalar result = Scalar(pf) * det_total / denom;
  return (s % 2) ? -result : result;
}

}  // namespace sixv::efp
