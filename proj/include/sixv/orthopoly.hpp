#ifndef SIXV_ORTHOPOLY_HPP
#define SIXV_ORTHOPOLY_HPP

#include <vector>

#include "sixv/linalg.hpp"
#include "sixv/model.hpp"

namespace sixv::ortho {

// Univariate polynomial over Scalar, coefficients in ascending degree.
struct Poly {
  std::vector<Scalar> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Precision prec() const { return coeffs.at(0).prec(); }

  Scalar eval(const Scalar& x) const {
    Scalar acc = Scalar::zero(prec());
    for (int i = degree(); i >= 0; --i) acc = acc * x + coeffs[i];
    return acc;
  }
  MultiSeries eval_series(const MultiSeries& x) const {
    MultiSeries acc(x.num_vars(), x.orders(), prec());
    for (int i = degree(); i >= 0; --i)
      acc = acc * x + MultiSeries::constant(coeffs[i], x.orders());
    return acc;
  }
};

Poly poly_mul(const Poly& a, const Poly& b);

// Moments c_n (n-th derivative of phi at lambda), Hankel determinants
// D_n = det[c_{i+j}], and norms h_n = D_{n+1}/D_n.
struct MomentTable {
  HomParams params;
  int n_max;
  std::vector<Scalar> c;           // c_0 .. c_{n_max}
  std::vector<Scalar> hankel;      // D_0 = 1, D_1, ..., D_{n_max/2 + 1}
  std::vector<Scalar> norms;       // h_0 .. h_{n_max/2}
};

MomentTable moments(const HomParams& p, int n_max);

// Monic orthogonal polynomial P_n for the moment functional, via the Hankel
// linear system.
Poly monic_P(const MomentTable& table, int n);

// K_n = n! phi^{n+1} / h_n * P_n.
Poly K_poly(const MomentTable& table, int n);

// First-row c-vertex position distribution H_N^{(r)}, r = 1..N (r counted
// from the right).
std::vector<Scalar> boundary_H(const HomParams& p, int n);

// Generating polynomial h_N(z) = sum_r H_N^{(r)} z^{r-1}.
Poly gen_h(const HomParams& p, int n);

// V_N^{(p)} = K_{N-1}(d/deps) omega(eps)^{N-p} at eps = 0, p = 1..N.
std::vector<Scalar> v_vector(const HomParams& p, int n);

// h_{N,s}(u_1..u_s) as an explicit polynomial in s variables: the determinant
// with entries u_j^{s-k} (u_j-1)^{k-1} h_{N-s+k}(u_j) divided exactly by the
// Vandermonde product prod_{j<k}(u_k - u_j).
MultiSeries hns_poly(const HomParams& p, int n, int s);

// h_{N,s} at scalar points; well-separated points go through the direct
// determinant, near-coincident ones through the exact polynomial.
Scalar h_Ns(const HomParams& p, int n, int s, const std::vector<Scalar>& points);

// Bare partition function ratio Z_N(lambda+xi_1.., lambda..) / Z_N(lambda..),
// with the inhomogeneities listed in xis and the remaining rows homogeneous.
Scalar bare_z(const HomParams& p, int n, const std::vector<Scalar>& xis);

// EFP from the s x s operator determinant over K polynomials acting on the
// omega/rho product jet.
Scalar efp_ortho(const HomParams& p, int n, int r, int s, int s_cap = 3);

}  // namespace sixv::ortho

#endif
