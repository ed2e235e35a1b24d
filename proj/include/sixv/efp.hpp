#ifndef SIXV_EFP_HPP
#define SIXV_EFP_HPP

#include "sixv/detform.hpp"
#include "sixv/model.hpp"

namespace sixv::efp {

// g_r(lambda) = prod_{a>r} d(l_a, l) prod_{a<=r} e(l_a, l) / prod_k b(l, nu_k).
Scalar g_r_fn(const Scalar& lambda, const InhomParams& p, int r);

// EFP of the inhomogeneous model as the s-fold multiple sum over pairwise
// distinct alpha-tuples; returns 0 when s > r.
Scalar efp_inhom(const InhomParams& p, int r, int s);

// Independent hard-coded specializations for s = 2, 3 (kept separate from the
// generic multiple sum so the two routes can be compared on random inputs).
Scalar efp_inhom_s2(const InhomParams& p, int r);
Scalar efp_inhom_s3(const InhomParams& p, int r);

// EFP of the homogeneous model via the derivative determinant: the operator
// columns are expanded by generalized Laplace over row subsets and paired
// with jet coefficients of the trailing product.
inline constexpr int kHomSCap = 3;
Scalar efp_hom(const HomParams& p, int n, int r, int s, int s_cap = kHomSCap);

// The trailing product G(eps_1..eps_s) of the homogeneous representation,
// as a jet with per-variable order n-1.
MultiSeries hom_tail_jet(const HomParams& p, int n, int r, int s);

}  // namespace sixv::efp

#endif
