#ifndef SIXV_CONTOUR_HPP
#define SIXV_CONTOUR_HPP

#include <vector>

#include "sixv/model.hpp"
#include "sixv/scalar.hpp"

namespace sixv::contour {

// Source of the N-argument partition-function jet used by efp_mir3.
enum class ZnSource { oracle, bare };

// The three contour-integral representations, evaluated exactly as the
// coefficient of prod z_j^{-1} (residue at the origin): every non-monomial
// factor is a Taylor series with nonzero constant term, so the residue is a
// single coefficient read-off in the truncated series ring.
// taylor_order < 0 selects the default per-variable order (r+s+2 for the
// first two, r+2 for the third).
Scalar efp_mir1(const HomParams& p, int n, int r, int s, int taylor_order = -1);
Scalar efp_mir2(const HomParams& p, int n, int r, int s, int taylor_order = -1);
Scalar efp_mir3(const HomParams& p, int n, int r, int s,
                ZnSource source = ZnSource::oracle, int taylor_order = -1);

inline constexpr int kMirSCap = 3;
inline constexpr int kMir3SCap = 2;

// The s x s determinant inside the first representation, at scalar points.
Scalar mir1_det_value(const HomParams& p, int n, int r, int s,
                      const std::vector<Scalar>& z);

// Both sides of the antisymmetrization identity for the pair product
// prod_{j<k} (zt_j-1)(z_k-1)/(zt_j z_k - 1), at scalar points.
Scalar asym_pair_lhs(const HomParams& p, const std::vector<Scalar>& z);
Scalar asym_pair_rhs(const HomParams& p, const std::vector<Scalar>& z);

}  // namespace sixv::contour

#endif
