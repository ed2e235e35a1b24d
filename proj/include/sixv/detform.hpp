#ifndef SIXV_DETFORM_HPP
#define SIXV_DETFORM_HPP

#include "sixv/linalg.hpp"
#include "sixv/model.hpp"

namespace sixv::detform {

struct IkResult {
  Scalar value;
  int matrix_dim;
  bool conditioning_warning = false;  // near-coincident parameters
};

// The N x N matrix with entries phi(lambda_alpha, nu_k).
ScalarMatrix phi_matrix(const InhomParams& p);

// Partition function of the inhomogeneous model in closed determinant form.
IkResult z_ik(const InhomParams& p);
Scalar z_ik_inhom(const InhomParams& p);

// Homogeneous partition function via the derivative matrix of phi.
Scalar z_hom(const HomParams& p, int n);

// Derivative values d^j phi(lambda) for j = 0..order, from a jet of phi.
std::vector<Scalar> phi_derivatives(const HomParams& p, int order);

// det of the derivative matrix, entries d^(alpha+k-2) phi(lambda).
Scalar phi_derivative_det(const HomParams& p, int n);

}  // namespace sixv::detform

#endif
