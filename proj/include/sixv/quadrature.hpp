#ifndef SIXV_QUADRATURE_HPP
#define SIXV_QUADRATURE_HPP

#include <functional>

#include "sixv/model.hpp"
#include "sixv/scalar.hpp"

namespace sixv::quad {

// Tanh-sinh quadrature on [a, b]; the step is halved until two successive
// levels agree to tol.
Real tanh_sinh(const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
               Precision prec, const Real& tol);

// n-th moment of the weight e^{x(lambda - pi/2)} sinh(eta x)/sinh(pi x/2)
// over the real axis, truncated to [-X, X] with X chosen for a 1e-20 tail
// bound.  n = 0 recovers phi(lambda).  Disordered regime, real parameters.
Real laplace_moment(const HomParams& p, int n);

}  // namespace sixv::quad

#endif
