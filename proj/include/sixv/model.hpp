#ifndef SIXV_MODEL_HPP
#define SIXV_MODEL_HPP

#include <string>
#include <vector>

#include "sixv/scalar.hpp"
#include "sixv/series.hpp"

namespace sixv {

// Homogeneous model parameters: spectral parameter lambda and crossing
// parameter eta (radians, complex-capable).  In the disordered regime both
// are real with 0 < eta < pi/2 and eta < lambda < pi - eta.
struct HomParams {
  Scalar lambda;
  Scalar eta;

  Precision prec() const { return max_prec(lambda.prec(), eta.prec()); }
  Scalar a() const { return Scalar::sin(lambda + eta); }
  Scalar b() const { return Scalar::sin(lambda - eta); }
  Scalar c() const { return Scalar::sin(eta + eta); }
};

// Inhomogeneous parameters: N spectral parameters lambda_alpha, N parameters
// nu_k (each set pairwise distinct), and eta.
struct InhomParams {
  std::vector<Scalar> lambdas;
  std::vector<Scalar> nus;
  Scalar eta;

  int n() const { return static_cast<int>(lambdas.size()); }
  Precision prec() const { return eta.prec(); }
  void validate() const;

  HomParams hom_at(int alpha, int k) const { return {lambdas[alpha] - nus[k], eta}; }
};

struct RegimeInfo {
  Scalar delta;
  Scalar t_ratio;
  std::string regime_label;  // disordered | ferroelectric | antiferroelectric | free-fermion boundary | boundary
};

// Modulus below which a denominator counts as a true pole rather than
// cancellation noise.
Real singularity_threshold(Precision p);
void check_denominator(const Scalar& den, const char* what);

// Boltzmann weights a = sin(lambda - nu + eta), b = sin(lambda - nu - eta),
// c = sin(2 eta).
Scalar weight_a(const Scalar& lambda, const Scalar& nu, const Scalar& eta);
Scalar weight_b(const Scalar& lambda, const Scalar& nu, const Scalar& eta);
Scalar weight_c(const Scalar& eta);

// phi = c / (a b); poles at lambda - nu = +-eta (mod pi).
Scalar phi(const Scalar& lambda, const Scalar& nu, const Scalar& eta);
Scalar phi_hom(const HomParams& p);

// Jet of phi(lambda + eps) in formal variable var_index.
MultiSeries phi_jet(const HomParams& p, int var_index, const std::vector<int>& orders);

// d(l, l') = sin(l - l'); e(l, l') = sin(l - l' + 2 eta);
// f(l', l) = sin(l - l' + 2 eta) / sin(l - l');
// g_rmat(l', l) = sin(2 eta) / sin(l - l').
Scalar d_fn(const Scalar& l, const Scalar& lp);
Scalar e_fn(const Scalar& l, const Scalar& lp, const Scalar& eta);
Scalar f_fn(const Scalar& lp, const Scalar& l, const Scalar& eta);
Scalar g_rmat(const Scalar& lp, const Scalar& l, const Scalar& eta);

// The four functions of eps entering the orthogonal-polynomial machinery,
// with lambda and eta as parameters:
//   omega       = [a/b] sin(eps) / sin(eps - 2 eta)
//   omega_t     = [b/a] sin(eps) / sin(eps + 2 eta)
//   rho         = [b/c] sin(eps - 2 eta) / sin(eps + lambda - eta)
//   rho_t       = [a/c] sin(eps + 2 eta) / sin(eps + lambda + eta)
// satisfying rho = 1/(omega - 1) and rho_t = 1/(1 - omega_t).
struct OmegaFamily {
  Scalar omega, omega_t, rho, rho_t;
};
OmegaFamily omega_family(const Scalar& eps, const HomParams& p);
Scalar omega(const Scalar& eps, const HomParams& p);

// Jets of the same functions in formal variable var_index (expanded at eps=0).
MultiSeries omega_jet(const HomParams& p, int var_index, const std::vector<int>& orders);
MultiSeries omega_t_jet(const HomParams& p, int var_index, const std::vector<int>& orders);
MultiSeries rho_jet(const HomParams& p, int var_index, const std::vector<int>& orders);
MultiSeries rho_t_jet(const HomParams& p, int var_index, const std::vector<int>& orders);

// gamma(xi) = [a(lambda)/b(lambda)] [b(lambda+xi)/a(lambda+xi)];
// equals omega(-lambda + eta - xi).
Scalar gamma_fn(const Scalar& xi, const HomParams& p);
MultiSeries gamma_jet(const HomParams& p, int var_index, const std::vector<int>& orders);

// z_tilde = b^2 z / ((a^2 + b^2 - c^2) z - a^2).
Scalar z_tilde(const Scalar& z, const HomParams& p);

Scalar anisotropy_delta(const HomParams& p);
RegimeInfo classify_regime(const HomParams& p);

}  // namespace sixv

#endif
