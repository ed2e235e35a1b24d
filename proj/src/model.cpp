#include "sixv/model.hpp"

namespace sixv {

Real singularity_threshold(Precision p) {
  return Real::pow10(-(p.decimal_digits() - 10), p);
}

void check_denominator(const Scalar& den, const char* what) {
  if (den.abs() < singularity_threshold(den.prec()))
    throw singularity_error(std::string("singularity: ") + what);
}

void InhomParams::validate() const {
  if (lambdas.empty() || lambdas.size() != nus.size())
    throw numeric_error("InhomParams: lambda/nu sequences must be nonempty and equal length");
  Real thr = singularity_threshold(prec());
  for (std::size_t i = 0; i < lambdas.size(); ++i)
    for (std::size_t j = i + 1; j < lambdas.size(); ++j) {
      if ((lambdas[i] - lambdas[j]).abs() < thr)
        throw singularity_error("coincident spectral parameters lambda");
      if ((nus[i] - nus[j]).abs() < thr)
        throw singularity_error("coincident parameters nu");
    }
}

Scalar weight_a(const Scalar& lambda, const Scalar& nu, const Scalar& eta) {
  return Scalar::sin(lambda - nu + eta);
}
Scalar weight_b(const Scalar& lambda, const Scalar& nu, const Scalar& eta) {
  return Scalar::sin(lambda - nu - eta);
}
Scalar weight_c(const Scalar& eta) { return Scalar::sin(eta + eta); }

Scalar phi(const Scalar& lambda, const Scalar& nu, const Scalar& eta) {
  Scalar den = weight_a(lambda, nu, eta) * weight_b(lambda, nu, eta);
  check_denominator(den, "phi pole at lambda - nu = +-eta");
  return weight_c(eta) / den;
}

Scalar phi_hom(const HomParams& p) {
  Scalar den = p.a() * p.b();
  check_denominator(den, "phi pole");
  return p.c() / den;
}

MultiSeries phi_jet(const HomParams& p, int var_index, const std::vector<int>& orders) {
  MultiSeries den = sine_jet(p.lambda - p.eta, var_index, orders) *
                    sine_jet(p.lambda + p.eta, var_index, orders);
  check_denominator(den.constant_term(), "phi pole");
  return den.reciprocal() * p.c();
}

Scalar d_fn(const Scalar& l, const Scalar& lp) { return Scalar::sin(l - lp); }

Scalar e_fn(const Scalar& l, const Scalar& lp, const Scalar& eta) {
  return Scalar::sin(l - lp + eta + eta);
}

Scalar f_fn(const Scalar& lp, const Scalar& l, const Scalar& eta) {
  Scalar den = Scalar::sin(l - lp);
  check_denominator(den, "f at coincident arguments");
  return Scalar::sin(l - lp + eta + eta) / den;
}

Scalar g_rmat(const Scalar& lp, const Scalar& l, const Scalar& eta) {
  Scalar den = Scalar::sin(l - lp);
  check_denominator(den, "g at coincident arguments");
  return weight_c(eta) / den;
}

OmegaFamily omega_family(const Scalar& eps, const HomParams& p) {
  Scalar two_eta = p.eta + p.eta;
  Scalar a = p.a(), b = p.b(), c = p.c();
  Scalar d1 = Scalar::sin(eps - two_eta);
  Scalar d2 = Scalar::sin(eps + two_eta);
  Scalar d3 = Scalar::sin(eps + p.lambda - p.eta);
  Scalar d4 = Scalar::sin(eps + p.lambda + p.eta);
  check_denominator(d1, "omega pole");
  check_denominator(d2, "omega_t pole");
  check_denominator(d3, "rho pole");
  check_denominator(d4, "rho_t pole");
  check_denominator(b, "weight b vanishes");
  check_denominator(a, "weight a vanishes");
  check_denominator(c, "weight c vanishes");
  Scalar s = Scalar::sin(eps);
  return {(a / b) * (s / d1), (b / a) * (s / d2), (b / c) * (d1 / d3), (a / c) * (d2 / d4)};
}

Scalar omega(const Scalar& eps, const HomParams& p) {
  Scalar two_eta = p.eta + p.eta;
  Scalar d1 = Scalar::sin(eps - two_eta);
  check_denominator(d1, "omega pole");
  check_denominator(p.b(), "weight b vanishes");
  return (p.a() / p.b()) * (Scalar::sin(eps) / d1);
}

MultiSeries omega_jet(const HomParams& p, int var_index, const std::vector<int>& orders) {
  MultiSeries den = sine_jet(-(p.eta + p.eta), var_index, orders);
  check_denominator(den.constant_term(), "omega pole");
  return sine_jet(Scalar::zero(p.prec()), var_index, orders) * den.reciprocal() * (p.a() / p.b());
}

MultiSeries omega_t_jet(const HomParams& p, int var_index, const std::vector<int>& orders) {
  MultiSeries den = sine_jet(p.eta + p.eta, var_index, orders);
  check_denominator(den.constant_term(), "omega_t pole");
  return sine_jet(Scalar::zero(p.prec()), var_index, orders) * den.reciprocal() * (p.b() / p.a());
}

MultiSeries rho_jet(const HomParams& p, int var_index, const std::vector<int>& orders) {
  MultiSeries den = sine_jet(p.lambda - p.eta, var_index, orders);
  check_denominator(den.constant_term(), "rho pole");
  return sine_jet(-(p.eta + p.eta), var_index, orders) * den.reciprocal() * (p.b() / p.c());
}

MultiSeries rho_t_jet(const HomParams& p, int var_index, const std::vector<int>& orders) {
  MultiSeries den = sine_jet(p.lambda + p.eta, var_index, orders);
  check_denominator(den.constant_term(), "rho_t pole");
  return sine_jet(p.eta + p.eta, var_index, orders) * den.reciprocal() * (p.a() / p.c());
}

Scalar gamma_fn(const Scalar& xi, const HomParams& p) {
  Scalar ax = Scalar::sin(p.lambda + xi + p.eta);
  check_denominator(ax, "gamma pole at a(lambda+xi) = 0");
  check_denominator(p.b(), "weight b vanishes");
  return (p.a() / p.b()) * (Scalar::sin(p.lambda + xi - p.eta) / ax);
}

MultiSeries gamma_jet(const HomParams& p, int var_index, const std::vector<int>& orders) {
  MultiSeries den = sine_jet(p.lambda + p.eta, var_index, orders);
  check_denominator(den.constant_term(), "gamma pole");
  return sine_jet(p.lambda - p.eta, var_index, orders) * den.reciprocal() * (p.a() / p.b());
}

Scalar z_tilde(const Scalar& z, const HomParams& p) {
  Scalar a2 = p.a() * p.a(), b2 = p.b() * p.b(), c2 = p.c() * p.c();
  Scalar den = (a2 + b2 - c2) * z - a2;
  check_denominator(den, "z_tilde pole");
  return b2 * z / den;
}

Scalar anisotropy_delta(const HomParams& p) {
  Scalar a = p.a(), b = p.b(), c = p.c();
  Scalar den = (a * b) + (a * b);
  check_denominator(den, "anisotropy undefined at a b = 0");
  return (a * a + b * b - c * c) / den;
}

RegimeInfo classify_regime(const HomParams& p) {
  Precision prec = p.prec();
  Scalar delta = anisotropy_delta(p);
  check_denominator(p.a(), "t undefined at a = 0");
  Scalar t = p.b() / p.a();
  Real boundary_tol = Real::pow10(-20, prec);
  Real re = delta.re();
  Real one = Real::of_int(1, prec);
  std::string label;
  if (Real::abs(re) < boundary_tol) {
    label = "free-fermion boundary";
  } else if (Real::abs(Real::abs(re) - one) < boundary_tol) {
    label = "boundary";
  } else if (Real::abs(re) < one) {
    label = "disordered";
  } else if (re > one) {
    label = "ferroelectric";
  } else {
    label = "antiferroelectric";
  }
  return {delta, t, label};
}

}  // namespace sixv
