#include "doctest.h"
#include "sixv/linalg.hpp"
#include "sixv/model.hpp"
#include "sixv/scalar.hpp"
#include "sixv/series.hpp"

using namespace sixv;

static Precision P = Precision::digits(64);

static bool tiny(const Real& x, int e = -50) { return x < Real::pow10(e, P); }

TEST_CASE("real arithmetic basics") {
  Real pi = Real::pi(P);
  CHECK(tiny(Real::abs(Real::sin(pi))));
  CHECK(Real::factorial(5, P) == Real::of_int(120, P));
  CHECK(Real::pow10(-3, P) == Real::of_str("0.001", P));
  CHECK(Real::of_str("2.5e2", P) == Real::of_int(250, P));
}

TEST_CASE("scalar complex arithmetic") {
  Scalar z{Real::of_int(3, P), Real::of_int(4, P)};
  CHECK(z.abs() == Real::of_int(5, P));
  Scalar w = z * z.inverse();
  CHECK(tiny(rel_dev(w, Scalar::one(P))));
  CHECK(tiny(rel_dev(z.pow_int(-2) * z.pow_int(2), Scalar::one(P))));
}

TEST_CASE("series jets reproduce sine expansions") {
  Scalar c = Scalar::of(0.3, P);
  MultiSeries j = sine_jet(c, 0, {6});
  // coefficients of sin(c + x): sin c, cos c, -sin c / 2, ...
  CHECK(tiny(rel_dev(j.coeff({0}), Scalar::sin(c))));
  CHECK(tiny(rel_dev(j.coeff({1}), Scalar::cos(c))));
  CHECK(tiny(rel_dev(j.coeff({2}), -Scalar::sin(c) * Scalar::of(0.5, P))));
  Scalar x = Scalar::of(0.01, P);
  CHECK(rel_dev(j.eval({x}), Scalar::sin(c + x)) < Real::pow10(-13, P));
}

TEST_CASE("series reciprocal and power") {
  MultiSeries a = sine_jet(Scalar::of(0.7, P), 0, {5, 5});
  MultiSeries b = sine_jet(Scalar::of(1.1, P), 1, {5, 5});
  MultiSeries prod = a * b;
  MultiSeries check = prod * prod.reciprocal();
  MultiSeries one = MultiSeries::constant(Scalar::one(P), {5, 5});
  CHECK(tiny((check - one).max_coeff_abs()));
  CHECK(tiny((a.pow_int(3) - a * a * a).max_coeff_abs()));
}

TEST_CASE("determinant and linear solve") {
  ScalarMatrix m(3, 3, P);
  int vals[3][3] = {{2, 1, 1}, {1, 3, 2}, {1, 0, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = Scalar::of_int(vals[i][j], P);
  CHECK(tiny(rel_dev(determinant(m), Scalar::of_int(-1, P))));
  std::vector<Scalar> rhs{Scalar::of_int(1, P), Scalar::of_int(2, P), Scalar::of_int(3, P)};
  auto x = solve_linear(m, rhs);
  for (int i = 0; i < 3; ++i) {
    Scalar acc = Scalar::zero(P);
    for (int j = 0; j < 3; ++j) acc += m.at(i, j) * x[j];
    CHECK(tiny(abs_dev(acc, rhs[i])));
  }
}

TEST_CASE("weights at the symmetric point") {
  Real pi = Real::pi(P);
  HomParams ice{Scalar(pi / Real::of_int(2, P)), Scalar(pi / Real::of_int(6, P))};
  Scalar root3_half = Scalar(Real::sqrt(Real::of_int(3, P)) / Real::of_int(2, P));
  CHECK(tiny(rel_dev(ice.a(), root3_half)));
  CHECK(tiny(rel_dev(ice.b(), root3_half)));
  CHECK(tiny(rel_dev(ice.c(), root3_half)));
  CHECK(tiny(rel_dev(anisotropy_delta(ice), Scalar::of(0.5, P))));
  CHECK(classify_regime(ice).regime_label == "disordered");
}

TEST_CASE("omega family members satisfy their relations") {
  HomParams p{Scalar::of(1.4, P), Scalar::of(0.5, P)};
  Scalar eps = Scalar::of(0.2, P);
  OmegaFamily f = omega_family(eps, p);
  CHECK(tiny(rel_dev(f.rho, (f.omega - Scalar::one(P)).inverse())));
  CHECK(tiny(rel_dev(f.rho_t, (Scalar::one(P) - f.omega_t).inverse())));
  Scalar xi = Scalar::of(0.1, P);
  CHECK(tiny(rel_dev(gamma_fn(xi, p), omega(-p.lambda + p.eta - xi, p))));
}
