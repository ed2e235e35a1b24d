#include "doctest.h"
#include "sixv/contour.hpp"
#include "sixv/detform.hpp"
#include "sixv/efp.hpp"
#include "sixv/oracle.hpp"
#include "sixv/orthopoly.hpp"
#include "sixv/qism.hpp"
#include "sixv/quadrature.hpp"

using namespace sixv;

static Precision P = Precision::digits(96);

static bool close(const Scalar& x, const Scalar& y, int e = -70) {
  return rel_dev(x, y) < Real::pow10(e, P);
}

static HomParams generic() { return {Scalar::of(1.31, P), Scalar::of(0.47, P)}; }

static InhomParams hom_as_inhom(const HomParams& p, int n) {
  InhomParams ip{{}, {}, p.eta};
  for (int i = 0; i < n; ++i) {
    ip.lambdas.push_back(p.lambda);
    ip.nus.push_back(Scalar::zero(P));
  }
  return ip;
}

TEST_CASE("inhomogeneous emptiness sum against enumeration") {
  InhomParams ip{{Scalar::of(1.11, P), Scalar::of(1.23, P), Scalar::of(1.37, P),
                  Scalar::of(1.52, P)},
                 {Scalar::of(0.03, P), Scalar::of(-0.09, P), Scalar::of(0.15, P),
                  Scalar::of(0.07, P)},
                 Scalar::of(0.51, P)};
  for (int r = 1; r <= 4; ++r)
    for (int s = 1; s <= r; ++s)
      CHECK(close(efp::efp_inhom(ip, r, s), oracle::brute_efp(ip, r, s)));
  CHECK(close(efp::efp_inhom_s2(ip, 3), efp::efp_inhom(ip, 3, 2)));
  CHECK(close(efp::efp_inhom_s3(ip, 4), efp::efp_inhom(ip, 4, 3)));
  CHECK(efp::efp_inhom(ip, 2, 3).abs() < Real::pow10(-80, P));
}

TEST_CASE("homogeneous methods agree with each other and the oracle") {
  HomParams p = generic();
  int n = 4;
  InhomParams ip = hom_as_inhom(p, n);
  for (int s = 1; s <= 3; ++s)
    for (int r = s; r <= n; ++r) {
      Scalar ref = oracle::brute_efp(ip, r, s);
      CHECK(close(efp::efp_hom(p, n, r, s), ref));
      CHECK(close(ortho::efp_ortho(p, n, r, s), ref));
      CHECK(close(contour::efp_mir1(p, n, r, s), ref));
      CHECK(close(contour::efp_mir2(p, n, r, s), ref));
      if (s <= 2) CHECK(close(contour::efp_mir3(p, n, r, s), ref));
    }
}

TEST_CASE("boundary distribution accumulates the one-row emptiness values") {
  HomParams p = generic();
  int n = 5;
  auto h = ortho::boundary_H(p, n);
  Scalar acc = Scalar::zero(P);
  for (int r = 1; r <= n; ++r) {
    acc += h[r - 1];
    CHECK(close(acc, efp::efp_hom(p, n, r, 1)));
  }
  CHECK(close(acc, Scalar::one(P)));
}

TEST_CASE("generating polynomial through the nested determinant") {
  HomParams p = generic();
  std::vector<Scalar> u{Scalar::of(0.4, P), Scalar::of(1.6, P)};
  ortho::Poly h5 = ortho::gen_h(p, 5);
  std::vector<Scalar> u1{u[0], Scalar::one(P)};
  CHECK(close(ortho::h_Ns(p, 5, 2, u1), h5.eval(u[0])));
  MultiSeries poly = ortho::hns_poly(p, 5, 2);
  CHECK(close(poly.eval(u), ortho::h_Ns(p, 5, 2, u)));
}

TEST_CASE("moment table feeds consistent orthogonal polynomials") {
  HomParams p = generic();
  auto table = ortho::moments(p, 12);
  // orthogonality: sum_m c_{m+k} P_n[m] = 0 for k < n
  for (int n = 1; n <= 4; ++n) {
    ortho::Poly pn = ortho::monic_P(table, n);
    for (int k = 0; k < n; ++k) {
      Scalar acc = Scalar::zero(P);
      for (int m = 0; m <= n; ++m) acc += table.c[m + k] * pn.coeffs[m];
      CHECK(acc.abs() < Real::pow10(-70, P) * table.c[0].abs());
    }
  }
}

TEST_CASE("quadrature grounds the moment functional") {
  HomParams p = generic();
  Real q0 = quad::laplace_moment(p, 0);
  CHECK(rel_dev(Scalar(q0), phi_hom(p)) < Real::pow10(-15, P));
  auto table = ortho::moments(p, 2);
  Real q2 = quad::laplace_moment(p, 2);
  CHECK(rel_dev(Scalar(q2), table.c[2]) < Real::pow10(-12, P));
}

TEST_CASE("partition function methods at the free fermion point") {
  Real pi = Real::pi(P);
  HomParams ff{Scalar(pi / Real::of_int(2, P)), Scalar(pi / Real::of_int(4, P))};
  for (int n = 1; n <= 4; ++n) CHECK(close(detform::z_hom(ff, n), Scalar::one(P)));
}
