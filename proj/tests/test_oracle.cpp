#include "doctest.h"
#include "sixv/detform.hpp"
#include "sixv/oracle.hpp"
#include "sixv/qism.hpp"

using namespace sixv;

static Precision P = Precision::digits(96);

static Scalar frac(long a, long b) { return Scalar::of_int(a, P) / Scalar::of_int(b, P); }

static bool close(const Scalar& x, const Scalar& y, int e = -80) {
  return rel_dev(x, y) < Real::pow10(e, P);
}

TEST_CASE("configuration counts match the known sequence") {
  const long expect[] = {1, 2, 7, 42, 429, 7436, 218348};
  for (int n = 1; n <= 7; ++n) CHECK(oracle::config_count(n) == expect[n - 1]);
}

TEST_CASE("symmetric point partition function is a weight power times a count") {
  Real pi = Real::pi(P);
  HomParams ice{Scalar(pi / Real::of_int(2, P)), Scalar(pi / Real::of_int(6, P))};
  InhomParams ip{{}, {}, ice.eta};
  for (int i = 0; i < 3; ++i) {
    ip.lambdas.push_back(ice.lambda);
    ip.nus.push_back(Scalar::zero(P));
  }
  Scalar z = oracle::brute_z(ip);
  CHECK(close(z, Scalar::of_int(7, P) * ice.a().pow_int(9)));
}

TEST_CASE("refined counting at the symmetric point") {
  Real pi = Real::pi(P);
  HomParams ice{Scalar(pi / Real::of_int(2, P)), Scalar(pi / Real::of_int(6, P))};
  InhomParams ip{{}, {}, ice.eta};
  for (int i = 0; i < 3; ++i) {
    ip.lambdas.push_back(ice.lambda);
    ip.nus.push_back(Scalar::zero(P));
  }
  CHECK(close(oracle::brute_efp(ip, 1, 1), frac(2, 7)));
  CHECK(close(oracle::brute_efp(ip, 2, 1), frac(5, 7)));
  CHECK(close(oracle::brute_efp(ip, 3, 1), Scalar::one(P)));
  auto h = oracle::brute_first_row_c(ice, 3);
  CHECK(close(h[0], frac(2, 7)));
  CHECK(close(h[1], frac(3, 7)));
  CHECK(close(h[2], frac(2, 7)));
}

TEST_CASE("enumeration agrees with the determinant and the transfer operators") {
  InhomParams ip{{Scalar::of(1.12, P), Scalar::of(1.31, P), Scalar::of(1.55, P)},
                 {Scalar::of(0.04, P), Scalar::of(-0.08, P), Scalar::of(0.11, P)},
                 Scalar::of(0.52, P)};
  Scalar zb = oracle::brute_z(ip);
  CHECK(close(zb, detform::z_ik_inhom(ip)));
  CHECK(close(zb, qism::z_qism(ip)));
  for (int r = 1; r <= 3; ++r)
    for (int s = 1; s <= r; ++s)
      CHECK(close(oracle::brute_efp(ip, r, s), qism::efp_qism(ip, r, s)));
}

TEST_CASE("size cap is enforced") {
  CHECK_THROWS_AS(oracle::config_count(8), numeric_error);
}
