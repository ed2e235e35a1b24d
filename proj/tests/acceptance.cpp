// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "sixv/contour.hpp"
#include "sixv/detform.hpp"
#include "sixv/efp.hpp"
#include "sixv/oracle.hpp"
#include "sixv/orthopoly.hpp"
#include "sixv/qism.hpp"
#include "sixv/quadrature.hpp"
#include "sixv/runner.hpp"
#include "sixv/validate.hpp"

using namespace sixv;

namespace {

Precision P = Precision::digits(128);
int failures = 0;

void report(int id, const char* desc, bool pass, const std::string& detail) {
  std::printf("%s criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", id, desc,
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

Real rmax(const Real& a, const Real& b) { return a > b ? a : b; }

std::string dev_str(const Real& d) { return "max dev " + d.str(3); }

HomParams ice_point() {
  Real pi = Real::pi(P);
  return {Scalar(pi / Real::of_int(2, P)), Scalar(pi / Real::of_int(6, P))};
}

InhomParams hom_as_inhom(const HomParams& p, int n) {
  InhomParams ip{{}, {}, p.eta};
  for (int i = 0; i < n; ++i) {
    ip.lambdas.push_back(p.lambda);
    ip.nus.push_back(Scalar::zero(P));
  }
  return ip;
}

void criterion_1() {
  auto t0 = std::chrono::steady_clock::now();
  validate::Rng rng(1001);
  Real m(P);
  for (int n = 1; n <= 5; ++n)
    for (int t = 0; t < 20; ++t) {
      InhomParams ip = rng.inhom(n, P);
      Scalar zb = oracle::brute_z(ip);
      m = rmax(m, rel_dev(zb, detform::z_ik_inhom(ip)));
      m = rmax(m, rel_dev(zb, qism::z_qism(ip)));
    }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool pass = m < Real::pow10(-90, P) && secs < 120.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, ", %.1f s", secs);
  report(1, "partition function cross-agreement, N = 1..5", pass, dev_str(m) + buf);
}

void criterion_2() {
  validate::Rng rng(1002);
  Real m(P);
  for (int n = 1; n <= 5; ++n)
    for (int t = 0; t < 10; ++t) {
      InhomParams ip = rng.inhom(n, P);
      for (int r = 1; r <= n; ++r)
        for (int s = 1; s <= r; ++s) {
          Scalar fb = oracle::brute_efp(ip, r, s);
          m = rmax(m, rel_dev(fb, efp::efp_inhom(ip, r, s)));
          m = rmax(m, rel_dev(fb, qism::efp_qism(ip, r, s)));
        }
    }
  report(2, "emptiness probability cross-agreement, inhomogeneous", m < Real::pow10(-80, P),
         dev_str(m));
}

void criterion_3() {
  validate::Rng rng(1003);
  std::vector<HomParams> points{ice_point(), rng.hom(P), rng.hom(P)};
  Real m(P), m3(P);
  for (const HomParams& p : points)
    for (int n = 1; n <= 6; ++n)
      for (int s = 1; s <= std::min(n, 3); ++s)
        for (int r = s; r <= n; ++r) {
          Scalar ref = efp::efp_hom(p, n, r, s);
          m = rmax(m, rel_dev(ref, contour::efp_mir1(p, n, r, s)));
          m = rmax(m, rel_dev(ref, contour::efp_mir2(p, n, r, s)));
          if (s <= 2 && n <= 5) m3 = rmax(m3, rel_dev(ref, contour::efp_mir3(p, n, r, s)));
        }
  bool pass = m < Real::pow10(-60, P) && m3 < Real::pow10(-50, P);
  report(3, "homogeneous method chain, N <= 6, s <= 3", pass,
         dev_str(m) + ", third representation " + m3.str(3));
}

void criterion_4() {
  HomParams ice = ice_point();
  Real m(P);
  for (int n = 1; n <= 5; ++n) {
    Scalar count = Scalar::of_int(oracle::config_count(n), P);
    Scalar ratio = detform::z_hom(ice, n) / ice.a().pow_int(static_cast<long>(n) * n);
    m = rmax(m, rel_dev(ratio, count));
  }
  report(4, "symmetric point counts 1, 2, 7, 42, 429", m < Real::pow10(-90, P), dev_str(m));
}

void criterion_5() {
  Real pi = Real::pi(P);
  HomParams ff{Scalar(pi / Real::of_int(2, P)), Scalar(pi / Real::of_int(4, P))};
  Real m(P);
  for (int n = 1; n <= 6; ++n) m = rmax(m, rel_dev(detform::z_hom(ff, n), Scalar::one(P)));
  report(5, "free fermion point normalization, N = 1..6", m < Real::pow10(-90, P),
         dev_str(m));
}

void criterion_6() {
  HomParams ice = ice_point();
  std::vector<Scalar> expect{Scalar::of_int(2, P) / Scalar::of_int(7, P),
                             Scalar::of_int(5, P) / Scalar::of_int(7, P), Scalar::one(P)};
  auto h = ortho::boundary_H(ice, 3);
  Real m(P);
  Scalar acc = Scalar::zero(P);
  for (int r = 1; r <= 3; ++r) {
    acc += h[r - 1];
    m = rmax(m, rel_dev(expect[r - 1], efp::efp_hom(ice, 3, r, 1)));
    m = rmax(m, rel_dev(expect[r - 1], acc));
    m = rmax(m, rel_dev(expect[r - 1], contour::efp_mir1(ice, 3, r, 1)));
  }
  report(6, "boundary polarization 2/7, 5/7, 1 at N = 3", m < Real::pow10(-80, P),
         dev_str(m));
}

void criterion_7(const std::map<std::string, validate::CheckResult>& by_anchor) {
  Real m(P);
  bool pass = true;
  for (const char* a : {"z-recurrence", "efp-recurrence"}) {
    auto it = by_anchor.find(a);
    if (it == by_anchor.end() || !it->second.pass) pass = false;
    if (it != by_anchor.end()) m = rmax(m, it->second.max_dev);
  }
  report(7, "size recurrences for Z and the emptiness probability", pass, dev_str(m));
}

void criterion_8() {
  Real m = validate::yang_baxter_dev(P, 3, 20, 2024);
  m = rmax(m, validate::yang_baxter_dev(P, 4, 20, 2025));
  report(8, "exchange algebra suite, N = 3, 4, 20 random states", m < Real::pow10(-90, P),
         dev_str(m));
}

void criterion_9(const std::map<std::string, validate::CheckResult>& by_anchor) {
  Real m(P);
  bool pass = true;
  for (const char* a : {"hankel", "bordered-det", "residue-claim", "binomial-transfer",
                        "h-norm", "hns-reduction"}) {
    auto it = by_anchor.find(a);
    if (it == by_anchor.end() || !it->second.pass) pass = false;
    if (it != by_anchor.end()) m = rmax(m, it->second.max_dev);
  }
  report(9, "orthogonal polynomial identity suite", pass, dev_str(m));
}

void criterion_10() {
  Precision hi = Precision::digits(200);
  HomParams hp{Scalar::of(1.31, hi), Scalar::of(0.47, hi)};
  Scalar delta = Scalar(Real::pow10(-20, hi));
  validate::Rng rng(1010);
  Real m(hi);
  for (int n = 1; n <= 5; ++n) {
    int s = std::min(n, 2);
    std::vector<Scalar> xis;
    for (int j = 0; j < s; ++j)
      xis.push_back(Scalar::of(rng.uniform(-0.12, 0.12), hi));
    auto near_hom = [&](bool with_xis) {
      InhomParams ip{{}, {}, hp.eta};
      for (int i = 1; i <= n; ++i) {
        Scalar l = hp.lambda + delta * Scalar::of_int(i, hi);
        if (with_xis && i <= s) l += xis[i - 1];
        ip.lambdas.push_back(l);
        ip.nus.push_back(delta * Scalar::of_int(i + n, hi));
      }
      return detform::z_ik_inhom(ip);
    };
    Scalar ratio = near_hom(true) / near_hom(false);
    m = rmax(m, rel_dev(ortho::bare_z(hp, n, xis), ratio));
  }
  report(10, "bare partition function against near-homogeneous determinant",
         m < Real::pow10(-10, hi), dev_str(m));
}

void criterion_11(const std::map<std::string, validate::CheckResult>& by_anchor) {
  Real m(P);
  bool pass = true;
  for (const char* a : {"laplace-phi", "laplace-moments"}) {
    auto it = by_anchor.find(a);
    if (it == by_anchor.end() || !it->second.pass) pass = false;
    if (it != by_anchor.end()) m = rmax(m, it->second.max_dev);
  }
  report(11, "integral representation grounds phi and the moments", pass, dev_str(m));
}

void criterion_12() {
  validate::Rng rng(1012);
  HomParams hp = rng.hom(P);
  Real m(P);
  for (int s = 2; s <= 3; ++s) {
    std::vector<Scalar> z;
    for (int j = 0; j < s; ++j) z.push_back(rng.scalar(-0.4, 0.4, P));
    m = rmax(m, rel_dev(contour::asym_pair_lhs(hp, z), contour::asym_pair_rhs(hp, z)));
  }
  report(12, "pair product antisymmetrization, s = 2, 3", m < Real::pow10(-60, P),
         dev_str(m));
}

void criterion_13() {
  HomParams ice = ice_point();
  std::string a = run::sweep_csv(ice, 4, 3, "hom", 2);
  std::string b = run::sweep_csv(ice, 4, 3, "hom", 2);
  report(13, "sweep determinism, byte-identical csv", !a.empty() && a == b,
         a == b ? "identical bytes" : "outputs differ");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();

  auto checks = validate::run_checks(P, "");
  std::map<std::string, validate::CheckResult> by_anchor;
  for (const auto& c : checks) by_anchor.emplace(c.anchor, c);

  criterion_7(by_anchor);
  criterion_8();
  criterion_9(by_anchor);
  criterion_10();
  criterion_11(by_anchor);
  criterion_12();
  criterion_13();

  if (failures) std::printf("%d criterion failure(s)\n", failures);
  return failures ? 1 : 0;
}
