#include "sixv/validate.hpp"

#include <algorithm>
#include <functional>
#include <vector>

#include "sixv/contour.hpp"
#include "sixv/detform.hpp"
#include "sixv/efp.hpp"
#include "sixv/oracle.hpp"
#include "sixv/orthopoly.hpp"
#include "sixv/qism.hpp"
#include "sixv/quadrature.hpp"

namespace sixv::validate {

InhomParams Rng::inhom(int n, Precision p) {
  double eta = uniform(0.35, 1.0);
  double pi = 3.141592653589793;
  InhomParams out{{}, {}, Scalar::of(eta, p)};
  std::vector<double> ls, ns;
  auto pick = [&](std::vector<double>& v, double lo, double hi) {
    for (;;) {
      double x = uniform(lo, hi);
      bool ok = true;
      for (double y : v)
        if (std::abs(x - y) < 2e-3) ok = false;
      if (ok) {
        v.push_back(x);
        return x;
      }
    }
  };
  for (int i = 0; i < n; ++i)
    out.lambdas.push_back(Scalar::of(pick(ls, eta + 0.15, pi - eta - 0.15), p));
  for (int i = 0; i < n; ++i) out.nus.push_back(Scalar::of(pick(ns, -0.1, 0.1), p));
  return out;
}

HomParams Rng::hom(Precision p) {
  double eta = uniform(0.35, 1.0);
  double pi = 3.141592653589793;
  double lam = uniform(eta + 0.15, pi - eta - 0.15);
  return {Scalar::of(lam, p), Scalar::of(eta, p)};
}

namespace {

struct Ctx {
  Precision prec;
  std::string filter;
  std::vector<CheckResult>* out;

  void run(const char* name, const char* anchor, const char* category, int tol_exp,
           const std::function<Real(Precision)>& body) {
    if (!filter.empty() && std::string(category).find(filter) == std::string::npos &&
        std::string(name).find(filter) == std::string::npos)
      return;
    CheckResult r{name, anchor, category, Real(prec), Real::pow10(-tol_exp, prec), false};
    try {
      r.max_dev = body(prec);
      r.pass = !(r.max_dev > r.tol);
    } catch (const std::exception&) {
      r.max_dev = Real::pow10(300, prec);
      r.pass = false;
    }
    out->push_back(r);
  }
};

Real rmax(const Real& a, const Real& b) { return a > b ? a : b; }

Real state_dev(const qism::QuantumState& x, const qism::QuantumState& y) {
  Precision p = x.amplitudes.at(0).prec();
  Real m(p), scale = Real::of_int(1, p);
  for (std::size_t i = 0; i < x.amplitudes.size(); ++i) {
    m = rmax(m, (x.amplitudes[i] - y.amplitudes[i]).abs());
    scale = rmax(scale, x.amplitudes[i].abs());
  }
  return m / scale;
}

qism::QuantumState random_state(int n, Rng& rng, Precision p) {
  auto s = qism::QuantumState::zero(n, p);
  for (auto& a : s.amplitudes) a = rng.scalar(-1.0, 1.0, p);
  return s;
}

qism::QuantumState scaled(const qism::QuantumState& s, const Scalar& c) {
  auto out = s;
  for (auto& a : out.amplitudes) a *= c;
  return out;
}

qism::QuantumState sum_states(const qism::QuantumState& x, const qism::QuantumState& y) {
  auto out = x;
  for (std::size_t i = 0; i < out.amplitudes.size(); ++i) out.amplitudes[i] += y.amplitudes[i];
  return out;
}

qism::Entry entry_of(int i, int j) { return static_cast<qism::Entry>(2 * i + j); }

// drop lambda_alpha (1-based) and nu_1
InhomParams reduced(const InhomParams& p, int alpha) {
  InhomParams q{{}, {}, p.eta};
  for (int b = 1; b <= p.n(); ++b)
    if (b != alpha) q.lambdas.push_back(p.lambdas[b - 1]);
  for (int k = 2; k <= p.n(); ++k) q.nus.push_back(p.nus[k - 1]);
  return q;
}

// c * sum_alpha over 1..top of the reduction coefficient times term(alpha):
// prod_{beta<=top, beta!=alpha} b(l_b, nu_1) f(l_a, l_b) * prod_{k>=2} a(l_a, nu_k)
Scalar reduction_sum(const InhomParams& p, int top,
                     const std::function<Scalar(int)>& term) {
  Precision prec = p.prec();
  Scalar acc = Scalar::zero(prec);
  for (int alpha = 1; alpha <= top; ++alpha) {
    Scalar coef = Scalar::one(prec);
    for (int beta = 1; beta <= top; ++beta) {
      if (beta == alpha) continue;
      coef *= weight_b(p.lambdas[beta - 1], p.nus[0], p.eta);
      coef *= f_fn(p.lambdas[alpha - 1], p.lambdas[beta - 1], p.eta);
    }
    for (int k = 2; k <= p.n(); ++k)
      coef *= weight_a(p.lambdas[alpha - 1], p.nus[k - 1], p.eta);
    acc += coef * term(alpha);
  }
  return acc * weight_c(p.eta);
}

Real binom(int n, int k, Precision p) {
  if (k < 0 || k > n) return Real(p);
  return Real::factorial(n, p) / (Real::factorial(k, p) * Real::factorial(n - k, p));
}

Scalar apply_K_jet(const ortho::Poly& k, const MultiSeries& w) {
  Precision p = k.prec();
  Scalar acc = Scalar::zero(p);
  int top = std::min(k.degree(), w.orders().at(0));
  for (int j = 0; j <= top; ++j)
    acc += k.coeffs[j] * Scalar(Real::factorial(j, p)) * w.coeff({j});
  return acc;
}

void model_checks(Ctx& c) {
  c.run("weight and regime identities", "weights", "model", 100, [](Precision p) {
    Rng rng(11);
    Real m(p);
    for (int t = 0; t < 3; ++t) {
      HomParams hp = rng.hom(p);
      Scalar delta = anisotropy_delta(hp);
      m = rmax(m, rel_dev(delta, Scalar::cos(hp.eta + hp.eta)));
      RegimeInfo info = classify_regime(hp);
      m = rmax(m, rel_dev(info.t_ratio, hp.b() / hp.a()));
      if (info.regime_label != "disordered") m = rmax(m, Real::of_int(1, p));
    }
    return m;
  });

  c.run("omega family relations", "omega", "model", 100, [](Precision p) {
    Rng rng(12);
    Real m(p);
    HomParams hp = rng.hom(p);
    for (int t = 0; t < 3; ++t) {
      Scalar eps = rng.scalar(0.05, 0.4, p);
      OmegaFamily f = omega_family(eps, hp);
      m = rmax(m, rel_dev(f.rho, (f.omega - Scalar::one(p)).inverse()));
      m = rmax(m, rel_dev(f.rho_t, (Scalar::one(p) - f.omega_t).inverse()));
      Scalar xi = rng.scalar(-0.3, 0.3, p);
      m = rmax(m, rel_dev(gamma_fn(xi, hp),
                          omega(Scalar::zero(p) - hp.lambda + hp.eta - xi, hp)));
    }
    std::vector<int> ord{6};
    m = rmax(m, rel_dev(omega_jet(hp, 0, ord).eval({Scalar::zero(p)}),
                        omega(Scalar::zero(p), hp)));
    return m;
  });

  c.run("phi jet versus shifted evaluation", "phi-jet", "model", 90, [](Precision p) {
    Rng rng(13);
    HomParams hp = rng.hom(p);
    std::vector<int> ord{40};
    MultiSeries jet = phi_jet(hp, 0, ord);
    Scalar delta = Scalar(Real::pow10(-8, p));
    Scalar direct = phi_hom({hp.lambda + delta, hp.eta});
    return rel_dev(jet.eval({delta}), direct);
  });
}

void oracle_checks(Ctx& c) {
  c.run("configuration counts", "counts", "oracle", 100, [](Precision p) {
    const long expect[] = {1, 2, 7, 42, 429, 7436};
    Real m(p);
    for (int n = 1; n <= 6; ++n)
      m = rmax(m, Real::of_int(std::labs(oracle::config_count(n) - expect[n - 1]), p));
    return m;
  });

  c.run("boundary distributions normalize", "first-row", "oracle", 95, [](Precision p) {
    Rng rng(14);
    HomParams hp = rng.hom(p);
    auto h = oracle::brute_first_row_c(hp, 5);
    Scalar sum = Scalar::zero(p);
    for (auto& v : h) sum += v;
    Real m = rel_dev(sum, Scalar::one(p));
    InhomParams ip = rng.inhom(4, p);
    for (int s = 1; s <= 4; ++s)
      m = rmax(m, rel_dev(oracle::brute_efp(ip, 4, s), Scalar::one(p)));
    return m;
  });
}

void determinant_checks(Ctx& c) {
  c.run("determinant reduction along the first column", "det-reduction", "determinants", 80,
        [](Precision p) {
          Rng rng(21);
          InhomParams ip = rng.inhom(4, p);
          int n = ip.n();
          ScalarMatrix mat = detform::phi_matrix(ip);
          Scalar lhs = determinant(mat);
          Scalar sum = Scalar::zero(p);
          for (int alpha = 1; alpha <= n; ++alpha) {
            Scalar g = efp::g_r_fn(ip.lambdas[alpha - 1], ip, n);
            Scalar minor = determinant(mat.without({alpha - 1}, {0}));
            Scalar term = g * minor;
            if ((alpha - 1) % 2) term = -term;
            sum += term;
          }
          Scalar pre = Scalar::one(p);
          for (int k = 2; k <= n; ++k) pre *= d_fn(ip.nus[0], ip.nus[k - 1]);
          for (int a = 1; a <= n; ++a)
            pre = pre / weight_a(ip.lambdas[a - 1], ip.nus[0], ip.eta);
          return rel_dev(lhs, pre * sum);
        });

  c.run("pole expansion of the boundary function", "g-poles", "determinants", 80,
        [](Precision p) {
          Rng rng(22);
          Real m(p);
          InhomParams ip = rng.inhom(4, p);
          int n = ip.n();
          for (int alpha = 1; alpha <= n; ++alpha) {
            Scalar lhs = efp::g_r_fn(ip.lambdas[alpha - 1], ip, n);
            Scalar sum = Scalar::zero(p);
            for (int k = 1; k <= n; ++k) {
              Scalar term = phi(ip.lambdas[alpha - 1], ip.nus[k - 1], ip.eta);
              for (int b = 1; b <= n; ++b)
                term *= weight_a(ip.lambdas[b - 1], ip.nus[k - 1], ip.eta);
              for (int j = 1; j <= n; ++j)
                if (j != k) term = term / d_fn(ip.nus[k - 1], ip.nus[j - 1]);
              sum += term;
            }
            m = rmax(m, rel_dev(lhs, sum));
          }
          return m;
        });

  c.run("homogeneous limit of the partition function", "hom-limit-z", "determinants", 10,
        [](Precision) {
          Precision hi = Precision::digits(200);
          HomParams hp{Scalar::of(1.31, hi), Scalar::of(0.47, hi)};
          Scalar delta = Scalar(Real::pow10(-20, hi));
          int n = 4;
          InhomParams ip{{}, {}, hp.eta};
          for (int i = 1; i <= n; ++i) {
            ip.lambdas.push_back(hp.lambda + delta * Scalar::of_int(i, hi));
            ip.nus.push_back(delta * Scalar::of_int(i + n, hi));
          }
          return rel_dev(detform::z_ik_inhom(ip), detform::z_hom(hp, n));
        });

  c.run("free fermion normalization", "ff-z", "determinants", 90, [](Precision p) {
    Real pi = Real::pi(p);
    HomParams ff{Scalar(pi / Real::of_int(2, p)), Scalar(pi / Real::of_int(4, p))};
    Real m(p);
    for (int n = 1; n <= 5; ++n)
      m = rmax(m, rel_dev(detform::z_hom(ff, n), Scalar::one(p)));
    return m;
  });
}

void recurrence_checks(Ctx& c) {
  c.run("partition function recurrence", "z-recurrence", "recurrences", 80, [](Precision p) {
    Rng rng(31);
    Real m(p);
    for (int n = 3; n <= 5; ++n) {
      InhomParams ip = rng.inhom(n, p);
      Scalar rhs = reduction_sum(ip, n, [&](int alpha) {
        InhomParams q = reduced(ip, alpha);
        return q.n() == 0 ? Scalar::one(p) : detform::z_ik_inhom(q);
      });
      m = rmax(m, rel_dev(detform::z_ik_inhom(ip), rhs));
    }
    return m;
  });

  c.run("emptiness recurrence", "efp-recurrence", "recurrences", 80, [](Precision p) {
    Rng rng(32);
    Real m(p);
    const int rs[][2] = {{2, 1}, {3, 2}, {3, 3}};
    for (auto& pr : rs) {
      int r = pr[0], s = pr[1], n = 4;
      InhomParams ip = rng.inhom(n, p);
      Scalar lhs = detform::z_ik_inhom(ip) * efp::efp_inhom(ip, r, s);
      Scalar rhs = reduction_sum(ip, r, [&](int alpha) {
        InhomParams q = reduced(ip, alpha);
        Scalar zq = detform::z_ik_inhom(q);
        if (s == 1) return zq;
        return zq * efp::efp_inhom(q, r - 1, s - 1);
      });
      for (int beta = r + 1; beta <= n; ++beta)
        rhs *= weight_a(ip.lambdas[beta - 1], ip.nus[0], ip.eta);
      m = rmax(m, rel_dev(lhs, rhs));
    }
    return m;
  });
}

Real rtt_relations_dev(const InhomParams& ip, const Scalar& l1, const Scalar& l2, Rng& rng,
                       int n_states) {
  Precision p = ip.prec();
  int n = ip.n();
  Scalar eta = ip.eta;
  Scalar fv = f_fn(l2, l1, eta);   // sin(l1-l2+2eta)/sin(l1-l2)
  Scalar gv = g_rmat(l2, l1, eta);
  Scalar zero = Scalar::zero(p);
  Scalar one = Scalar::one(p);
  {
    // R[(i k), (m n)] indexed 2i+k, 2m+n
    Scalar R[4][4] = {{fv, zero, zero, zero},
                      {zero, gv, one, zero},
                      {zero, one, gv, zero},
                      {zero, zero, zero, fv}};
    Real m(p);
    for (int t = 0; t < n_states; ++t) {
      auto psi = random_state(n, rng, p);
      // cache T(l)_{ij} psi
      qism::QuantumState t1[2][2] = {
          {qism::apply_entry(entry_of(0, 0), psi, l1, ip.nus, eta),
           qism::apply_entry(entry_of(0, 1), psi, l1, ip.nus, eta)},
          {qism::apply_entry(entry_of(1, 0), psi, l1, ip.nus, eta),
           qism::apply_entry(entry_of(1, 1), psi, l1, ip.nus, eta)}};
      qism::QuantumState t2[2][2] = {
          {qism::apply_entry(entry_of(0, 0), psi, l2, ip.nus, eta),
           qism::apply_entry(entry_of(0, 1), psi, l2, ip.nus, eta)},
          {qism::apply_entry(entry_of(1, 0), psi, l2, ip.nus, eta),
           qism::apply_entry(entry_of(1, 1), psi, l2, ip.nus, eta)}};
      for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k)
          for (int j = 0; j < 2; ++j)
            for (int l = 0; l < 2; ++l) {
              auto lhs = qism::QuantumState::zero(n, p);
              auto rhs = qism::QuantumState::zero(n, p);
              for (int mm = 0; mm < 2; ++mm)
                for (int nn = 0; nn < 2; ++nn) {
                  const Scalar& rl = R[2 * i + k][2 * mm + nn];
                  if (!rl.is_zero())
                    lhs = sum_states(
                        lhs, scaled(qism::apply_entry(entry_of(mm, j), t2[nn][l],
                                                      l1, ip.nus, eta),
                                    rl));
                  const Scalar& rr = R[2 * mm + nn][2 * j + l];
                  if (!rr.is_zero())
                    rhs = sum_states(
                        rhs, scaled(qism::apply_entry(entry_of(i, mm), t1[k][nn],
                                                      l2, ip.nus, eta),
                                    rr));
                }
              m = rmax(m, state_dev(lhs, rhs));
            }
    }
    return m;
  }
}

Real bb_exchange_dev(const InhomParams& ip, const Scalar& l1, const Scalar& l2, Rng& rng,
                     int n_states) {
  Precision p = ip.prec();
  int n = ip.n();
  Real m(p);
  {
    for (int t = 0; t < n_states; ++t) {
      auto psi = random_state(n, rng, p);
      auto xy = qism::apply_B(qism::apply_B(psi, l2, ip.nus, ip.eta), l1, ip.nus, ip.eta);
      auto yx = qism::apply_B(qism::apply_B(psi, l1, ip.nus, ip.eta), l2, ip.nus, ip.eta);
      m = rmax(m, state_dev(xy, yx));
    }
    return m;
  }
}

Real ab_exchange_dev(const InhomParams& ip, const Scalar& l1, const Scalar& l2, Rng& rng,
                     int n_states) {
  Precision p = ip.prec();
  int n = ip.n();
  Scalar eta = ip.eta;
  Scalar f12 = f_fn(l1, l2, eta);   // f(l1, l2): sin(l2-l1+2eta)/sin(l2-l1)
  Scalar g21 = g_rmat(l2, l1, eta); // g(l2, l1): sin(2eta)/sin(l1-l2)
  Real m(p);
  {
    for (int t = 0; t < n_states; ++t) {
      auto psi = random_state(n, rng, p);
      auto lhs = qism::apply_entry(qism::Entry::A,
                                   qism::apply_B(psi, l2, ip.nus, eta), l1, ip.nus, eta);
      auto rhs = sum_states(
          scaled(qism::apply_B(qism::apply_entry(qism::Entry::A, psi, l1, ip.nus, eta),
                               l2, ip.nus, eta),
                 f12),
          scaled(qism::apply_B(qism::apply_entry(qism::Entry::A, psi, l2, ip.nus, eta),
                               l1, ip.nus, eta),
                 g21));
      m = rmax(m, state_dev(lhs, rhs));
    }
    return m;
  }
}

// creation string of the given length applied to a site-1-down state must
// leave the site-1-up block empty
Real triangular_dev(const InhomParams& ip, Rng& rng, int len) {
  Precision p = ip.prec();
  int n = ip.n();
  auto psi = random_state(n, rng, p);
  {
    for (std::size_t i = 0; i < psi.amplitudes.size(); ++i)
      if (!(i & 1)) psi.amplitudes[i] = Scalar::zero(p);  // site 1 forced down
    auto out = psi;
    for (int k = 1; k <= len; ++k)
      out = qism::apply_B(out, ip.lambdas[k - 1], ip.nus, ip.eta);
    Real m(p), scale = Real::of_int(1, p);
    for (std::size_t i = 0; i < out.amplitudes.size(); ++i) {
      if (!(i & 1)) m = rmax(m, out.amplitudes[i].abs());
      scale = rmax(scale, out.amplitudes[i].abs());
    }
    return m / scale;
  }
}

Real b_reduction_dev(const InhomParams& ip, int len_lo, int len_hi) {
  Precision p = ip.prec();
  int n = ip.n();
  Real m(p);
  {
          for (int len = len_lo; len <= len_hi; ++len) {
            auto psi = qism::QuantumState::all_up(n, p);
            for (int k = 1; k <= len; ++k)
              psi = qism::apply_B(psi, ip.lambdas[k - 1], ip.nus, ip.eta);
            // site-1-down block as a state on sites 2..N
            auto lhs = qism::QuantumState::zero(n - 1, p);
            for (std::size_t i = 0; i < lhs.amplitudes.size(); ++i)
              lhs.amplitudes[i] = psi.amplitudes[2 * i + 1];
            std::vector<Scalar> nus2(ip.nus.begin() + 1, ip.nus.end());
            auto rhs = qism::QuantumState::zero(n - 1, p);
            for (int alpha = 1; alpha <= len; ++alpha) {
              Scalar coef = weight_c(ip.eta);
              for (int beta = 1; beta <= len; ++beta) {
                if (beta == alpha) continue;
                coef *= weight_b(ip.lambdas[beta - 1], ip.nus[0], ip.eta);
                coef *= f_fn(ip.lambdas[alpha - 1], ip.lambdas[beta - 1], ip.eta);
              }
              for (int k = 2; k <= n; ++k)
                coef *= weight_a(ip.lambdas[alpha - 1], ip.nus[k - 1], ip.eta);
              auto term = qism::QuantumState::all_up(n - 1, p);
              for (int k = 1; k <= len; ++k)
                if (k != alpha)
                  term = qism::apply_B(term, ip.lambdas[k - 1], nus2, ip.eta);
              rhs = sum_states(rhs, scaled(term, coef));
            }
            m = rmax(m, state_dev(lhs, rhs));
          }
          return m;
  }
}

Real yang_baxter_suite_dev(Precision prec, int n, int n_states, std::uint64_t seed) {
  Rng rng(seed);
  InhomParams ip = rng.inhom(n, prec);
  Scalar l1 = rng.scalar(0.9, 1.3, prec);
  Scalar l2 = rng.scalar(1.5, 1.9, prec);
  Real m = rtt_relations_dev(ip, l1, l2, rng, n_states);
  m = rmax(m, bb_exchange_dev(ip, l1, l2, rng, n_states));
  m = rmax(m, ab_exchange_dev(ip, l1, l2, rng, n_states));
  for (int len = 2; len < n; ++len) m = rmax(m, triangular_dev(ip, rng, len));
  m = rmax(m, b_reduction_dev(ip, 2, n - 1));
  return m;
}

void qism_checks(Ctx& c) {
  c.run("monodromy exchange relations", "rtt", "qism", 90, [](Precision p) {
    Rng rng(41);
    InhomParams ip = rng.inhom(3, p);
    Scalar l1 = rng.scalar(0.9, 1.3, p);
    Scalar l2 = rng.scalar(1.5, 1.9, p);
    return rtt_relations_dev(ip, l1, l2, rng, 5);
  });
  c.run("creation operators commute", "bb", "qism", 90, [](Precision p) {
    Rng rng(42);
    InhomParams ip = rng.inhom(4, p);
    Scalar l1 = rng.scalar(0.9, 1.3, p);
    Scalar l2 = rng.scalar(1.5, 1.9, p);
    return bb_exchange_dev(ip, l1, l2, rng, 5);
  });
  c.run("diagonal past creation exchange", "ab", "qism", 90, [](Precision p) {
    Rng rng(43);
    InhomParams ip = rng.inhom(4, p);
    Scalar l1 = rng.scalar(0.9, 1.3, p);
    Scalar l2 = rng.scalar(1.5, 1.9, p);
    return ab_exchange_dev(ip, l1, l2, rng, 5);
  });
  c.run("creation string triangular block", "triangular", "qism", 90, [](Precision p) {
    Rng rng(44);
    InhomParams ip = rng.inhom(4, p);
    return triangular_dev(ip, rng, 3);
  });
  c.run("first site reduction of creation strings", "b-reduction", "qism", 90,
        [](Precision p) {
          Rng rng(45);
          InhomParams ip = rng.inhom(4, p);
          return b_reduction_dev(ip, 2, 3);
        });
}

void efp_checks(Ctx& c) {
  c.run("specialized low order sums", "efp-s23", "efp", 90, [](Precision p) {
    Rng rng(51);
    Real m(p);
    for (int n = 4; n <= 5; ++n) {
      InhomParams ip = rng.inhom(n, p);
      for (int r = 2; r <= n; ++r) {
        m = rmax(m, rel_dev(efp::efp_inhom_s2(ip, r), efp::efp_inhom(ip, r, 2)));
        if (r >= 3) m = rmax(m, rel_dev(efp::efp_inhom_s3(ip, r), efp::efp_inhom(ip, r, 3)));
      }
    }
    return m;
  });

  c.run("homogeneous limit of the emptiness probability", "hom-limit-efp", "efp", 8,
        [](Precision) {
          Precision hi = Precision::digits(300);
          HomParams hp{Scalar::of(1.31, hi), Scalar::of(0.47, hi)};
          Scalar delta = Scalar(Real::pow10(-12, hi));
          int n = 4;
          InhomParams ip{{}, {}, hp.eta};
          for (int i = 1; i <= n; ++i) {
            ip.lambdas.push_back(hp.lambda + delta * Scalar::of_int(i, hi));
            ip.nus.push_back(delta * Scalar::of_int(i + n, hi));
          }
          return rel_dev(efp::efp_inhom(ip, 2, 2), efp::efp_hom(hp, n, 2, 2));
        });

  c.run("saturated and empty regions", "efp-saturation", "efp", 80, [](Precision p) {
    Rng rng(52);
    HomParams hp = rng.hom(p);
    Real m(p);
    for (int s = 1; s <= 2; ++s)
      m = rmax(m, rel_dev(efp::efp_hom(hp, 4, 4, s), Scalar::one(p)));
    InhomParams ip = rng.inhom(4, p);
    m = rmax(m, efp::efp_inhom(ip, 2, 3).abs());
    return m;
  });
}

void orthopoly_checks(Ctx& c) {
  c.run("hankel determinant factorization", "hankel", "orthopoly", 80, [](Precision p) {
    Rng rng(61);
    Real m(p);
    Real pi = Real::pi(p);
    HomParams ice{Scalar(pi / Real::of_int(2, p)), Scalar(pi / Real::of_int(6, p))};
    for (const HomParams& hp : {rng.hom(p), ice}) {
      auto table = ortho::moments(hp, 16);
      Scalar prod = Scalar::one(p);
      for (int n = 1; n <= 8; ++n) {
        prod *= table.norms[n - 1];
        m = rmax(m, rel_dev(table.hankel[n], prod));
      }
    }
    return m;
  });

  c.run("bordered moment determinant", "bordered-det", "orthopoly", 80, [](Precision p) {
    Rng rng(62);
    HomParams hp = rng.hom(p);
    auto table = ortho::moments(hp, 16);
    int n = 5, k = 2;
    std::vector<Scalar> x{rng.scalar(0.2, 0.8, p), rng.scalar(1.2, 1.9, p)};
    ScalarMatrix mat(n, n, p);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n - k; ++j) mat.at(i, j) = table.c[i + j];
      for (int t = 0; t < k; ++t) mat.at(i, n - k + t) = x[t].pow_int(i);
    }
    ScalarMatrix pm(k, k, p);
    for (int i = 0; i < k; ++i) {
      ortho::Poly pol = ortho::monic_P(table, n - k + i);
      for (int t = 0; t < k; ++t) pm.at(i, t) = pol.eval(x[t]);
    }
    return rel_dev(determinant(mat), table.hankel[n - k] * determinant(pm));
  });

  c.run("residue form of the polynomial pairing", "residue-claim", "orthopoly", 80,
        [](Precision p) {
          Rng rng(63);
          HomParams hp = rng.hom(p);
          Real m(p);
          for (int n = 3; n <= 8; ++n) {
            auto table = ortho::moments(hp, 2 * n);
            ortho::Poly kpol = ortho::K_poly(table, n - 1);
            ortho::Poly h = ortho::gen_h(hp, n);
            // (z-1)^{n-1} h(z)
            ortho::Poly lin{{Scalar::of_int(-1, p), Scalar::one(p)}};
            ortho::Poly expand = h;
            for (int i = 0; i < n - 1; ++i) expand = ortho::poly_mul(expand, lin);
            std::vector<int> ord{n - 1};
            MultiSeries om = omega_jet(hp, 0, ord);
            for (int mdeg = 0; mdeg < n; ++mdeg) {
              Scalar lhs = apply_K_jet(kpol, om.pow_int(mdeg));
              Scalar rhs = expand.coeffs.at(n - 1 - mdeg);
              m = rmax(m, rel_dev(lhs, rhs));
            }
          }
          return m;
        });

  c.run("binomial transfer between boundary vectors", "binomial-transfer", "orthopoly", 80,
        [](Precision p) {
          Rng rng(64);
          HomParams hp = rng.hom(p);
          Real m(p);
          for (int n = 2; n <= 8; ++n) {
            auto h = ortho::boundary_H(hp, n);
            auto v = ortho::v_vector(hp, n);
            for (int q = 1; q <= n; ++q) {
              Scalar acc = Scalar::zero(p);
              for (int r = 1; r <= q; ++r) {
                Real b = binom(n - 1, q - r, p);
                if ((q - r) % 2) b = -b;
                acc += Scalar(b) * h[r - 1];
              }
              if ((n - 1) % 2) acc = -acc;
              m = rmax(m, rel_dev(v[q - 1], acc));
            }
            // same matrix as the (I - E)^{n-1} power, E the subdiagonal shift
            ScalarMatrix ie(n, n, p);
            for (int i = 0; i < n; ++i) {
              ie.at(i, i) = Scalar::one(p);
              if (i > 0) ie.at(i, i - 1) = Scalar::of_int(-1, p);
            }
            ScalarMatrix pw(n, n, p);
            for (int i = 0; i < n; ++i) pw.at(i, i) = Scalar::one(p);
            for (int i = 0; i < n - 1; ++i) pw = pw * ie;
            for (int i = 0; i < n; ++i)
              for (int j = 0; j <= i; ++j) {
                Real b = binom(n - 1, i - j, p);
                if ((i - j) % 2) b = -b;
                m = rmax(m, abs_dev(pw.at(i, j), Scalar(b)));
              }
          }
          return m;
        });

  c.run("generating polynomial normalization", "h-norm", "orthopoly", 90, [](Precision p) {
    Rng rng(65);
    HomParams hp = rng.hom(p);
    Real m(p);
    for (int n = 1; n <= 12; ++n) {
      Scalar sum = Scalar::zero(p);
      for (auto& v : ortho::boundary_H(hp, n)) sum += v;
      m = rmax(m, rel_dev(sum, Scalar::one(p)));
    }
    return m;
  });

  c.run("free fermion boundary polynomial", "ff-h", "orthopoly", 80, [](Precision p) {
    Real pi = Real::pi(p);
    HomParams ff{Scalar(pi / Real::of_int(2, p)), Scalar(pi / Real::of_int(4, p))};
    Real m(p);
    Scalar half = Scalar::of(0.5, p);
    for (int n = 2; n <= 5; ++n) {
      ortho::Poly h = ortho::gen_h(ff, n);
      for (int r = 0; r < n; ++r) {
        Scalar expect = Scalar(binom(n - 1, r, p)) * half.pow_int(n - 1);
        m = rmax(m, rel_dev(h.coeffs[r], expect));
      }
    }
    return m;
  });

  c.run("nested polynomial reduction", "hns-reduction", "orthopoly", 20, [](Precision p) {
    Rng rng(66);
    HomParams hp = rng.hom(p);
    Real m(p);
    for (int n = 4; n <= 8; n += 2)
      for (int s = 1; s <= 3; ++s) {
        std::vector<Scalar> u;
        for (int j = 0; j < s; ++j) u.push_back(rng.scalar(0.2, 2.0, p));
        auto u1 = u;
        u1.push_back(Scalar::one(p));
        m = rmax(m, rel_dev(ortho::h_Ns(hp, n, s + 1, u1), ortho::h_Ns(hp, n, s, u)));
        if (s >= 2) {
          auto ur = u;
          std::swap(ur[0], ur[1]);
          m = rmax(m, rel_dev(ortho::h_Ns(hp, n, s, ur), ortho::h_Ns(hp, n, s, u)));
        }
      }
    // exact-polynomial route against the direct determinant at separated points
    std::vector<Scalar> un{Scalar::of(0.3, p), Scalar::of(0.3 + 1e-6, p)};
    m = rmax(m, rel_dev(ortho::hns_poly(hp, 4, 2).eval(un), ortho::h_Ns(hp, 4, 2, un)));
    return m;
  });

  c.run("partially inhomogeneous ratio", "bare-z", "orthopoly", 80, [](Precision p) {
    Rng rng(67);
    HomParams hp = rng.hom(p);
    Real m(p);
    for (int s = 1; s <= 2; ++s) {
      std::vector<Scalar> xis;
      for (int j = 0; j < s; ++j) xis.push_back(rng.scalar(-0.12, 0.12, p));
      int n = 4;
      InhomParams ip{{}, {}, hp.eta};
      for (int i = 0; i < n; ++i) {
        ip.lambdas.push_back(i < s ? hp.lambda + xis[i] : hp.lambda);
        ip.nus.push_back(Scalar::zero(p));
      }
      Scalar ratio = oracle::brute_z(ip) / detform::z_hom(hp, n);
      m = rmax(m, rel_dev(ortho::bare_z(hp, n, xis), ratio));
    }
    return m;
  });
}

void quadrature_checks(Ctx& c) {
  c.run("integral representation of phi", "laplace-phi", "quadrature", 15, [](Precision p) {
    Rng rng(71);
    Real m(p);
    for (int t = 0; t < 5; ++t) {
      HomParams hp = rng.hom(p);
      Real q = quad::laplace_moment(hp, 0);
      m = rmax(m, rel_dev(Scalar(q), phi_hom(hp)));
    }
    return m;
  });

  c.run("moment integrals", "laplace-moments", "quadrature", 12, [](Precision p) {
    Rng rng(72);
    HomParams hp = rng.hom(p);
    auto table = ortho::moments(hp, 4);
    Real m(p);
    for (int n = 1; n <= 4; ++n)
      m = rmax(m, rel_dev(Scalar(quad::laplace_moment(hp, n)), table.c[n]));
    return m;
  });
}

void contour_checks(Ctx& c) {
  c.run("pair product antisymmetrization", "asym", "contour", 60, [](Precision p) {
    Rng rng(81);
    HomParams hp = rng.hom(p);
    Real m(p);
    for (int s = 2; s <= 3; ++s) {
      std::vector<Scalar> z;
      for (int j = 0; j < s; ++j) z.push_back(rng.scalar(-0.4, 0.4, p));
      m = rmax(m, rel_dev(contour::asym_pair_lhs(hp, z), contour::asym_pair_rhs(hp, z)));
    }
    return m;
  });

  c.run("determinant and nested polynomial correspondence", "mir-det", "contour", 80,
        [](Precision p) {
          Rng rng(82);
          HomParams hp = rng.hom(p);
          int n = 5, r = 3, s = 2;
          std::vector<Scalar> z{rng.scalar(0.3, 0.7, p), rng.scalar(1.3, 1.8, p)};
          Scalar lhs = contour::mir1_det_value(hp, n, r, s, z);
          Scalar rhs = ortho::h_Ns(hp, n, s, z);
          for (int j = 0; j < s; ++j)
            for (int k = j + 1; k < s; ++k) rhs *= z[k] - z[j];
          for (int j = 0; j < s; ++j)
            rhs *= z[j].pow_int(-r) * (z[j] - Scalar::one(p)).pow_int(-s);
          if ((s * (s - 1) / 2) % 2) rhs = -rhs;
          return rel_dev(lhs, rhs);
        });

  c.run("truncation order stability", "truncation", "contour", 80, [](Precision p) {
    Rng rng(83);
    HomParams hp = rng.hom(p);
    int n = 4, r = 2, s = 2;
    Real m(p);
    m = rmax(m, rel_dev(contour::efp_mir1(hp, n, r, s),
                        contour::efp_mir1(hp, n, r, s, 2 * (r + s + 2))));
    m = rmax(m, rel_dev(contour::efp_mir2(hp, n, r, s),
                        contour::efp_mir2(hp, n, r, s, 2 * (r + s + 2))));
    m = rmax(m, rel_dev(contour::efp_mir3(hp, n, r, s, contour::ZnSource::oracle),
                        contour::efp_mir3(hp, n, r, s, contour::ZnSource::oracle,
                                          2 * (r + 2))));
    return m;
  });

  c.run("integral representations agree", "mir-cross", "contour", 60, [](Precision p) {
    Rng rng(84);
    HomParams hp = rng.hom(p);
    int n = 4;
    Real m(p);
    const int rs[][2] = {{2, 2}, {3, 2}, {3, 1}};
    for (auto& pr : rs) {
      int r = pr[0], s = pr[1];
      Scalar ref = efp::efp_hom(hp, n, r, s);
      m = rmax(m, rel_dev(contour::efp_mir1(hp, n, r, s), ref));
      m = rmax(m, rel_dev(contour::efp_mir2(hp, n, r, s), ref));
      if (s <= 2) m = rmax(m, rel_dev(contour::efp_mir3(hp, n, r, s), ref));
    }
    return m;
  });
}

}  // namespace

Real yang_baxter_dev(Precision prec, int n, int n_states, std::uint64_t seed) {
  return yang_baxter_suite_dev(prec, n, n_states, seed);
}

std::vector<CheckResult> run_checks(Precision prec, const std::string& only) {
  std::vector<CheckResult> out;
  Ctx c{prec, only, &out};
  model_checks(c);
  oracle_checks(c);
  determinant_checks(c);
  recurrence_checks(c);
  qism_checks(c);
  efp_checks(c);
  orthopoly_checks(c);
  quadrature_checks(c);
  contour_checks(c);
  return out;
}

}  // namespace sixv::validate
