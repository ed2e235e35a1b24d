#include "sixv/oracle.hpp"

#include <array>

namespace sixv::oracle {

namespace {

void check_cap(int n) {
  if (n < 1 || n > kSizeCap) throw numeric_error("oracle: N outside [1, 7]");
}

// Allowed types for a given (top, right) input pair; at most two options,
// visited in fixed order so the enumeration order is deterministic.
struct Options {
  std::array<std::uint8_t, 2> type;
  int count;
};

Options options_for(bool top_up, bool right_up) {
  if (top_up && right_up) return {{A1, 0}, 1};
  if (!top_up && !right_up) return {{A2, 0}, 1};
  if (top_up) return {{B1, C2}, 2};  // (+,-)
  return {{B2, C1}, 2};              // (-,+)
}

// bottom spin and left spin produced by each type
bool bottom_of(std::uint8_t t) { return t == A1 || t == B1 || t == C1; }
bool left_of(std::uint8_t t) { return t == A1 || t == B2 || t == C2; }

struct Enumerator {
  int n;
  const std::function<void(const DwbcConfig&)>* visit;
  DwbcConfig cfg;
  std::vector<std::uint8_t> vert;  // vertical edge spins entering the current row

  void run() {
    cfg.size = n;
    cfg.types.assign(static_cast<std::size_t>(n) * n, 0);
    vert.assign(n, 0);  // top boundary: all arrows incoming, i.e. pointing down
    row(1);
  }

  void row(int r) {
    cell(r, 1, true);  // right boundary: outgoing, arrow points right
  }

  void cell(int r, int c, bool h_up) {
    Options opt = options_for(vert[c - 1] != 0, h_up);
    for (int i = 0; i < opt.count; ++i) {
      std::uint8_t t = opt.type[i];
      std::uint8_t saved = vert[c - 1];
      cfg.types[static_cast<std::size_t>(r - 1) * n + (c - 1)] = t;
      vert[c - 1] = bottom_of(t) ? 1 : 0;
      bool left_up = left_of(t);
      if (c == n) {
        // left boundary: outgoing, arrow must point left
        if (!left_up) {
          if (r == n) {
            bool ok = true;
            for (int j = 0; j < n; ++j)
              if (!vert[j]) { ok = false; break; }  // bottom boundary: arrows up
            if (ok) (*visit)(cfg);
          } else {
            row(r + 1);
          }
        }
      } else {
        cell(r, c + 1, left_up);
      }
      vert[c - 1] = saved;
    }
  }
};

}  // namespace

void enumerate(int n, const std::function<void(const DwbcConfig&)>& visit) {
  check_cap(n);
  Enumerator e;
  e.n = n;
  e.visit = &visit;
  e.run();
}

std::vector<DwbcConfig> enumerate_all(int n) {
  std::vector<DwbcConfig> out;
  enumerate(n, [&](const DwbcConfig& c) { out.push_back(c); });
  return out;
}

long config_count(int n) {
  long count = 0;
  enumerate(n, [&](const DwbcConfig&) { ++count; });
  return count;
}

namespace {

// weight table w[kind][(col-1)*n + (row-1)], kind 0=a, 1=b, 2=c
std::array<std::vector<Scalar>, 3> weight_table(const InhomParams& p) {
  int n = p.n();
  std::array<std::vector<Scalar>, 3> w;
  for (auto& v : w) v.reserve(static_cast<std::size_t>(n) * n);
  for (int col = 0; col < n; ++col)
    for (int row = 0; row < n; ++row) {
      w[0].push_back(weight_a(p.lambdas[col], p.nus[row], p.eta));
      w[1].push_back(weight_b(p.lambdas[col], p.nus[row], p.eta));
      w[2].push_back(weight_c(p.eta));
    }
  return w;
}

Scalar table_weight(const DwbcConfig& cfg, const std::array<std::vector<Scalar>, 3>& w) {
  int n = cfg.size;
  Scalar acc = Scalar::one(w[0][0].prec());
  for (int row = 1; row <= n; ++row)
    for (int col = 1; col <= n; ++col)
      acc *= w[weight_kind(cfg.type_at(row, col))][static_cast<std::size_t>(col - 1) * n + (row - 1)];
  return acc;
}

}  // namespace

Scalar config_weight(const DwbcConfig& cfg, const InhomParams& p) {
  if (cfg.size != p.n()) throw numeric_error("config_weight: size mismatch");
  return table_weight(cfg, weight_table(p));
}

Scalar brute_z(const InhomParams& p) {
  check_cap(p.n());
  auto w = weight_table(p);
  Scalar acc = Scalar::zero(p.prec());
  enumerate(p.n(), [&](const DwbcConfig& cfg) { acc += table_weight(cfg, w); });
  return acc;
}

Scalar brute_efp(const InhomParams& p, int r, int s) {
  int n = p.n();
  check_cap(n);
  if (r < 1 || r > n || s < 1 || s > n) throw numeric_error("brute_efp: index out of range");
  auto w = weight_table(p);
  Scalar num = Scalar::zero(p.prec());
  Scalar den = Scalar::zero(p.prec());
  enumerate(n, [&](const DwbcConfig& cfg) {
    Scalar wt = table_weight(cfg, w);
    bool sel = true;
    for (int row = 1; row <= s && sel; ++row)
      sel = cfg.left_edge_points_left(row, r);
    if (sel) num += wt;
    den += wt;
  });
  return num / den;
}

std::vector<Scalar> brute_first_row_c(const HomParams& p, int n) {
  check_cap(n);
  InhomParams ip{{}, {}, p.eta};
  Scalar nu0 = Scalar::zero(p.prec());
  for (int i = 0; i < n; ++i) {
    ip.lambdas.push_back(p.lambda);
    ip.nus.push_back(nu0);
  }
  auto w = weight_table(ip);
  std::vector<Scalar> h(n, Scalar::zero(p.prec()));
  Scalar z = Scalar::zero(p.prec());
  enumerate(n, [&](const DwbcConfig& cfg) {
    Scalar wt = table_weight(cfg, w);
    z += wt;
    for (int col = 1; col <= n; ++col) {
      std::uint8_t t = cfg.type_at(1, col);
      if (t == C1 || t == C2) {
        h[col - 1] += wt;
        break;
      }
    }
  });
  Scalar zi = z.inverse();
  for (auto& v : h) v *= zi;
  return h;
}

MultiSeries brute_z_jet(int n, const JetWeightFn& weight) {
  check_cap(n);
  const MultiSeries& probe = weight(2, 1, 1);
  MultiSeries acc(probe.num_vars(), probe.orders(), probe.prec());
  enumerate(n, [&](const DwbcConfig& cfg) {
    // per-column products first: columns sharing one jet variable stay cheap
    MultiSeries total = MultiSeries::constant(Scalar::one(probe.prec()), probe.orders());
    for (int col = 1; col <= n; ++col) {
      MultiSeries colprod = weight(weight_kind(cfg.type_at(1, col)), col, 1);
      for (int row = 2; row <= n; ++row)
        colprod *= weight(weight_kind(cfg.type_at(row, col)), col, row);
      total *= colprod;
    }
    acc += total;
  });
  return acc;
}

}  // namespace sixv::oracle
