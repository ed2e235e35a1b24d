#include "sixv/qism.hpp"

namespace sixv::qism {

QuantumState QuantumState::zero(int n, Precision p) {
  if (n < 1 || n > kSiteCap) throw numeric_error("qism: N outside [1, 14]");
  QuantumState s;
  s.n_sites = n;
  s.amplitudes.assign(std::size_t{1} << n, Scalar::zero(p));
  return s;
}

QuantumState QuantumState::all_up(int n, Precision p) {
  QuantumState s = zero(n, p);
  s.amplitudes[0] = Scalar::one(p);
  return s;
}

QuantumState QuantumState::all_down(int n, Precision p) {
  QuantumState s = zero(n, p);
  s.amplitudes[(std::size_t{1} << n) - 1] = Scalar::one(p);
  return s;
}

QuantumState apply_entry(Entry entry, const QuantumState& state, const Scalar& lambda,
                         const std::vector<Scalar>& nus, const Scalar& eta) {
  const int n = state.n_sites;
  if (static_cast<int>(nus.size()) != n) throw numeric_error("apply_entry: nus size mismatch");
  Precision p = state.amplitudes[0].prec();
  const std::size_t dim = std::size_t{1} << n;

  // auxiliary-space components: T acts on the pair (phi_up, phi_down)
  QuantumState up = QuantumState::zero(n, p);
  QuantumState down = QuantumState::zero(n, p);
  if (entry == Entry::A || entry == Entry::C)
    up = state;  // auxiliary `in' state is up
  else
    down = state;

  Scalar c = weight_c(eta);
  for (int k = 1; k <= n; ++k) {
    // L_k = [[a or b on site k, c sigma_k^-], [c sigma_k^+, b or a on site k]]
    Scalar a = weight_a(lambda, nus[k - 1], eta);
    Scalar b = weight_b(lambda, nus[k - 1], eta);
    QuantumState nup = QuantumState::zero(n, p);
    QuantumState ndown = QuantumState::zero(n, p);
    const std::size_t bit = std::size_t{1} << (k - 1);
    for (std::size_t i = 0; i < dim; ++i) {
      bool site_down = (i & bit) != 0;
      // diagonal entries
      nup.amplitudes[i] = (site_down ? b : a) * up.amplitudes[i];
      ndown.amplitudes[i] = (site_down ? a : b) * down.amplitudes[i];
      // off-diagonal: sigma^- flips up->down, sigma^+ flips down->up
      if (site_down)
        nup.amplitudes[i] += c * down.amplitudes[i ^ bit];
      else
        ndown.amplitudes[i] += c * up.amplitudes[i ^ bit];
    }
    up = std::move(nup);
    down = std::move(ndown);
  }
  return (entry == Entry::A || entry == Entry::B) ? up : down;
}

QuantumState project_down(const QuantumState& state, int site) {
  QuantumState s = state;
  const std::size_t bit = std::size_t{1} << (site - 1);
  Precision p = state.amplitudes[0].prec();
  for (std::size_t i = 0; i < s.amplitudes.size(); ++i)
    if (!(i & bit)) s.amplitudes[i] = Scalar::zero(p);
  return s;
}

Scalar dot_all_down(const QuantumState& state) { return state.amplitudes.back(); }

Scalar z_qism(const InhomParams& p) {
  int n = p.n();
  QuantumState s = QuantumState::all_up(n, p.prec());
  for (int a = 0; a < n; ++a) s = apply_B(s, p.lambdas[a], p.nus, p.eta);
  return dot_all_down(s);
}

Scalar efp_qism(const InhomParams& p, int r, int s) {
  int n = p.n();
  if (r < 1 || r > n || s < 1 || s > n) throw numeric_error("efp_qism: index out of range");
  QuantumState st = QuantumState::all_up(n, p.prec());
  for (int a = 0; a < r; ++a) st = apply_B(st, p.lambdas[a], p.nus, p.eta);
  for (int j = 1; j <= s; ++j) st = project_down(st, j);
  for (int a = r; a < n; ++a) st = apply_B(st, p.lambdas[a], p.nus, p.eta);
  return dot_all_down(st) / z_qism(p);
}

}  // namespace sixv::qism
