#ifndef SIXV_QISM_HPP
#define SIXV_QISM_HPP

#include <vector>

#include "sixv/model.hpp"
#include "sixv/scalar.hpp"

namespace sixv::qism {

// 2^N state cap for the dense amplitude vector.
inline constexpr int kSiteCap = 14;

// State of the N-site quantum space, amplitudes indexed by spin bit-patterns.
// Site k corresponds to bit k-1; bit value 0 is spin up, so the all-up
// reference state is the all-zero pattern.
struct QuantumState {
  int n_sites = 0;
  std::vector<Scalar> amplitudes;

  static QuantumState zero(int n, Precision p);
  static QuantumState all_up(int n, Precision p);    // |⇑⟩
  static QuantumState all_down(int n, Precision p);  // |⇓⟩
};

enum class Entry { A, B, C, D };

// Apply one entry of the column monodromy matrix T(lambda) = L_N ... L_1 to a
// state, by sequential sparse application of the 2x2-block L-operators; the
// 2^N x 2^N matrix is never materialized.
QuantumState apply_entry(Entry entry, const QuantumState& state, const Scalar& lambda,
                         const std::vector<Scalar>& nus, const Scalar& eta);

inline QuantumState apply_B(const QuantumState& s, const Scalar& lambda,
                            const std::vector<Scalar>& nus, const Scalar& eta) {
  return apply_entry(Entry::B, s, lambda, nus, eta);
}

// Projector onto the spin-down state of the given site (1-based).
QuantumState project_down(const QuantumState& state, int site);

Scalar dot_all_down(const QuantumState& state);

// Z_N = <⇓| B(lambda_N) ... B(lambda_1) |⇑⟩.
Scalar z_qism(const InhomParams& p);

// F_N^(r,s) = Z^-1 <⇓| B(l_N)..B(l_{r+1}) pi_1..pi_s B(l_r)..B(l_1) |⇑⟩.
Scalar efp_qism(const InhomParams& p, int r, int s);

}  // namespace sixv::qism

#endif
