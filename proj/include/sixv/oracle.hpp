#ifndef SIXV_ORACLE_HPP
#define SIXV_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "sixv/model.hpp"
#include "sixv/scalar.hpp"
#include "sixv/series.hpp"

namespace sixv::oracle {

// Exhaustive enumeration cap; 218348 configurations at N = 7.
inline constexpr int kSizeCap = 7;

// The six vertex types.  Convention (top, right) -> (bottom, left) with
// spin up = arrow up / arrow right:
//   A1: (+,+)->(+,+)   A2: (-,-)->(-,-)   weight a
//   B1: (+,-)->(+,-)   B2: (-,+)->(-,+)   weight b
//   C1: (-,+)->(+,-)   C2: (+,-)->(-,+)   weight c
enum VertexType : std::uint8_t { A1 = 0, A2, B1, B2, C1, C2 };

inline int weight_kind(std::uint8_t t) { return t < 2 ? 0 : (t < 4 ? 1 : 2); }

// An N x N assignment of vertex types consistent with arrow conservation and
// domain-wall boundary conditions.  Rows counted from the top (1-based),
// columns from the right (1-based) -- the repository-wide indexing convention.
struct DwbcConfig {
  int size = 0;
  std::vector<std::uint8_t> types;  // row-major: (row-1)*size + (col-1)

  std::uint8_t type_at(int row, int col) const {
    return types[static_cast<std::size_t>(row - 1) * size + (col - 1)];
  }
  // True if the horizontal edge to the left of vertex (row, col) -- i.e. the
  // edge between columns col and col+1 -- carries a left-pointing arrow.
  bool left_edge_points_left(int row, int col) const {
    std::uint8_t t = type_at(row, col);
    return t == A2 || t == B1 || t == C1;
  }
};

// Depth-first enumeration by per-row edge-state propagation; yields each
// valid configuration exactly once, in deterministic order.
void enumerate(int n, const std::function<void(const DwbcConfig&)>& visit);
std::vector<DwbcConfig> enumerate_all(int n);
long config_count(int n);

Scalar config_weight(const DwbcConfig& cfg, const InhomParams& p);
Scalar brute_z(const InhomParams& p);
Scalar brute_efp(const InhomParams& p, int r, int s);

// First-row c-vertex position distribution H_N^(r), r = 1..N; sums to 1.
std::vector<Scalar> brute_first_row_c(const HomParams& p, int n);

// Partition sum with jet-valued weights.  weight(kind, col, row) with
// kind 0=a, 1=b, 2=c and 1-based col/row supplies the per-vertex jets.
using JetWeightFn = std::function<const MultiSeries&(int kind, int col, int row)>;
MultiSeries brute_z_jet(int n, const JetWeightFn& weight);

}  // namespace sixv::oracle

#endif
