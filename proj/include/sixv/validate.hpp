#ifndef SIXV_VALIDATE_HPP
#define SIXV_VALIDATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sixv/model.hpp"
#include "sixv/scalar.hpp"

namespace sixv::validate {

struct CheckResult {
  std::string name;      // human-readable check name
  std::string anchor;    // stable machine id
  std::string category;  // suite filter key
  Real max_dev;
  Real tol;
  bool pass;
};

// Deterministic splitmix64-based generator for reproducible random parameters.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [lo, hi)
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(next() >> 11) * 0x1.0p-53);
  }
  Scalar scalar(double lo, double hi, Precision p) {
    return Scalar::of(uniform(lo, hi), p);
  }
  // random disordered-regime parameter set with well-separated entries
  InhomParams inhom(int n, Precision p);
  HomParams hom(Precision p);

 private:
  std::uint64_t state_;
};

// Run the invariant suites; `only` filters by category or name substring
// (empty runs everything).
std::vector<CheckResult> run_checks(Precision prec, const std::string& only = "");

// Max deviation over the full exchange-algebra suite at size n: all sixteen
// entrywise monodromy exchange relations, creation-operator commutativity,
// the diagonal-past-creation exchange, the triangular block structure, and
// the first-site reduction of creation strings.
Real yang_baxter_dev(Precision prec, int n, int n_states, std::uint64_t seed);

}  // namespace sixv::validate

#endif
