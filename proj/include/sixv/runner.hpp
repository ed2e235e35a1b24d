#ifndef SIXV_RUNNER_HPP
#define SIXV_RUNNER_HPP

#include <string>
#include <vector>

#include "sixv/model.hpp"
#include "sixv/validate.hpp"

namespace sixv::run {

// Accepts decimal radians ("1.57") and exact fractions of pi ("pi/2",
// "2pi/3", "-pi/4"), parsed at full working precision.
Scalar parse_angle(const std::string& text, Precision prec);

std::string format_value(const Scalar& v, int sig_digits = 50);

struct MethodValue {
  std::string method;
  Scalar value;
};

// Expand a method tag ("all" or a single name) into the list applicable at
// the given sizes; throws on an unknown tag or one outside its caps.
std::vector<std::string> z_methods(int n, const std::string& requested);
std::vector<std::string> efp_methods(int n, int r, int s, const std::string& requested);

Scalar compute_z(const HomParams& p, int n, const std::string& method);
Scalar compute_efp(const HomParams& p, int n, int r, int s, const std::string& method);

std::vector<MethodValue> compute_z_all(const HomParams& p, int n, const std::string& method);
std::vector<MethodValue> compute_efp_all(const HomParams& p, int n, int r, int s,
                                         const std::string& method);
Real max_pairwise_dev(const std::vector<MethodValue>& values);

// Grid of F_N^(r,s) for r = 1..N, s = 1..smax; cells with s > r are emitted
// as exact zeros.  Cells are evaluated concurrently up to the worker cap;
// emission is ordered and single-threaded, so the bytes are deterministic.
std::string sweep_csv(const HomParams& p, int n, int smax, const std::string& method,
                      int workers);
std::string sweep_svg(const HomParams& p, int n, int smax, const std::string& method,
                      int workers);

std::string validation_json(const std::vector<validate::CheckResult>& checks);
std::string validation_text(const std::vector<validate::CheckResult>& checks);

// First-row c-vertex distribution H_N^(r), one "r value" line per row.
std::string hgen_text(const HomParams& p, int n);

}  // namespace sixv::run

#endif
