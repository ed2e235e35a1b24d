#include "sixv/runner.hpp"

#include <atomic>
#include <cmath>
#include <optional>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "sixv/contour.hpp"
#include "sixv/detform.hpp"
#include "sixv/efp.hpp"
#include "sixv/oracle.hpp"
#include "sixv/orthopoly.hpp"
#include "sixv/qism.hpp"

namespace sixv::run {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

InhomParams hom_as_inhom(const HomParams& p, int n) {
  InhomParams ip{{}, {}, p.eta};
  Scalar nu0 = Scalar::zero(p.prec());
  for (int i = 0; i < n; ++i) {
    ip.lambdas.push_back(p.lambda);
    ip.nus.push_back(nu0);
  }
  return ip;
}

}  // namespace

Scalar parse_angle(const std::string& text, Precision prec) {
  std::string s = trim(text);
  if (s.empty()) throw numeric_error("parse_angle: empty value");
  auto pos = s.find("pi");
  try {
    if (pos == std::string::npos) return Scalar(Real::of_str(s, prec));
    std::string pre = trim(s.substr(0, pos));
    std::string post = trim(s.substr(pos + 2));
    if (!pre.empty() && pre.back() == '*') pre = trim(pre.substr(0, pre.size() - 1));
    Real coef = Real::of_int(1, prec);
    if (pre == "-")
      coef = -coef;
    else if (!pre.empty())
      coef = Real::of_str(pre, prec);
    Real value = coef * Real::pi(prec);
    if (!post.empty()) {
      if (post.front() != '/') throw numeric_error("parse_angle: malformed pi fraction");
      value = value / Real::of_str(trim(post.substr(1)), prec);
    }
    return Scalar(value);
  } catch (const numeric_error&) {
    throw;
  } catch (const std::exception&) {
    throw numeric_error("parse_angle: cannot parse '" + text + "'");
  }
}

std::string format_value(const Scalar& v, int sig_digits) {
  if (Real::abs(v.im()) > singularity_threshold(v.prec()))
    return v.str(sig_digits);
  return v.re().str(sig_digits);
}

std::vector<std::string> z_methods(int n, const std::string& requested) {
  std::vector<std::string> all;
  all.push_back("det");
  if (n <= oracle::kSizeCap) all.push_back("oracle");
  if (n <= qism::kSiteCap) all.push_back("qism");
  if (requested == "all") return all;
  for (const auto& m : all)
    if (m == requested) return {requested};
  throw numeric_error("unknown or inapplicable z method '" + requested + "'");
}

std::vector<std::string> efp_methods(int n, int r, int s, const std::string& requested) {
  std::vector<std::string> all;
  if (s <= efp::kHomSCap) {
    all.push_back("hom");
    all.push_back("ortho");
    all.push_back("mir1");
    all.push_back("mir2");
  }
  if (s <= contour::kMir3SCap && n <= oracle::kSizeCap) all.push_back("mir3");
  if (n <= oracle::kSizeCap) all.push_back("oracle");
  if (n <= qism::kSiteCap) all.push_back("qism");
  (void)r;
  if (requested == "all") return all;
  for (const auto& m : all)
    if (m == requested) return {requested};
  throw numeric_error("unknown or inapplicable efp method '" + requested + "'");
}

Scalar compute_z(const HomParams& p, int n, const std::string& method) {
  if (n < 1) throw numeric_error("compute_z: N must be positive");
  if (method == "det") return detform::z_hom(p, n);
  if (method == "oracle") return oracle::brute_z(hom_as_inhom(p, n));
  if (method == "qism") return qism::z_qism(hom_as_inhom(p, n));
  throw numeric_error("unknown z method '" + method + "'");
}

Scalar compute_efp(const HomParams& p, int n, int r, int s, const std::string& method) {
  if (n < 1 || r < 1 || r > n || s < 1 || s > n)
    throw numeric_error("compute_efp: indices out of range");
  if (method == "hom") return efp::efp_hom(p, n, r, s);
  if (method == "ortho") return ortho::efp_ortho(p, n, r, s);
  if (method == "mir1") return contour::efp_mir1(p, n, r, s);
  if (method == "mir2") return contour::efp_mir2(p, n, r, s);
  if (method == "mir3") return contour::efp_mir3(p, n, r, s);
  if (method == "oracle") return oracle::brute_efp(hom_as_inhom(p, n), r, s);
  if (method == "qism") return qism::efp_qism(hom_as_inhom(p, n), r, s);
  throw numeric_error("unknown efp method '" + method + "'");
}

std::vector<MethodValue> compute_z_all(const HomParams& p, int n, const std::string& method) {
  std::vector<MethodValue> out;
  for (const auto& m : z_methods(n, method)) out.push_back({m, compute_z(p, n, m)});
  return out;
}

std::vector<MethodValue> compute_efp_all(const HomParams& p, int n, int r, int s,
                                         const std::string& method) {
  std::vector<MethodValue> out;
  for (const auto& m : efp_methods(n, r, s, method))
    out.push_back({m, compute_efp(p, n, r, s, m)});
  return out;
}

Real max_pairwise_dev(const std::vector<MethodValue>& values) {
  Precision prec = values.at(0).value.prec();
  Real m(prec);
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      Real d = rel_dev(values[i].value, values[j].value);
      if (d > m) m = d;
    }
  return m;
}

namespace {

struct SweepCell {
  int r, s;
  bool structural_zero;
  std::optional<Scalar> value;
};

std::vector<SweepCell> sweep_grid(const HomParams& p, int n, int smax,
                                  const std::string& method, int workers) {
  if (n < 1 || smax < 1 || smax > n) throw numeric_error("sweep: bad grid shape");
  std::vector<SweepCell> cells;
  for (int s = 1; s <= smax; ++s)
    for (int r = 1; r <= n; ++r) cells.push_back({r, s, s > r, std::nullopt});
  if (workers < 1) workers = 1;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= cells.size() || failed.load()) return;
      SweepCell& c = cells[i];
      if (c.structural_zero) {
        c.value = Scalar::zero(p.prec());
        continue;
      }
      try {
        c.value = compute_efp(p, n, c.r, c.s, method);
      } catch (...) {
        failed.store(true);
        return;
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failed.load()) throw numeric_error("sweep: a cell evaluation failed");
  return cells;
}

}  // namespace

std::string sweep_csv(const HomParams& p, int n, int smax, const std::string& method,
                      int workers) {
  auto cells = sweep_grid(p, n, smax, method, workers);
  std::ostringstream out;
  out << "N,r,s,value,method,imag_residual\n";
  for (const auto& c : cells) {
    const Scalar& v = *c.value;
    out << n << ',' << c.r << ',' << c.s << ',' << v.re().str(50) << ','
        << (c.structural_zero ? "exact-zero" : method) << ',' << Real::abs(v.im()).str(3)
        << '\n';
  }
  return out.str();
}

std::string sweep_svg(const HomParams& p, int n, int smax, const std::string& method,
                      int workers) {
  auto cells = sweep_grid(p, n, smax, method, workers);
  const int cell = 24;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << n * cell
      << "\" height=\"" << smax * cell << "\">\n";
  for (const auto& c : cells) {
    double v = c.value->re().to_double();
    if (v < 0) v = 0;
    if (v > 1) v = 1;
    int gray = static_cast<int>(std::lround(255.0 * (1.0 - v)));
    char color[8];
    std::snprintf(color, sizeof color, "#%02x%02x%02x", gray, gray, gray);
    out << "  <rect x=\"" << (c.r - 1) * cell << "\" y=\"" << (c.s - 1) * cell
        << "\" width=\"" << cell << "\" height=\"" << cell << "\" fill=\"" << color
        << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string validation_json(const std::vector<validate::CheckResult>& checks) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json rec;
    rec["name"] = c.name;
    rec["anchor"] = c.anchor;
    rec["category"] = c.category;
    rec["max_dev"] = c.max_dev.str(3);
    rec["tol"] = c.tol.str(3);
    rec["pass"] = c.pass;
    rec["schema_version"] = 1;
    arr.push_back(std::move(rec));
  }
  return arr.dump(2) + "\n";
}

std::string validation_text(const std::vector<validate::CheckResult>& checks) {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.pass ? "PASS" : "FAIL") << "  " << c.anchor;
    for (std::size_t i = c.anchor.size(); i < 24; ++i) out << ' ';
    out << c.name;
    for (std::size_t i = c.name.size(); i < 50; ++i) out << ' ';
    out << " max_dev=" << c.max_dev.str(3) << " tol=" << c.tol.str(2) << '\n';
  }
  return out.str();
}

std::string hgen_text(const HomParams& p, int n) {
  auto h = ortho::boundary_H(p, n);
  std::ostringstream out;
  for (int r = 1; r <= n; ++r) out << r << ' ' << h[r - 1].re().str(50) << '\n';
  return out.str();
}

}  // namespace sixv::run
