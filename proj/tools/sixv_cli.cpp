#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sixv/runner.hpp"

namespace {

struct Opts {
  int n = 3;
  int r = 1;
  int s = 1;
  int smax = 0;
  int precision = 128;
  int workers = 1;
  std::string lambda = "pi/2";
  std::string eta = "pi/6";
  std::string method;
  std::string format;
  std::string output;
  std::string tolerance = "1e-60";
  std::string only;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw sixv::numeric_error("cannot open output file '" + path + "'");
  f << text;
}

void add_params(CLI::App* cmd, Opts& o) {
  cmd->add_option("--lambda", o.lambda, "spectral parameter (radians or pi fraction)");
  cmd->add_option("--eta", o.eta, "crossing parameter (radians or pi fraction)");
  cmd->add_option("--precision", o.precision, "working precision in decimal digits")
      ->check(CLI::Range(32, 100000));
  cmd->add_option("--output", o.output, "output file (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"six-vertex model partition function and emptiness probability laboratory"};
  app.require_subcommand(1);
  Opts o;

  CLI::App* zc = app.add_subcommand("z", "partition function by one or all methods");
  zc->add_option("--N", o.n, "lattice size")->required();
  zc->add_option("--method", o.method, "det | oracle | qism | all");
  zc->add_option("--tolerance", o.tolerance, "cross-method deviation bound");
  zc->add_option("--format", o.format, "text (default)");
  add_params(zc, o);

  CLI::App* ec = app.add_subcommand("efp", "emptiness formation probability");
  ec->add_option("--N", o.n, "lattice size")->required();
  ec->add_option("--r", o.r, "columns counted from the right")->required();
  ec->add_option("--s", o.s, "rows counted from the top")->required();
  ec->add_option("--method", o.method, "hom | ortho | mir1 | mir2 | mir3 | oracle | qism | all");
  ec->add_option("--tolerance", o.tolerance, "cross-method deviation bound");
  ec->add_option("--format", o.format, "text (default)");
  add_params(ec, o);

  CLI::App* hc = app.add_subcommand("hgen", "first-row c-vertex position distribution");
  hc->add_option("--N", o.n, "lattice size")->required();
  add_params(hc, o);

  CLI::App* sc = app.add_subcommand("sweep", "grid of F over r = 1..N, s = 1..smax");
  sc->add_option("--N", o.n, "lattice size")->required();
  sc->add_option("--smax", o.smax, "largest s row (default min(N, 3))");
  sc->add_option("--method", o.method, "single method tag (default hom)");
  sc->add_option("--format", o.format, "csv (default) | svg");
  sc->add_option("--workers", o.workers, "concurrent cell evaluations")
      ->check(CLI::Range(1, 64));
  add_params(sc, o);

  CLI::App* vc = app.add_subcommand("validate", "run the invariant suites");
  vc->add_option("--only", o.only, "filter by category or name substring");
  vc->add_option("--format", o.format, "json (default) | text");
  add_params(vc, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    sixv::Precision prec = sixv::Precision::digits(o.precision);
    if (app.got_subcommand(zc) || app.got_subcommand(ec)) {
      sixv::HomParams p{sixv::run::parse_angle(o.lambda, prec),
                        sixv::run::parse_angle(o.eta, prec)};
      if (o.method.empty()) o.method = "all";
      std::vector<sixv::run::MethodValue> values;
      if (app.got_subcommand(zc))
        values = sixv::run::compute_z_all(p, o.n, o.method);
      else
        values = sixv::run::compute_efp_all(p, o.n, o.r, o.s, o.method);
      std::ostringstream out;
      for (const auto& mv : values)
        out << mv.method << ' ' << sixv::run::format_value(mv.value) << '\n';
      bool over = false;
      if (values.size() > 1) {
        sixv::Real dev = sixv::run::max_pairwise_dev(values);
        sixv::Real tol = sixv::Real::of_str(o.tolerance, prec);
        over = dev > tol;
        out << "max_pairwise_dev " << dev.str(3) << (over ? " EXCEEDS " : " within ")
            << tol.str(2) << '\n';
      }
      emit(out.str(), o.output);
      return over ? 3 : 0;
    }
    if (app.got_subcommand(hc)) {
      sixv::HomParams p{sixv::run::parse_angle(o.lambda, prec),
                        sixv::run::parse_angle(o.eta, prec)};
      emit(sixv::run::hgen_text(p, o.n), o.output);
      return 0;
    }
    if (app.got_subcommand(sc)) {
      sixv::HomParams p{sixv::run::parse_angle(o.lambda, prec),
                        sixv::run::parse_angle(o.eta, prec)};
      if (o.method.empty()) o.method = "hom";
      if (o.smax <= 0) o.smax = std::min(o.n, 3);
      std::string text = o.format == "svg"
                             ? sixv::run::sweep_svg(p, o.n, o.smax, o.method, o.workers)
                             : sixv::run::sweep_csv(p, o.n, o.smax, o.method, o.workers);
      emit(text, o.output);
      return 0;
    }
    if (app.got_subcommand(vc)) {
      auto checks = sixv::validate::run_checks(prec, o.only);
      std::string text = o.format == "text" ? sixv::run::validation_text(checks)
                                            : sixv::run::validation_json(checks);
      emit(text, o.output);
      for (const auto& c : checks)
        if (!c.pass) return 1;
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
