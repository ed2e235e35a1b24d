#include <string>

#include "doctest.h"
#include "json.hpp"
#include "sixv/runner.hpp"

using namespace sixv;

static Precision P = Precision::digits(64);

static bool tiny(const Real& x, int e = -50) { return x < Real::pow10(e, P); }

TEST_CASE("angle parsing accepts decimals and pi fractions") {
  Real pi = Real::pi(P);
  CHECK(run::parse_angle("pi/2", P).re() == pi / Real::of_int(2, P));
  CHECK(run::parse_angle("pi", P).re() == pi);
  CHECK(run::parse_angle("2pi/3", P).re() == Real::of_int(2, P) * pi / Real::of_int(3, P));
  CHECK(run::parse_angle("3*pi/4", P).re() == Real::of_int(3, P) * pi / Real::of_int(4, P));
  CHECK(run::parse_angle("-pi/4", P).re() == -(pi / Real::of_int(4, P)));
  CHECK(run::parse_angle("0.25", P).re() == Real::of_str("0.25", P));
  CHECK_THROWS_AS(run::parse_angle("pi/", P), numeric_error);
  CHECK_THROWS_AS(run::parse_angle("bogus", P), numeric_error);
}

TEST_CASE("method tag expansion respects caps") {
  auto zm = run::z_methods(3, "all");
  CHECK(zm == std::vector<std::string>{"det", "oracle", "qism"});
  auto zm8 = run::z_methods(8, "all");
  CHECK(zm8 == std::vector<std::string>{"det", "qism"});
  CHECK_THROWS_AS(run::z_methods(8, "oracle"), numeric_error);
  auto em = run::efp_methods(4, 3, 2, "all");
  CHECK(em == std::vector<std::string>{"hom", "ortho", "mir1", "mir2", "mir3", "oracle",
                                       "qism"});
  auto em3 = run::efp_methods(4, 3, 3, "all");
  CHECK(em3 == std::vector<std::string>{"hom", "ortho", "mir1", "mir2", "oracle", "qism"});
  CHECK_THROWS_AS(run::efp_methods(4, 3, 3, "mir3"), numeric_error);
}

TEST_CASE("cross method dispatch agrees at the symmetric point") {
  HomParams ice{run::parse_angle("pi/2", P), run::parse_angle("pi/6", P)};
  auto values = run::compute_efp_all(ice, 3, 2, 1, "all");
  CHECK(values.size() == 7);
  CHECK(tiny(run::max_pairwise_dev(values)));
  Scalar expect = Scalar::of_int(5, P) / Scalar::of_int(7, P);
  for (const auto& mv : values) CHECK(tiny(rel_dev(mv.value, expect)));
}

TEST_CASE("sweep emits a deterministic csv grid") {
  HomParams ice{run::parse_angle("pi/2", P), run::parse_angle("pi/6", P)};
  std::string a = run::sweep_csv(ice, 3, 3, "hom", 1);
  std::string b = run::sweep_csv(ice, 3, 3, "hom", 1);
  std::string c = run::sweep_csv(ice, 3, 3, "hom", 3);
  CHECK(a == b);
  CHECK(a == c);
  CHECK(a.rfind("N,r,s,value,method,imag_residual\n", 0) == 0);
  int lines = 0;
  for (char ch : a)
    if (ch == '\n') ++lines;
  CHECK(lines == 1 + 3 * 3);
  CHECK(a.find("3,1,2,0") != std::string::npos);       // structural zero cell
  CHECK(a.find("exact-zero") != std::string::npos);
  CHECK(a.find("\r") == std::string::npos);
}

TEST_CASE("sweep svg has one rect per cell") {
  HomParams ice{run::parse_angle("pi/2", P), run::parse_angle("pi/6", P)};
  std::string svg = run::sweep_svg(ice, 3, 2, "hom", 1);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"") !=
        std::string::npos);
  std::size_t count = 0, pos = 0;
  while ((pos = svg.find("<rect", pos)) != std::string::npos) {
    ++count;
    ++pos;
  }
  CHECK(count == 3 * 2);
}

TEST_CASE("validation report serializes to the documented schema") {
  auto checks = validate::run_checks(Precision::digits(128), "recurrences");
  CHECK(checks.size() == 2);
  for (const auto& c : checks) CHECK(c.pass);
  auto doc = nlohmann::json::parse(run::validation_json(checks));
  CHECK(doc.is_array());
  CHECK(doc.size() == 2);
  for (const auto& rec : doc) {
    CHECK(rec.contains("name"));
    CHECK(rec.contains("anchor"));
    CHECK(rec.contains("max_dev"));
    CHECK(rec.contains("tol"));
    CHECK(rec.contains("pass"));
    CHECK(rec["schema_version"] == 1);
  }
}

TEST_CASE("hgen text lists one row per position") {
  HomParams ice{run::parse_angle("pi/2", P), run::parse_angle("pi/6", P)};
  std::string text = run::hgen_text(ice, 3);
  int lines = 0;
  for (char ch : text)
    if (ch == '\n') ++lines;
  CHECK(lines == 3);
  CHECK(text.rfind("1 2.857142857142857142857142857142857142857142857142", 0) == 0);
}
