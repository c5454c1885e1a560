#include <doctest.h>

#include "gravfock/config.h"
#include "gravfock/report.h"
#include "gravfock/spec_files.h"
#include "gravfock/suites.h"

using namespace gravfock;

TEST_CASE("config parsing") {
  const RunConfig c = parse_config("tolerance = 1e-10\n# comment\nseed=42\nlambda = 3/2\nv_reg=2\nformat = json\nz2=0.5\n");
  CHECK(c.tolerance == 1e-10);
  CHECK(c.seed == 42);
  CHECK(c.lambda == Rational(3, 2));
  CHECK(c.v_reg == 2);
  CHECK(c.z2 == 0.5);
  CHECK(c.format == ReportFormat::Json);
  CHECK(c.regularization().ratio() == Rational(2) / (Rational(81) / 16));
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(parse_config("bogus = 1"), ConfigError);
  CHECK_THROWS_AS(parse_config("tolerance = -1"), ConfigError);
  CHECK_THROWS_AS(parse_config("z = 0"), ConfigError);
  CHECK_THROWS_AS(parse_config("z = 1.5"), ConfigError);
  CHECK_THROWS_AS(parse_config("lambda = 0"), ConfigError);
  CHECK_THROWS_AS(parse_config("seed"), ConfigError);
  CHECK_THROWS_AS(parse_format("xml"), ConfigError);
  CHECK_THROWS_AS(load_config_file("/nonexistent/gravfock.conf"), ConfigError);
}

TEST_CASE("format_double round-trips") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("green function specs") {
  GreenFunction g;
  parse_green_spec(
      "field scalar mass=1\n"
      "vertex re=-1/2 im=0 legs=all  # contact\n"
      "leg in scalar p=k1\n"
      "leg in scalar p=[3/4,0,0] E=5/4\n"
      "leg out scalar p=h1\n",
      g);
  finalize_green_function(g);
  REQUIRE(g.legs.size() == 3);
  REQUIRE(g.vertices.size() == 1);
  CHECK(g.vertices[0].legs.size() == 3);
  CHECK(g.legs[1].energy == Rational(5, 4));
  CHECK_FALSE(g.legs[2].incoming);
}

TEST_CASE("green function spec errors carry line numbers") {
  GreenFunction g;
  try {
    parse_green_spec("field scalar mass=1\nleg sideways scalar p=k\n", g);
    FAIL("no error");
  } catch (const SpecError& e) {
    CHECK(e.line() == 2);
  }
  GreenFunction off;
  parse_green_spec("field scalar mass=1\nleg in scalar p=[1,0,0] E=1\n", off);
  CHECK_THROWS(finalize_green_function(off));
  GreenFunction gz;
  parse_green_spec("field gauge mass=1\nleg in gauge p=k g=1 G=0\n", gz);
  CHECK_THROWS(finalize_green_function(gz));
}

TEST_CASE("report rendering") {
  Report r;
  r.suite = "demo";
  r.seed = 7;
  r.config = {{"tolerance", "1e-12"}};
  r.cases = {{"b", true, "ok", "1", "1", std::nullopt}, {"a", false, "bad", "x", "y", 1e-12}};
  r.sort_cases();
  CHECK(r.cases[0].name == "a");
  CHECK_FALSE(r.passed());
  CHECK(r.failures() == 1);
  const std::string j = render_json(r);
  CHECK(j.find("\"status\": \"fail\"") != std::string::npos);
  CHECK(j.find("\"tolerance\": null") != std::string::npos);
  CHECK(j.back() == '\n');
  const std::string t = render_text(r);
  CHECK(t.find("FAIL a") != std::string::npos);
  CHECK(t.find("1/2 cases passed") != std::string::npos);
}

TEST_CASE("suites are deterministic and reject unknown names") {
  RunConfig cfg;
  cfg.seed = 5;
  CHECK(render_json(run_suite("fock", cfg)) == render_json(run_suite("fock", cfg)));
  CHECK_THROWS_AS(run_suite("nope", cfg), ConfigError);
  CHECK(is_suite("all"));
  CHECK(suite_names().size() == 9);
}
