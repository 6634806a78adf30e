#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dgap/gap_table.hpp"
#include "dgap/runconfig.hpp"

using namespace dgap;

namespace {
std::string roundtrip(const std::string& s) {
  return render_complex_literal(parse_complex_literal(s));
}
}  // namespace

TEST_CASE("complex literal parsing") {
  struct Case {
    const char* in;
    const char* re;
    const char* im;
  } cases[] = {
      {"1.5-0.5i", "1.5", "-0.5"}, {"-3", "-3", ""},      {"4i", "", "4"},
      {"i", "", "1"},              {"-i", "", "-1"},      {"1+i", "1", "1"},
      {"2e-3+4.5e1i", "2e-3", "4.5e1"}, {"+7", "7", ""},  {"0", "0", ""},
      {"-0.25i", "", "-0.25"},
  };
  for (const Case& c : cases) {
    ComplexLiteral lit = parse_complex_literal(c.in);
    CHECK(lit.re == c.re);
    CHECK(lit.im == c.im);
  }
  for (const char* bad : {"", "1.5 - 0.5i", "1++2i", "abc", "1i2", "2i+1", "1+2", "--3"})
    CHECK_THROWS_AS(parse_complex_literal(bad), std::invalid_argument);
}

TEST_CASE("literal render round-trips to a canonical form") {
  for (const char* s :
       {"1.5-0.5i", "-3", "4i", "i", "-i", "1+i", "2e-3+4.5e1i", "+7", "1.25", "0.5+0.5i"}) {
    std::string canon = roundtrip(s);
    CHECK(roundtrip(canon) == canon);  // idempotent
  }
  CHECK(roundtrip("1.5-0.5i") == "1.5-0.5i");
  CHECK(roundtrip("+7") == "7");
  CHECK(roundtrip("i") == "1i");
  CHECK(roundtrip("4i") == "4i");
}

TEST_CASE("literal to Complex at full precision") {
  Complex z = literal_to_complex(parse_complex_literal("1.5-0.5i"), 256);
  CHECK(z.re() == Real(1.5, 256));
  CHECK(z.im() == Real(-0.5, 256));
  // decimal input survives to 256 bits (not squeezed through a double)
  Complex w = literal_to_complex(parse_complex_literal("0.1"), 256);
  CHECK(w.re() == Real("0.1", 256));
  CHECK(w.re() != Real(0.1, 256));
}

TEST_CASE("potential list and n range parsing") {
  RunConfig cfg;
  parse_potential_list("i,2,-3,4i", cfg);
  CHECK(cfg.render_potential() == "1i,2,-3,4i");
  TrigPotential v = cfg.potential_value();
  CHECK(v.D() == Real(4.0, 256));

  parse_n_range("3:21", cfg);
  CHECK(cfg.n_start == 3);
  CHECK(cfg.n_end == 21);
  CHECK_THROWS_AS(parse_n_range("5", cfg), std::invalid_argument);
  CHECK_THROWS_AS(parse_n_range("7:5", cfg), std::invalid_argument);
  CHECK_THROWS_AS(parse_potential_list("1,2,3", cfg), std::invalid_argument);
}

TEST_CASE("gap table: shape, determinism and status column") {
  RunConfig cfg;
  parse_potential_list("1,1,1,1", cfg);
  parse_n_range("3:6", cfg);
  cfg.method = MethodChoice::series;
  std::vector<GapRow> rows = compute_gap_rows(cfg);
  REQUIRE(rows.size() == 4);
  for (const GapRow& r : rows) CHECK(r.status == "ok");
  // odd rows carry nonzero gaps, even rows exactly zero
  CHECK(rows[0].gamma_abs > 0L);
  CHECK(rows[1].gamma_abs.is_zero());
  CHECK(rows[3].gamma_abs.is_zero());
  CHECK(rows_exit_code(rows) == 0);

  std::string csv1 = rows_to_csv(rows, 30);
  std::string csv2 = rows_to_csv(compute_gap_rows(cfg), 30);
  CHECK(csv1 == csv2);  // byte-identical on identical inputs
  CHECK(csv1.substr(0, csv1.find('\n')) == kGapTableHeader);
  // 15 columns per row
  std::string first_row = csv1.substr(csv1.find('\n') + 1);
  first_row = first_row.substr(0, first_row.find('\n'));
  int commas = 0;
  for (char c : first_row) commas += (c == ',');
  CHECK(commas == 14);

  std::string js = rows_to_json(rows, 30);
  CHECK(js.find("\"lambda_minus_re\"") != std::string::npos);
  CHECK(js.find("\"status\"") != std::string::npos);
}

TEST_CASE("gap table: row-level failures set status and exit code 3") {
  RunConfig cfg;
  parse_potential_list("1,2,3,4", cfg);
  parse_n_range("7:7", cfg);  // out of the localization regime for (1,2,3,4)
  cfg.method = MethodChoice::matrix;
  std::vector<GapRow> rows = compute_gap_rows(cfg);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].status == "localization");
  CHECK(rows_exit_code(rows) == 3);
}

TEST_CASE("json config file fills defaults") {
  const char* path = "/tmp/dgap_test_cfg.json";
  {
    std::ofstream f(path);
    f << R"({"pot": "1,2,3,4", "n": "5:9", "method": "matrix",
             "precision_bits": 192, "rel_tol": 1e-20, "format": "json",
             "digits": 12})";
  }
  RunConfig cfg;
  apply_json_config(path, cfg);
  CHECK(cfg.render_potential() == "1,2,3,4");
  CHECK(cfg.n_start == 5);
  CHECK(cfg.n_end == 9);
  CHECK(cfg.method == MethodChoice::matrix);
  CHECK(cfg.precision_bits == 192);
  CHECK(cfg.rel_tol == doctest::Approx(1e-20));
  CHECK(cfg.format == OutputFormat::json);
  CHECK(cfg.sig_digits == 12);
  CHECK_THROWS_AS(apply_json_config("/nonexistent/x.json", cfg), std::invalid_argument);
}

TEST_CASE("asym rows carry predictions only") {
  RunConfig cfg;
  parse_potential_list("1,2,3,4", cfg);
  parse_n_range("5:6", cfg);
  cfg.method = MethodChoice::asym;
  std::vector<GapRow> rows = compute_gap_rows(cfg);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].lambda_plus.re().to_double() == doctest::Approx(5.96));
  CHECK(rows[0].gamma.re().is_nan());  // unresolved square-root branch
  CHECK(rows[0].gamma_abs > 0L);
  CHECK(rows[1].gamma_abs.is_zero());  // even n
  CHECK(rows[0].status == "ok");
}
