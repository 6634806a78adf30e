#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "dgap/asymptotics.hpp"
#include "dgap/errors.hpp"
#include "dgap/solver.hpp"

using namespace dgap;

namespace {
constexpr int kBits = 256;

TrigPotential pot1111() {
  return TrigPotential(Complex(1, 0, kBits), Complex(1, 0, kBits), Complex(1, 0, kBits),
                       Complex(1, 0, kBits));
}
TrigPotential pot1234() {
  return TrigPotential(Complex(1, 0, kBits), Complex(2, 0, kBits), Complex(3, 0, kBits),
                       Complex(4, 0, kBits));
}
}  // namespace

TEST_CASE("predict_lambda plug-ins") {
  TrigPotential v = pot1234();
  // n=5: 5 + 10/10 - 2/50 = 5.96 ; n=-5: -5 - 1 - 0.04 = -6.04
  CHECK(predict_lambda(5, v).re().to_double() == doctest::Approx(5.96).epsilon(1e-12));
  CHECK(predict_lambda(-5, v).re().to_double() == doctest::Approx(-6.04).epsilon(1e-12));
  CHECK(predict_lambda(5, v).im().is_zero());
  // (1,1,1,1): Ab = aB makes the 1/n^2 term vanish
  CHECK(predict_lambda(5, pot1111()).re().to_double() == doctest::Approx(5.2).epsilon(1e-12));
}

TEST_CASE("predict_gap plug-ins") {
  // n=7 (m=3), (1,1,1,1): 2/(4^6 (3!)^2) = 2/147456
  GapPrediction g = predict_gap(7, pot1111());
  CHECK(g.predicted_gamma_abs.to_double() == doctest::Approx(2.0 / 147456.0).epsilon(1e-12));
  CHECK(g.bracket_exponents.first == 3);
  CHECK(g.bracket_exponents.second == 4);

  // even n: exactly zero
  GapPrediction ge = predict_gap(6, pot1234());
  CHECK(ge.predicted_gamma_squared.is_zero());
  CHECK(ge.predicted_gamma_abs.is_zero());

  // n=-7 (m=3), (1,2,3,4): 2 sqrt(6^4 4^3)/147456 = 576/147456
  GapPrediction gm = predict_gap(-7, pot1234());
  CHECK(gm.predicted_gamma_abs.to_double() ==
        doctest::Approx(576.0 / 147456.0).epsilon(1e-12));
  CHECK(gm.bracket_exponents.first == 4);
  CHECK(gm.bracket_exponents.second == 3);

  // special case a=A=b=B real: 2|a| a^{2m}/(4^{2m}(m!)^2)
  TrigPotential vhalf(Complex(0.5, 0, kBits), Complex(0.5, 0, kBits), Complex(0.5, 0, kBits),
                      Complex(0.5, 0, kBits));
  GapPrediction gh = predict_gap(5, vhalf);  // m=2: 2*0.5*0.5^4/(4^4*4)
  CHECK(gh.predicted_gamma_abs.to_double() ==
        doctest::Approx(2.0 * 0.5 * 0.0625 / 1024.0).epsilon(1e-12));
}

TEST_CASE("prediction symmetry under n -> -n with swapped potential") {
  TrigPotential v = pot1234();
  for (long n : {5L, 7L, 13L}) {
    GapPrediction a = predict_gap(n, v);
    GapPrediction b = predict_gap(-n, v.swapped());
    CHECK((a.predicted_gamma_squared - b.predicted_gamma_squared).abs().to_double() < 1e-70);
  }
  // for a=A=b=B the n and -n predictions coincide outright
  for (long n : {5L, 9L}) {
    CHECK(predict_gap(n, pot1111()).predicted_gamma_abs ==
          predict_gap(-n, pot1111()).predicted_gamma_abs);
  }
}

TEST_CASE("zero-coefficient error paths") {
  TrigPotential broken(Complex(1, 0, kBits), Complex(1, 0, kBits), Complex(1, 0, kBits),
                       Complex::zero(kBits));
  CHECK_THROWS_AS(predict_lambda(5, broken), ZeroCoefficientError);
  CHECK_THROWS_AS(predict_gap(5, broken), ZeroCoefficientError);
  CHECK_NOTHROW(predict_gap(6, broken));  // even n allowed
}

TEST_CASE("deviation_report columns") {
  PrecisionConfig cfg;
  TrigPotential v = pot1111();
  std::vector<SpectralPair> pairs;
  for (long n : {4L, 7L, 9L, 11L}) {
    pairs.push_back(n % 2 == 0 ? spectral_pair_series(n, v, cfg)
                               : spectral_pair_series(n, v, cfg));
  }
  DeviationReport rep = deviation_report(pairs, v, cfg);
  REQUIRE(rep.rows.size() == 4);

  const DeviationRow& even_row = rep.rows[0];
  CHECK(even_row.gap_zero);
  CHECK(even_row.gamma_abs.is_zero());
  CHECK(even_row.ratio_sq.re().is_nan());

  for (size_t i = 1; i < rep.rows.size(); ++i) {
    const DeviationRow& r = rep.rows[i];
    CHECK_FALSE(r.gap_zero);
    CHECK_FALSE(r.e_gap.is_nan());
    CHECK_FALSE(r.e_lambda.is_nan());
    // ratio_sq within the coarse asymptotic corridor
    CHECK(r.ratio_sq.re().to_double() > 0.5);
    CHECK(r.ratio_sq.re().to_double() < 1.5);
    // phi_check drifts toward 1; loosely bracketed at these small m
    CHECK(r.phi_check.to_double() > 0.3);
    CHECK(r.phi_check.to_double() < 1.7);
  }
  CHECK_FALSE(rep.unbounded_flag);
  CHECK(rep.max_e_lambda > 0L);
}

TEST_CASE("deviation_report refuses nothing: m = 1 rows carry NaN columns") {
  PrecisionConfig cfg;
  TrigPotential v = pot1111();
  std::vector<SpectralPair> pairs{spectral_pair_series(3, v, cfg)};
  DeviationReport rep = deviation_report(pairs, v, cfg);
  REQUIRE(rep.rows.size() == 1);
  CHECK(rep.rows[0].m == 1);
  CHECK(rep.rows[0].e_gap.is_nan());
  CHECK(rep.rows[0].phi_check.is_nan());
  CHECK_FALSE(rep.rows[0].e_lambda.is_nan());
}
