#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

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
TrigPotential potZero() {
  return TrigPotential(Complex::zero(kBits), Complex::zero(kBits), Complex::zero(kBits),
                       Complex::zero(kBits));
}
Complex z0() { return Complex(kBits); }
PrecisionConfig cfg256() { return PrecisionConfig{}; }
}  // namespace

TEST_CASE("sigma0 closed form matches the four variants") {
  TrigPotential v = pot1234();
  // m=1: A B^2/16 = 2, a b^2/16, a^2 b/16, A^2 B/16
  CHECK(sigma0_closed_form(Sign::plus, 3, v, kBits) == Complex(2.0, 0.0, kBits));
  CHECK(sigma0_closed_form(Sign::plus, -3, v, kBits) == Complex(0.5625, 0.0, kBits));
  CHECK(sigma0_closed_form(Sign::minus, 3, v, kBits) == Complex(0.1875, 0.0, kBits));
  CHECK(sigma0_closed_form(Sign::minus, -3, v, kBits) == Complex(1.0, 0.0, kBits));
}

TEST_CASE("sqrt_beta_product: even n and zero potential give 0") {
  CHECK(sqrt_beta_product(4, z0(), pot1234(), cfg256()).is_zero());
  CHECK(sqrt_beta_product(7, z0(), potZero(), cfg256()).is_zero());
}

TEST_CASE("sqrt_beta_product squares back to beta- * beta+") {
  PrecisionConfig cfg = cfg256();
  cfg.rel_tol = 1e-12;  // keeps the slow-decay (1,2,3,4) case inside the beta cap
  auto check_square = [&](long n, const TrigPotential& v, const Complex& z) {
    Complex s = sqrt_beta_product(n, z, v, cfg);
    SeriesValue bp = beta(Sign::plus, n, z, v, cfg);
    SeriesValue bm = beta(Sign::minus, n, z, v, cfg);
    Complex prod = bm.value * bp.value;
    Real allowance = bp.tail_bound * bm.value.abs() + bm.tail_bound * bp.value.abs() +
                     bp.tail_bound * bm.tail_bound + ldexp2(prod.abs(), -200);
    CHECK((s * s - prod).abs() <= allowance + ldexp2(allowance, 4));
  };
  for (long n : {5L, 7L, -9L}) check_square(n, pot1111(), Complex(0.02, 0.005, kBits));
  // the strong potential needs z near the root for |beta/sigma0 - 1| < 1/2
  check_square(21, pot1234(), Complex(10.0 / 42, 0.0, kBits));
}

TEST_CASE("sqrt_beta_product flags branch instability away from the root") {
  // (1,2,3,4) at n=5, z far from the root: beta/sigma0 ~ 1/(1-Phi) ~ 2.3
  PrecisionConfig cfg = cfg256();
  cfg.rel_tol = 1e-12;
  CHECK_THROWS_AS(sqrt_beta_product(5, Complex(0.02, 0.005, kBits), pot1234(), cfg),
                  BranchInstabilityError);
}

TEST_CASE("sqrt_beta_product first-order magnitude at z=0") {
  // value ~ sqrt(sigma0- sigma0+) within the (1 + r) factors' reach
  TrigPotential v = pot1111();
  for (long n : {7L, 11L}) {
    Complex s = sqrt_beta_product(n, z0(), v, cfg256());
    Complex ref = sqrt(sigma0_closed_form(Sign::minus, n, v, kBits) *
                       sigma0_closed_form(Sign::plus, n, v, kBits));
    CHECK((s - ref).abs() <= ref.abs());  // same order
    CHECK((s - ref).abs().to_double() / ref.abs().to_double() < 0.5);
  }
}

TEST_CASE("solve_branch: zero potential returns 0 for both branches") {
  for (Branch b : {Branch::E1, Branch::E2}) {
    BranchRoot r = solve_branch(5, b, potZero(), cfg256());
    CHECK(r.root.is_zero());
  }
}

TEST_CASE("branch roots differ by ~2 sqrt_beta_product") {
  TrigPotential v = pot1111();
  PrecisionConfig cfg = cfg256();
  for (long n : {7L, 11L}) {
    BranchRoot r1 = solve_branch(n, Branch::E1, v, cfg);
    BranchRoot r2 = solve_branch(n, Branch::E2, v, cfg);
    Complex diff = r1.root - r2.root;
    Complex twice_sqrt = ldexp2(Real(1.0, kBits), 1) * sqrt_beta_product(n, r1.root, v, cfg);
    // agreement up to the gamma * O(1/m^2) correction of the alpha difference
    double m = (n - 1) / 2.0;
    CHECK((diff - twice_sqrt).abs().to_double() <
          4.0 / (m * m) * diff.abs().to_double() + 1e-60);
  }
}

TEST_CASE("spectral_pair_series: even n collapses exactly") {
  SpectralPair p = spectral_pair_series(4, pot1111(), cfg256());
  CHECK(p.gamma.is_zero());
  CHECK(p.lambda_minus == p.lambda_plus);
  CHECK(p.method == Method::series);
  CHECK((p.lambda_minus - Complex(4.0, 0.0, kBits)).abs() < Real(0.5, kBits));
  // z_4^* for (1,1,1,1) sits near +0.2617 (cross-checked against the matrix
  // oracle in test_oracle).
  CHECK(p.lambda_minus.re().to_double() == doctest::Approx(4.26173).epsilon(1e-4));
}

TEST_CASE("even-n series route is out of regime for the strong potential") {
  // For (1,2,3,4) the walk series no longer represents the resolvent at
  // n = 4: the fixed point of z = alpha(z) sits outside |z| < 1/2 while the
  // matrix oracle finds the true double eigenvalue at 3.845. The series route
  // must refuse rather than fabricate a pair.
  CHECK_THROWS_AS(spectral_pair_series(4, pot1234(), cfg256()), LocalizationError);
}

TEST_CASE("spectral_pair_series at (1,1,1,1), n=3: both roots in-disc and ordered") {
  SpectralPair p = spectral_pair_series(3, pot1111(), cfg256());
  CHECK(p.lambda_minus.re() < p.lambda_plus.re());
  CHECK((p.lambda_minus - Complex(3.0, 0.0, kBits)).abs() < Real(0.5, kBits));
  CHECK((p.lambda_plus - Complex(3.0, 0.0, kBits)).abs() < Real(0.5, kBits));
  CHECK(p.gamma == p.lambda_plus - p.lambda_minus);
  // float64 matrix probe: 3.3052 / 3.4086
  CHECK(p.lambda_minus.re().to_double() == doctest::Approx(3.30518).epsilon(1e-4));
  CHECK(p.lambda_plus.re().to_double() == doctest::Approx(3.40857).epsilon(1e-4));
}

TEST_CASE("eigenvalue asymptotics: z ~ (Ab+aB)/2n + (aB-Ab)/2n^2 at large n") {
  TrigPotential v = pot1234();
  PrecisionConfig cfg = cfg256();
  // n^3-scaled remainder stays bounded as n grows
  double prev = 1e300;
  for (long n : {21L, 41L, 81L}) {
    SpectralPair p = spectral_pair_series(n, v, cfg);
    Complex pred(Real(n, kBits), Real(kBits));
    pred += Complex(10.0, 0.0, kBits) / (2 * n);
    pred += Complex(-2.0, 0.0, kBits) / (2 * n * n);
    double rem = (p.lambda_plus - pred).abs().to_double() * n * n * n;
    CHECK(rem < 1e3);
    CHECK(rem < prev * 3.0);  // boundedness, not growth
    prev = rem;
  }
}

TEST_CASE("characteristic residual small at returned roots") {
  PrecisionConfig cfg = cfg256();
  for (const TrigPotential& v : {pot1111(), pot1234()}) {
    for (long n : {11L, -13L}) {
      SpectralPair p = spectral_pair_series(n, v, cfg);
      Complex zm = p.lambda_minus - Complex(Real(n, kBits), Real(kBits));
      Complex zp = p.lambda_plus - Complex(Real(n, kBits), Real(kBits));
      CHECK(characteristic_residual(n, zm, v, cfg) <= ldexp2(p.error_estimate, 4));
      CHECK(characteristic_residual(n, zp, v, cfg) <= ldexp2(p.error_estimate, 4));
    }
  }
}

TEST_CASE("series route refuses out-of-regime roots") {
  // (1,2,3,4) at n=7: the true pair sits at ~7.69, outside |z| < 1/2; the
  // solver must not fabricate a localized pair (it converges out-of-disc or
  // fails to converge, depending on the branch).
  CHECK_THROWS(spectral_pair_series(7, pot1234(), cfg256()));
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(spectral_pair_series(2, pot1234(), cfg256()), std::invalid_argument);
  CHECK_THROWS_AS(solve_branch(4, Branch::E1, pot1234(), cfg256()), std::invalid_argument);
  PrecisionConfig bad;
  bad.precision_bits = 10;
  CHECK_THROWS_AS(spectral_pair_series(5, pot1234(), bad), std::invalid_argument);
}
