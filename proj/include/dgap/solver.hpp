#ifndef DGAP_SOLVER_HPP
#define DGAP_SOLVER_HPP

#include "dgap/series.hpp"

namespace dgap {

enum class Method { series, matrix, asymptotic };

const char* method_name(Method m);

// The artifact's main output record: the two eigenvalues localized in the
// disc |lambda - n| < 1/2, ordered by (Re, then Im), and their gap.
struct SpectralPair {
  long n;
  Complex lambda_minus;
  Complex lambda_plus;
  Complex gamma;  // lambda_plus - lambda_minus
  Method method;
  Real error_estimate;
  unsigned iterations;
};

// The two scalar equations the characteristic equation splits into:
//   E1: z - alpha(z) - sqrt(beta- beta+)(z) = 0
//   E2: z - alpha(z) + sqrt(beta- beta+)(z) = 0
enum class Branch { E1, E2 };

struct BranchRoot {
  Complex root;
  unsigned iterations;
  Real error_estimate;
  bool contraction_warning;  // successive step ratio exceeded 0.9
  bool used_newton;          // fixed point failed, Newton fallback converged
};

// Analytic square root of beta-(z) beta+(z): principal square root of the
// closed-form product sigma0-(n,0) sigma0+(n,0) times (1+r-)^{1/2}(1+r+)^{1/2}
// with r+- = beta+-(z)/sigma0+-(n,0) - 1. Branch-consistent for fixed n.
// Throws BranchInstabilityError if |r+-| >= 1/2.
Complex sqrt_beta_product(long n, const Complex& z, const TrigPotential& v,
                          const PrecisionConfig& cfg);

// Closed-form sigma0^{+/-}(n, 0) (four sign/direction variants).
Complex sigma0_closed_form(Sign sign, long n, const TrigPotential& v, int bits);

// Root of the chosen branch by fixed-point iteration z <- alpha(z) -/+ sqrt,
// started at (Ab+aB)/2n; Newton on (z-alpha)^2 - beta-beta+ as fallback.
BranchRoot solve_branch(long n, Branch branch, const TrigPotential& v,
                        const PrecisionConfig& cfg);

// Both eigenvalues near n by the series route. Even n: single fixed point of
// z = alpha(z), gamma exactly zero. Odd n: both branch roots. Roots outside
// |z| < 1/2 raise LocalizationError (outside the localization regime).
SpectralPair spectral_pair_series(long n, const TrigPotential& v,
                                  const PrecisionConfig& cfg);

// |(z - alpha(z))^2 - beta-(z) beta+(z)|, the characteristic-equation
// residual used by the acceptance checks.
Real characteristic_residual(long n, const Complex& z, const TrigPotential& v,
                             const PrecisionConfig& cfg);

// Pair ordering: by real part, ties by imaginary part.
bool pair_order_less(const Complex& x, const Complex& y);

}  // namespace dgap

#endif  // DGAP_SOLVER_HPP
