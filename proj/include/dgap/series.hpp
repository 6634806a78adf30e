#ifndef DGAP_SERIES_HPP
#define DGAP_SERIES_HPP

#include <utility>

#include "dgap/potential.hpp"
#include "dgap/precision.hpp"

namespace dgap {

// Which beta series: plus = X-walks (-n -> n), minus = Y-walks (n -> -n).
enum class Sign { plus, minus };

// A truncated series with its truncation-error certificate. If heuristic is
// false, tail_bound rigorously dominates the dropped remainder (geometric
// majorants from the walk-count bound and from the descent recursion
// sigma*_r <= sigma*_{r-1} * Phi*). Otherwise tail_bound is a geometric
// extrapolation of the observed decay.
struct SeriesValue {
  Complex value;
  Real tail_bound;
  unsigned terms_used;
  bool heuristic;
};

// Phi(n,z) of the first-descent factorization sigma_1 = sigma_0 * Phi, and
// Phi*(n,z), the sum of the absolute values of its terms.
struct PhiFactor {
  Complex value;
  Real abs_sum;
};

// sigma_r^{+/-}(n,z): dynamic-programming sum over X_n(r) / Y_n(r); equals the
// brute-force walk sum exactly. Returns 0 for even n. |n| must be >= 3 for
// odd n; |z| <= 1/2 keeps all denominators away from zero.
Complex sigma(Sign sign, long n, long r, const Complex& z, const TrigPotential& v);

// sigma*_r: same sum with every walk weight replaced by its absolute value.
Real sigma_star(Sign sign, long n, long r, const Complex& z, const TrigPotential& v);

// tau_nu(n,z): loop-walk sum over W_n(nu). |n| >= 2, nu >= 1.
Complex tau(long n, long nu, const Complex& z, const TrigPotential& v);

// beta_n^{+/-}(z) = sum_r sigma_r, with the stopping rule and tail
// certificates described in SeriesValue. Even n returns an exact zero.
SeriesValue beta(Sign sign, long n, const Complex& z, const TrigPotential& v,
                 const PrecisionConfig& cfg);

// alpha_n(z) = sum_nu tau_nu(n,z).
SeriesValue alpha(long n, const Complex& z, const TrigPotential& v,
                  const PrecisionConfig& cfg);

// Phi / Phi* by direct summation; n odd, |n| >= 3.
PhiFactor phi(long n, const Complex& z, const TrigPotential& v);

// Hard caps on summed terms. beta's cap of 64 bounds the engine length at
// |n| + 128 steps; alpha terms are cheap and small-|n| runs with strong
// potentials decay slowly (observed ratio 0.56 at n = 5, D = 4), so alpha
// gets more headroom.
inline constexpr long kBetaTermCap = 64;
inline constexpr long kAlphaTermCap = 256;

}  // namespace dgap

#endif  // DGAP_SERIES_HPP
