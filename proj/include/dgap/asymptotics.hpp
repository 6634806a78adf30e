#ifndef DGAP_ASYMPTOTICS_HPP
#define DGAP_ASYMPTOTICS_HPP

#include <utility>
#include <vector>

#include "dgap/potential.hpp"
#include "dgap/precision.hpp"
#include "dgap/solver.hpp"

namespace dgap {

// Closed-form gap prediction. For n = +-(2m+1),
//   predicted_gamma_squared = 4 (Ab)^s (aB)^t / (4^{2m} (m!)^2)^2
// with (s,t) = (m, m+1) for n > 0 and (m+1, m) for n < 0; zero for even n.
// All gap comparisons downstream use gamma^2 or |gamma| only, since the
// paper's +- in front of the square root is an unresolved branch.
struct GapPrediction {
  long n;
  Complex predicted_gamma_squared;
  Real predicted_gamma_abs;
  Complex predicted_lambda;
  std::pair<long, long> bracket_exponents;  // powers of (Ab, aB)
};

// n + (Ab+aB)/2n + (aB-Ab)/2n^2. Requires all coefficients nonzero.
Complex predict_lambda(long n, const TrigPotential& v);

GapPrediction predict_gap(long n, const TrigPotential& v);

// One row of the deviation report; NaN marks columns that do not apply
// (even n, m <= 1 where log m degenerates, or zero predictions).
struct DeviationRow {
  long n;
  long m;           // (|n|-1)/2 for odd n, 0 otherwise
  bool gap_zero;    // even n
  Real gamma_abs;
  Real pred_gamma_abs;
  Complex ratio_sq;  // gamma^2 / predicted_gamma_squared
  Real e_gap;        // |ratio_sq - 1| * m^2 / log^2 m
  Real e_lambda;     // |lambda_plus - predict_lambda| * |n|^3
  Real phi_check;    // |Phi(n,0) * 8m / ((Ab+aB)(log m + g))|, g Euler's constant
};

struct DeviationReport {
  std::vector<DeviationRow> rows;
  Real max_e_gap;
  Real max_e_lambda;
  bool unbounded_flag;  // late e_gap values drifting above 3x the early ones
};

DeviationReport deviation_report(const std::vector<SpectralPair>& pairs,
                                 const TrigPotential& v, const PrecisionConfig& cfg);

}  // namespace dgap

#endif  // DGAP_ASYMPTOTICS_HPP
