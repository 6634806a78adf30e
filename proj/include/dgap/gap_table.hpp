#ifndef DGAP_GAP_TABLE_HPP
#define DGAP_GAP_TABLE_HPP

#include <string>
#include <vector>

#include "dgap/runconfig.hpp"
#include "dgap/solver.hpp"

namespace dgap {

// One output row of the gaps table. NaN marks columns that do not apply to
// the row (asymptotic rows carry no computed gamma; failed rows carry only
// their status tag).
struct GapRow {
  long n = 0;
  std::string method;
  int precision_bits = 0;
  Complex lambda_minus;
  Complex lambda_plus;
  Complex gamma;
  Real gamma_abs;
  Real pred_gamma_abs;
  Real ratio_sq;  // (gamma_abs / pred_gamma_abs)^2
  Real err_est;
  unsigned iterations = 0;
  std::string status = "ok";

  explicit GapRow(int bits)
      : precision_bits(bits),
        lambda_minus(Real::nan(bits), Real::nan(bits)),
        lambda_plus(Real::nan(bits), Real::nan(bits)),
        gamma(Real::nan(bits), Real::nan(bits)),
        gamma_abs(Real::nan(bits)),
        pred_gamma_abs(Real::nan(bits)),
        ratio_sq(Real::nan(bits)),
        err_est(Real::nan(bits)) {}
};

// Rows for every n in the range: one per n for a single method, two (series
// then matrix) for method both, in n-major order. Row-level failures land in
// the status column; they never abort the run.
std::vector<GapRow> compute_gap_rows(const RunConfig& cfg);

// Fixed header; numbers in decimal scientific notation with sig_digits
// significant digits. Identical inputs render byte-identically.
extern const char* const kGapTableHeader;
std::string rows_to_csv(const std::vector<GapRow>& rows, int sig_digits);
std::string rows_to_json(const std::vector<GapRow>& rows, int sig_digits);

// 0 if all rows ok, 3 if any row failed.
int rows_exit_code(const std::vector<GapRow>& rows);

}  // namespace dgap

#endif  // DGAP_GAP_TABLE_HPP
