#include "dgap/gap_table.hpp"

#include <json.hpp>

#include "dgap/asymptotics.hpp"
#include "dgap/errors.hpp"
#include "dgap/matrix_oracle.hpp"

namespace dgap {
namespace {

void fill_prediction(GapRow& row, long n, const TrigPotential& v) {
  if (std::labs(n) < 3) return;
  try {
    GapPrediction pred = predict_gap(n, v);
    row.pred_gamma_abs = pred.predicted_gamma_abs;
  } catch (const ZeroCoefficientError&) {
    // leave NaN: predictors need all four coefficients
  }
}

void fill_from_pair(GapRow& row, const SpectralPair& p) {
  row.lambda_minus = p.lambda_minus;
  row.lambda_plus = p.lambda_plus;
  row.gamma = p.gamma;
  row.gamma_abs = p.gamma.abs();
  row.err_est = p.error_estimate;
  row.iterations = p.iterations;
  if (!row.pred_gamma_abs.is_nan() && !row.pred_gamma_abs.is_zero()) {
    Real r = row.gamma_abs / row.pred_gamma_abs;
    row.ratio_sq = r * r;
  }
}

std::string classify_error(const std::exception& e) {
  if (dynamic_cast<const NonConvergentError*>(&e)) return "non-convergent";
  if (dynamic_cast<const LocalizationError*>(&e)) return "localization";
  if (dynamic_cast<const BranchInstabilityError*>(&e)) return "branch-instability";
  if (dynamic_cast<const SingularDenominatorError*>(&e)) return "singular-denominator";
  if (dynamic_cast<const NumericalFailureError*>(&e)) return "numerical-failure";
  if (dynamic_cast<const ZeroCoefficientError*>(&e)) return "zero-coefficient";
  if (dynamic_cast<const std::invalid_argument*>(&e)) return "invalid-argument";
  return "error";
}

GapRow make_row(long n, Method method, const RunConfig& cfg, const TrigPotential& v,
                const PrecisionConfig& pc) {
  GapRow row(cfg.precision_bits);
  row.n = n;
  row.method = method_name(method);
  fill_prediction(row, n, v);
  try {
    if (method == Method::series) {
      fill_from_pair(row, spectral_pair_series(n, v, pc));
    } else if (method == Method::matrix) {
      fill_from_pair(row, spectral_pair_matrix(n, v, pc));
    } else {
      // asymptotic prediction only: lambda from the closed form, gap
      // magnitude from the closed form; the sign of gamma is an unresolved
      // square-root branch, so gamma itself stays NaN.
      GapPrediction pred = predict_gap(n, v);
      row.lambda_minus = pred.predicted_lambda;
      row.lambda_plus = pred.predicted_lambda;
      row.gamma_abs = pred.predicted_gamma_abs;
    }
  } catch (const std::exception& e) {
    row.status = classify_error(e);
  }
  return row;
}

}  // namespace

std::vector<GapRow> compute_gap_rows(const RunConfig& cfg) {
  PrecisionConfig pc = cfg.precision();
  TrigPotential v = cfg.potential_value();
  std::vector<GapRow> rows;
  for (long n = cfg.n_start; n <= cfg.n_end; ++n) {
    switch (cfg.method) {
      case MethodChoice::series:
        rows.push_back(make_row(n, Method::series, cfg, v, pc));
        break;
      case MethodChoice::matrix:
        rows.push_back(make_row(n, Method::matrix, cfg, v, pc));
        break;
      case MethodChoice::both:
        rows.push_back(make_row(n, Method::series, cfg, v, pc));
        rows.push_back(make_row(n, Method::matrix, cfg, v, pc));
        break;
      case MethodChoice::asym:
        rows.push_back(make_row(n, Method::asymptotic, cfg, v, pc));
        break;
    }
  }
  return rows;
}

const char* const kGapTableHeader =
    "n,method,precision_bits,lambda_minus_re,lambda_minus_im,lambda_plus_re,"
    "lambda_plus_im,gamma_re,gamma_im,gamma_abs,pred_gamma_abs,ratio_sq,err_est,"
    "iterations,status";

std::string rows_to_csv(const std::vector<GapRow>& rows, int sig_digits) {
  std::string out = kGapTableHeader;
  out += "\n";
  for (const GapRow& r : rows) {
    out += std::to_string(r.n) + "," + r.method + "," + std::to_string(r.precision_bits);
    for (const Real* x :
         {&r.lambda_minus.re(), &r.lambda_minus.im(), &r.lambda_plus.re(),
          &r.lambda_plus.im(), &r.gamma.re(), &r.gamma.im(), &r.gamma_abs,
          &r.pred_gamma_abs, &r.ratio_sq, &r.err_est}) {
      out += ",";
      out += x->to_scientific(sig_digits);
    }
    out += "," + std::to_string(r.iterations) + "," + r.status + "\n";
  }
  return out;
}

std::string rows_to_json(const std::vector<GapRow>& rows, int sig_digits) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const GapRow& r : rows) {
    nlohmann::ordered_json o;
    o["n"] = r.n;
    o["method"] = r.method;
    o["precision_bits"] = r.precision_bits;
    o["lambda_minus_re"] = r.lambda_minus.re().to_scientific(sig_digits);
    o["lambda_minus_im"] = r.lambda_minus.im().to_scientific(sig_digits);
    o["lambda_plus_re"] = r.lambda_plus.re().to_scientific(sig_digits);
    o["lambda_plus_im"] = r.lambda_plus.im().to_scientific(sig_digits);
    o["gamma_re"] = r.gamma.re().to_scientific(sig_digits);
    o["gamma_im"] = r.gamma.im().to_scientific(sig_digits);
    o["gamma_abs"] = r.gamma_abs.to_scientific(sig_digits);
    o["pred_gamma_abs"] = r.pred_gamma_abs.to_scientific(sig_digits);
    o["ratio_sq"] = r.ratio_sq.to_scientific(sig_digits);
    o["err_est"] = r.err_est.to_scientific(sig_digits);
    o["iterations"] = r.iterations;
    o["status"] = r.status;
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

int rows_exit_code(const std::vector<GapRow>& rows) {
  for (const GapRow& r : rows)
    if (r.status != "ok") return 3;
  return 0;
}

}  // namespace dgap
