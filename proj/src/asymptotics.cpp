#include "dgap/asymptotics.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "dgap/errors.hpp"
#include "dgap/series.hpp"

namespace dgap {
namespace {

Complex pow_c(const Complex& x, long e, int bits) {
  Complex r = Complex::one(bits);
  for (long i = 0; i < e; ++i) r *= x;
  return r;
}

Real pow_r(const Real& x, long e, int bits) {
  Real r(1.0, bits);
  for (long i = 0; i < e; ++i) r *= x;
  return r;
}

void require_predictable(long n, const TrigPotential& v) {
  if (std::labs(n) < 3)
    throw std::invalid_argument("asymptotics: |n| must be >= 3");
  if (!v.nonzero())
    throw ZeroCoefficientError("asymptotics: all four coefficients must be nonzero");
}

}  // namespace

Complex predict_lambda(long n, const TrigPotential& v) {
  require_predictable(n, v);
  const int bits = v.precision_bits();
  const Complex Ab = v.A() * v.b();
  const Complex aB = v.a() * v.B();
  Complex result(Real(n, bits), Real(bits));
  result += (Ab + aB) / (2 * n);
  result += (aB - Ab) / (2 * n * n);
  return result;
}

GapPrediction predict_gap(long n, const TrigPotential& v) {
  if (std::labs(n) < 3)
    throw std::invalid_argument("asymptotics: |n| must be >= 3");
  const int bits = v.precision_bits();
  if (n % 2 == 0) {
    Complex lambda = v.nonzero() ? predict_lambda(n, v)
                                 : Complex(Real::nan(bits), Real::nan(bits));
    return GapPrediction{n, Complex(bits), Real(bits), std::move(lambda), {0, 0}};
  }
  require_predictable(n, v);
  const long m = (std::labs(n) - 1) / 2;
  const long s = (n > 0) ? m : m + 1;
  const long t = (n > 0) ? m + 1 : m;
  const Complex Ab = v.A() * v.b();
  const Complex aB = v.a() * v.B();
  Real fact = Real::factorial(static_cast<unsigned long>(m), bits);
  Real denom = ldexp2(fact * fact, 4 * m);  // 4^{2m} (m!)^2

  Complex gamma_sq = ldexp2(Real(1.0, bits), 2) * pow_c(Ab, s, bits) * pow_c(aB, t, bits) /
                     (denom * denom);
  Real gamma_abs =
      ldexp2(sqrt(pow_r(Ab.abs(), s, bits) * pow_r(aB.abs(), t, bits)), 1) / denom;
  return GapPrediction{n, std::move(gamma_sq), std::move(gamma_abs),
                       predict_lambda(n, v), {s, t}};
}

DeviationReport deviation_report(const std::vector<SpectralPair>& pairs,
                                 const TrigPotential& v, const PrecisionConfig& cfg) {
  cfg.validate();
  const int bits = cfg.precision_bits;
  const Real g = Real::euler_constant(bits);
  const Complex AbaB = v.A() * v.b() + v.a() * v.B();

  DeviationReport rep{{}, Real(bits), Real(bits), false};
  std::vector<double> early, late;
  for (const SpectralPair& p : pairs) {
    DeviationRow row{p.n,
                     (std::labs(p.n) % 2 != 0) ? (std::labs(p.n) - 1) / 2 : 0,
                     p.n % 2 == 0,
                     p.gamma.abs(),
                     Real::nan(bits),
                     Complex(Real::nan(bits), Real::nan(bits)),
                     Real::nan(bits),
                     Real::nan(bits),
                     Real::nan(bits)};
    GapPrediction pred = predict_gap(p.n, v);
    row.pred_gamma_abs = pred.predicted_gamma_abs;
    if (!pred.predicted_lambda.re().is_nan()) {
      const long n3 = p.n * p.n * p.n;
      row.e_lambda = (p.lambda_plus - pred.predicted_lambda).abs() * Real(std::labs(n3), bits);
      if (row.e_lambda > rep.max_e_lambda) rep.max_e_lambda = row.e_lambda;
    }
    if (!row.gap_zero && !pred.predicted_gamma_squared.is_zero()) {
      row.ratio_sq = (p.gamma * p.gamma) / pred.predicted_gamma_squared;
      if (row.m >= 2) {
        Real logm = log(Real(row.m, bits));
        row.e_gap = (row.ratio_sq - Complex::one(bits)).abs() * Real(row.m * row.m, bits) /
                    (logm * logm);
        if (row.e_gap > rep.max_e_gap) rep.max_e_gap = row.e_gap;
        // Diagnostic: Phi(n,0)*8m/((Ab+aB)(log m + g)) should drift toward 1.
        Complex phi0 = phi(p.n, Complex(bits), v).value;
        row.phi_check =
            (phi0 * Real(8 * row.m, bits) / (AbaB * (logm + g))).abs();
      }
    }
    if (!row.e_gap.is_nan()) {
      (row.m <= 7 ? early : late).push_back(row.e_gap.to_double());
    }
    rep.rows.push_back(std::move(row));
  }
  if (!early.empty() && !late.empty()) {
    double e0 = 0.0, l0 = 0.0;
    for (double x : early) e0 = std::max(e0, x);
    for (double x : late) l0 = std::max(l0, x);
    rep.unbounded_flag = l0 > 3.0 * e0;
  }
  return rep;
}

}  // namespace dgap
