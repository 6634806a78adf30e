#include "dgap/solver.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

#include "dgap/errors.hpp"

namespace dgap {
namespace {

constexpr unsigned kMaxIterations = 100;

Complex pow_c(const Complex& x, long e, int bits) {
  Complex r = Complex::one(bits);
  for (long i = 0; i < e; ++i) r *= x;
  return r;
}

Real stop_threshold(const Complex& z, long n, const PrecisionConfig& cfg, int bits) {
  return Real(cfg.rel_tol, bits) * max(z.abs(), Real(1.0, bits) / std::labs(n));
}

struct SqrtBeta {
  Complex value;
  Real tail;  // absolute perturbation bound from the beta truncation tails
};

SqrtBeta sqrt_beta_product_with_tail(long n, const Complex& z, const TrigPotential& v,
                                     const PrecisionConfig& cfg) {
  const int bits = cfg.precision_bits;
  if (n % 2 == 0) return SqrtBeta{Complex(bits), Real(bits)};

  const Complex s0p = sigma0_closed_form(Sign::plus, n, v, bits);
  const Complex s0m = sigma0_closed_form(Sign::minus, n, v, bits);
  // A vanishing sigma0 forces the whole beta series to vanish (a zero
  // coefficient kills every walk weight of that class).
  if (s0p.is_zero() || s0m.is_zero()) return SqrtBeta{Complex(bits), Real(bits)};

  const SeriesValue bp = beta(Sign::plus, n, z, v, cfg);
  const SeriesValue bm = beta(Sign::minus, n, z, v, cfg);
  const Complex one = Complex::one(bits);
  const Complex rp = bp.value / s0p - one;
  const Complex rm = bm.value / s0m - one;
  const Real half(0.5, bits);
  if (!(rp.abs() < half) || !(rm.abs() < half))
    throw BranchInstabilityError(
        "sqrt_beta_product: |beta/sigma0 - 1| >= 1/2 at n = " + std::to_string(n));

  Complex value = sqrt(s0m * s0p) * sqrt(one + rm) * sqrt(one + rp);
  // d sqrt(xy) = sqrt(xy)/2 * (dx/x + dy/y); doubled as cushion.
  Real tail = value.abs() * (bp.tail_bound / bp.value.abs() + bm.tail_bound / bm.value.abs());
  return SqrtBeta{std::move(value), std::move(tail)};
}

// Newton iteration on F with a central-difference derivative; h loses a third
// of the working bits, which still leaves the quotient F/F' far below every
// stopping threshold in use.
struct NewtonResult {
  Complex root;
  unsigned iterations;
  Real last_step;
};

template <typename Func>
NewtonResult newton_solve(Func&& F, Complex z, long n, const PrecisionConfig& cfg, int bits) {
  const Real one(1.0, bits);
  for (unsigned it = 1; it <= kMaxIterations; ++it) {
    Real scale = max(z.abs(), one / std::labs(n));
    Complex h(scale * ldexp2(one, -(bits / 3)));
    Complex fp = (F(z + h) - F(z - h)) / (h * 2L);
    if (fp.is_zero())
      throw NonConvergentError("newton: vanishing derivative at n = " + std::to_string(n));
    Complex d = F(z) / fp;
    z -= d;
    Real dn = d.abs();
    if (dn <= stop_threshold(z, n, cfg, bits)) return NewtonResult{z, it, std::move(dn)};
  }
  throw NonConvergentError("newton: no convergence after " +
                           std::to_string(kMaxIterations) + " iterations (n = " +
                           std::to_string(n) + ")");
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::series: return "series";
    case Method::matrix: return "matrix";
    case Method::asymptotic: return "asymptotic";
  }
  return "?";
}

bool pair_order_less(const Complex& x, const Complex& y) {
  if (x.re() < y.re()) return true;
  if (y.re() < x.re()) return false;
  return x.im() < y.im();
}

Complex sigma0_closed_form(Sign sign, long n, const TrigPotential& v, int bits) {
  if (n % 2 == 0 || std::labs(n) < 3)
    throw std::invalid_argument("sigma0_closed_form: n must be odd with |n| >= 3");
  const long m = (std::labs(n) - 1) / 2;
  const bool pos = n > 0;
  // (Ab+): A^m B^{m+1} | (ab+): a^m b^{m+1} | (-): a^{m+1} b^m / A^{m+1} B^m.
  const Complex& first = (sign == Sign::plus) == pos ? v.A() : v.a();
  const Complex& second = (sign == Sign::plus) == pos ? v.B() : v.b();
  const long e1 = (sign == Sign::plus) ? m : m + 1;
  const long e2 = (sign == Sign::plus) ? m + 1 : m;
  Real fact = Real::factorial(static_cast<unsigned long>(m), bits);
  Real denom = ldexp2(fact * fact, 4 * m);  // 4^{2m} (m!)^2
  return pow_c(first, e1, bits) * pow_c(second, e2, bits) / denom;
}

Complex sqrt_beta_product(long n, const Complex& z, const TrigPotential& v,
                          const PrecisionConfig& cfg) {
  cfg.validate();
  return sqrt_beta_product_with_tail(n, z, v, cfg).value;
}

BranchRoot solve_branch(long n, Branch branch, const TrigPotential& v,
                        const PrecisionConfig& cfg) {
  cfg.validate();
  if (n % 2 == 0 || std::labs(n) < 3)
    throw std::invalid_argument("solve_branch: n must be odd with |n| >= 3");
  const int bits = cfg.precision_bits;
  const long sgn = (branch == Branch::E1) ? +1 : -1;

  const Complex z0 = (v.A() * v.b() + v.a() * v.B()) / (2 * n);
  Complex z = z0;
  Real prev_step = Real::nan(bits);
  bool warn = false;

  for (unsigned it = 1; it <= kMaxIterations; ++it) {
    SeriesValue a = alpha(n, z, v, cfg);
    SqrtBeta s = sqrt_beta_product_with_tail(n, z, v, cfg);
    Complex znew = (sgn > 0) ? a.value + s.value : a.value - s.value;
    Real step = (znew - z).abs();
    if (!prev_step.is_nan() && prev_step > 0L && step / prev_step > Real(0.9, bits))
      warn = true;
    z = std::move(znew);
    Real thr = stop_threshold(z, n, cfg, bits);
    if (step <= thr) {
      Real err = step + thr + ldexp2(a.tail_bound + s.tail, 1);
      return BranchRoot{std::move(z), it, std::move(err), warn, false};
    }
    prev_step = std::move(step);
  }

  // Contraction failed (small-|n| regime); fall back to Newton on the
  // characteristic polynomial, seeded on this branch's side.
  auto F = [&](const Complex& zz) {
    SeriesValue a = alpha(n, zz, v, cfg);
    SeriesValue bp = beta(Sign::plus, n, zz, v, cfg);
    SeriesValue bm = beta(Sign::minus, n, zz, v, cfg);
    Complex w = zz - a.value;
    return w * w - bm.value * bp.value;
  };
  SqrtBeta s0 = sqrt_beta_product_with_tail(n, z0, v, cfg);
  Complex seed = (sgn > 0) ? z0 + s0.value : z0 - s0.value;
  NewtonResult nr = newton_solve(F, seed, n, cfg, bits);

  SeriesValue a = alpha(n, nr.root, v, cfg);
  SqrtBeta s = sqrt_beta_product_with_tail(n, nr.root, v, cfg);
  Real err = ldexp2(max(nr.last_step, stop_threshold(nr.root, n, cfg, bits)), 2) +
             ldexp2(a.tail_bound + s.tail, 1);
  return BranchRoot{std::move(nr.root), kMaxIterations + nr.iterations, std::move(err),
                    true, true};
}

SpectralPair spectral_pair_series(long n, const TrigPotential& v,
                                  const PrecisionConfig& cfg) {
  cfg.validate();
  if (std::labs(n) < 3)
    throw std::invalid_argument("spectral_pair_series: |n| must be >= 3");
  const int bits = cfg.precision_bits;
  const Real half(0.5, bits);
  const Complex nn(Real(n, bits), Real(bits));

  if (n % 2 == 0) {
    // beta vanishes identically; the characteristic equation degenerates to
    // the double root z = alpha(z).
    const Complex z0 = (v.A() * v.b() + v.a() * v.B()) / (2 * n);
    Complex z = z0;
    unsigned iters = 0;
    Real err(bits);
    bool converged = false;
    for (unsigned it = 1; it <= kMaxIterations; ++it) {
      SeriesValue a = alpha(n, z, v, cfg);
      Real step = (a.value - z).abs();
      z = a.value;
      Real thr = stop_threshold(z, n, cfg, bits);
      if (step <= thr) {
        err = step + thr + ldexp2(a.tail_bound, 1);
        iters = it;
        converged = true;
        break;
      }
    }
    if (!converged) {
      auto G = [&](const Complex& zz) { return zz - alpha(n, zz, v, cfg).value; };
      NewtonResult nr = newton_solve(G, z0, n, cfg, bits);
      z = nr.root;
      iters = kMaxIterations + nr.iterations;
      SeriesValue a = alpha(n, z, v, cfg);
      err = ldexp2(max(nr.last_step, stop_threshold(z, n, cfg, bits)), 2) + ldexp2(a.tail_bound, 1);
    }
    if (!(z.abs() < half))
      throw LocalizationError(0, "spectral_pair_series: even-n fixed point outside the disc"
                                 " |z| < 1/2 at n = " + std::to_string(n));
    Complex lambda = nn + z;
    return SpectralPair{n, lambda, lambda, Complex(bits), Method::series, std::move(err),
                        iters};
  }

  BranchRoot r1 = solve_branch(n, Branch::E1, v, cfg);
  BranchRoot r2 = solve_branch(n, Branch::E2, v, cfg);
  if (!(r1.root.abs() < half) || !(r2.root.abs() < half))
    throw LocalizationError(0, "spectral_pair_series: branch root outside the disc"
                               " |z| < 1/2 at n = " + std::to_string(n));
  if (r1.used_newton || r2.used_newton) {
    // Newton runs from the two seeds may land on the same root; that is a
    // failure unless the branch separation 2 sqrt(beta- beta+) is itself
    // below the combined error estimate.
    Real sep = (r1.root - r2.root).abs();
    Real combined = (r1.error_estimate + r2.error_estimate) * 10L;
    if (sep <= combined && sqrt_beta_product(n, r1.root, v, cfg).abs() > combined)
      throw NonConvergentError(
          "spectral_pair_series: Newton branches collapsed onto one root at n = " +
          std::to_string(n));
  }
  Complex la = nn + r1.root;
  Complex lb = nn + r2.root;
  if (pair_order_less(lb, la)) std::swap(la, lb);
  Complex gamma = lb - la;
  return SpectralPair{n, std::move(la), std::move(lb), std::move(gamma), Method::series,
                      r1.error_estimate + r2.error_estimate,
                      std::max(r1.iterations, r2.iterations)};
}

Real characteristic_residual(long n, const Complex& z, const TrigPotential& v,
                             const PrecisionConfig& cfg) {
  SeriesValue a = alpha(n, z, v, cfg);
  SeriesValue bp = beta(Sign::plus, n, z, v, cfg);
  SeriesValue bm = beta(Sign::minus, n, z, v, cfg);
  Complex w = z - a.value;
  return (w * w - bm.value * bp.value).abs();
}

}  // namespace dgap
