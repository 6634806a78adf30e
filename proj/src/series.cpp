#include "dgap/series.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "dgap/errors.hpp"

namespace dgap {
namespace {

enum class EngineKind { X, Y, W };

// Forward DP over (step count t, vertex j), shared by the three walk classes.
// Lattice slots are j = jmin + 2*idx. The class term (sigma_r or tau_nu) is
// read off the target slot at its length before interior filtering, since the
// endpoint is not an interior vertex; surviving slots are then filtered and
// divided by their resolvent factor and the walk continues toward the next
// term. One engine pass therefore yields sigma_0, sigma_1, ... incrementally.
//
// Two lanes run in lockstep: complex walk-weight sums and, optionally, sums of
// absolute weights (sigma*_r), which feed the descent-recursion tail bound.
class WalkSumEngine {
public:
  WalkSumEngine(EngineKind kind, long n, const Complex& z, const TrigPotential& v,
                long max_terms, bool abs_lane, int bits)
      : kind_(kind),
        n_(n),
        bits_(bits),
        z_(z),
        abs_lane_(abs_lane),
        coeff_{v.fourier_coefficient(Component::P, 2), v.fourier_coefficient(Component::P, -2),
               v.fourier_coefficient(Component::Q, 2), v.fourier_coefficient(Component::Q, -2)},
        coeff_abs_{coeff_[0].abs(), coeff_[1].abs(), coeff_[2].abs(), coeff_[3].abs()},
        last_abs_(bits) {
    const long span = std::labs(n_) + 2 * max_terms + 2;
    jmin_ = -span;
    slots_ = span + 1;  // lattice step 2
    cur_.assign(static_cast<size_t>(slots_), Complex(bits_));
    if (abs_lane_) cur_abs_.assign(static_cast<size_t>(slots_), Real(bits_));
    lo_ = hi_ = slot_of(start());
    cur_[static_cast<size_t>(lo_)] = Complex::one(bits_);
    if (abs_lane_) cur_abs_[static_cast<size_t>(lo_)] = Real(1.0, bits_);
  }

  // Advance to the next read point and return the term: sigma_0, sigma_1, ...
  // for X/Y, tau_1, tau_2, ... for W.
  Complex next_term() {
    const long first = (kind_ == EngineKind::W) ? 2 : std::labs(n_);
    const long stop = (t_ < first) ? first : t_ + 2;
    while (t_ < stop) step();
    const long u = slot_of(target());
    if (abs_lane_) last_abs_ = cur_abs_[static_cast<size_t>(u)];
    return cur_[static_cast<size_t>(u)];
  }

  // sigma*_r for the term returned by the last next_term() call.
  const Real& last_term_abs_sum() const { return last_abs_; }

private:
  long start() const { return kind_ == EngineKind::X ? -n_ : n_; }
  long target() const { return kind_ == EngineKind::Y ? -n_ : n_; }
  long slot_of(long j) const { return (j - jmin_) / 2; }

  bool q_at_odd() const { return kind_ == EngineKind::X; }
  bool minus_at_odd() const { return kind_ == EngineKind::X; }

  bool vertex_allowed(long pos, long j) const {
    switch (kind_) {
      case EngineKind::X: return (pos % 2 != 0) ? j != n_ : j != -n_;
      case EngineKind::Y: return (pos % 2 != 0) ? j != -n_ : j != n_;
      case EngineKind::W: return j != n_ && j != -n_;
    }
    return false;
  }

  void step() {
    // Vertices reached after t_ steps become interior once the walk takes
    // another step: filter and divide them first, then transition.
    if (t_ > 0) filter_and_divide();
    ++t_;
    const bool odd = (t_ % 2 != 0);
    const Complex& cpos = (odd == q_at_odd()) ? coeff_[2] : coeff_[0];  // step +2
    const Complex& cneg = (odd == q_at_odd()) ? coeff_[3] : coeff_[1];  // step -2
    const Real& apos = (odd == q_at_odd()) ? coeff_abs_[2] : coeff_abs_[0];
    const Real& aneg = (odd == q_at_odd()) ? coeff_abs_[3] : coeff_abs_[1];

    const long nlo = (lo_ > 0) ? lo_ - 1 : 0;
    const long nhi = (hi_ + 1 < slots_) ? hi_ + 1 : slots_ - 1;
    nxt_.assign(static_cast<size_t>(nhi - nlo + 1), Complex(bits_));
    if (abs_lane_) nxt_abs_.assign(static_cast<size_t>(nhi - nlo + 1), Real(bits_));
    for (long idx = nlo; idx <= nhi; ++idx) {
      Complex& acc = nxt_[static_cast<size_t>(idx - nlo)];
      if (idx - 1 >= lo_ && idx - 1 <= hi_ && !cur_[static_cast<size_t>(idx - 1)].is_zero())
        acc += cur_[static_cast<size_t>(idx - 1)] * cpos;
      if (idx + 1 >= lo_ && idx + 1 <= hi_ && !cur_[static_cast<size_t>(idx + 1)].is_zero())
        acc += cur_[static_cast<size_t>(idx + 1)] * cneg;
      if (abs_lane_) {
        Real& r = nxt_abs_[static_cast<size_t>(idx - nlo)];
        if (idx - 1 >= lo_ && idx - 1 <= hi_ && !cur_abs_[static_cast<size_t>(idx - 1)].is_zero())
          r += cur_abs_[static_cast<size_t>(idx - 1)] * apos;
        if (idx + 1 >= lo_ && idx + 1 <= hi_ && !cur_abs_[static_cast<size_t>(idx + 1)].is_zero())
          r += cur_abs_[static_cast<size_t>(idx + 1)] * aneg;
      }
    }
    for (long idx = nlo; idx <= nhi; ++idx) {
      cur_[static_cast<size_t>(idx)] = std::move(nxt_[static_cast<size_t>(idx - nlo)]);
      if (abs_lane_)
        cur_abs_[static_cast<size_t>(idx)] = std::move(nxt_abs_[static_cast<size_t>(idx - nlo)]);
    }
    lo_ = nlo;
    hi_ = nhi;
  }

  void filter_and_divide() {
    const bool odd = (t_ % 2 != 0);
    for (long idx = lo_; idx <= hi_; ++idx) {
      const size_t u = static_cast<size_t>(idx);
      if (cur_[u].is_zero() && (!abs_lane_ || cur_abs_[u].is_zero())) continue;
      const long j = jmin_ + 2 * idx;
      if (!vertex_allowed(t_, j)) {
        cur_[u] = Complex(bits_);
        if (abs_lane_) cur_abs_[u] = Real(bits_);
        continue;
      }
      const long base = (odd == minus_at_odd()) ? n_ - j : n_ + j;
      Complex factor = z_;
      factor += Complex(Real(base, bits_), Real(bits_));
      if (factor.is_zero())
        throw SingularDenominatorError(
            j, "series: vanishing factor at vertex " + std::to_string(j));
      cur_[u] /= factor;
      if (abs_lane_) cur_abs_[u] /= factor.abs();
    }
  }

  EngineKind kind_;
  long n_;
  int bits_;
  Complex z_;
  bool abs_lane_;
  long t_ = 0;
  long jmin_ = 0;
  long slots_ = 0;
  long lo_ = 0, hi_ = 0;  // active slot window (nonzero slots lie within)
  Complex coeff_[4];      // p(+2)=A, p(-2)=a, q(+2)=B, q(-2)=b
  Real coeff_abs_[4];
  Real last_abs_;
  std::vector<Complex> cur_, nxt_;
  std::vector<Real> cur_abs_, nxt_abs_;
};

EngineKind kind_for(Sign sign) { return sign == Sign::plus ? EngineKind::X : EngineKind::Y; }

void require_sigma_args(long n, long r) {
  if (r < 0) throw std::invalid_argument("sigma: r must be >= 0");
  if (n % 2 != 0 && std::labs(n) < 3)
    throw std::invalid_argument("sigma: odd n requires |n| >= 3");
}

int working_bits(const Complex& z, const TrigPotential& v) {
  return std::max(z.precision_bits(), std::max(v.precision_bits(), 53));
}

Real pow_ui(const Real& x, unsigned long e, int bits) {
  Real r(1.0, bits);
  for (unsigned long i = 0; i < e; ++i) r *= x;
  return r;
}

struct TailRoutes {
  // Geometric majorants for the remainder beyond the current term: the
  // walk-count/denominator bound and the first-descent recursion. Both
  // require |z| <= 1/2; an invalid route stays flagged off.
  bool count_bound_valid = false;
  Real count_bound_ratio;   // 8 D^2 / m for X/Y, 8 D^2 / |n| for W
  Real count_bound_scale;   // D for X/Y, 1 for W
  bool descent_valid = false;
  Real descent_ratio;  // Phi*(n,z)

  explicit TailRoutes(int bits)
      : count_bound_ratio(bits), count_bound_scale(bits), descent_ratio(bits) {}
};

SeriesValue sum_series(EngineKind kind, long n, const Complex& z, const TrigPotential& v,
                       const PrecisionConfig& cfg, const TailRoutes& routes, int bits,
                       long term_cap) {
  const Real rel(cfg.rel_tol, bits);
  const Real one(1.0, bits);
  const long m = (kind == EngineKind::W) ? 0 : (std::labs(n) - 1) / 2;

  const bool count_route = routes.count_bound_valid && routes.count_bound_ratio < 1L;
  const bool descent_route = routes.descent_valid && routes.descent_ratio < 1L;

  // The rigorous certificate and the empirical decay detector race; the sum
  // fails only when neither fires within the cap. A valid-but-slow majorant
  // (ratio near 1) must not block a cleanly converging sum, so the empirical
  // detector stays armed throughout; a rigorous stop is preferred whenever
  // both would fire at the same term.
  WalkSumEngine eng(kind, n, z, v, term_cap + 1, descent_route, bits);
  Complex partial(bits);
  Real prev_term_abs = Real::nan(bits);
  Real ratio_max(bits);
  int consecutive_small = 0;

  for (long r = 0; r <= term_cap; ++r) {
    const Complex term = eng.next_term();
    partial += term;
    const Real term_abs = term.abs();
    const Real thresh = rel * partial.abs();
    const unsigned terms = static_cast<unsigned>(r + 1);

    bool have_tail = false;
    Real tail(bits);
    if (count_route) {
      const unsigned long e =
          static_cast<unsigned long>((kind == EngineKind::W) ? r + 2 : m + r + 1);
      tail = routes.count_bound_scale * pow_ui(routes.count_bound_ratio, e, bits) /
             (one - routes.count_bound_ratio);
      have_tail = true;
    }
    if (descent_route) {
      Real t = eng.last_term_abs_sum() * routes.descent_ratio / (one - routes.descent_ratio);
      if (!have_tail || t < tail) tail = std::move(t);
      have_tail = true;
    }
    if (have_tail && tail <= thresh && term_abs <= thresh)
      return SeriesValue{partial, tail, terms, false};

    consecutive_small = (term_abs <= thresh) ? consecutive_small + 1 : 0;
    if (!prev_term_abs.is_nan() && prev_term_abs > 0L) {
      Real ratio = term_abs / prev_term_abs;
      if (ratio > ratio_max) ratio_max = ratio;
    }
    prev_term_abs = term_abs;
    if (consecutive_small >= 3) {
      Real rho = min(ratio_max, Real(0.9, bits));
      Real tail_h = term_abs * rho / (one - rho);
      return SeriesValue{partial, tail_h, terms, true};
    }
  }
  throw NonConvergentError("series: no convergence within " +
                           std::to_string(term_cap + 1) + " terms (n = " +
                           std::to_string(n) + ")");
}

}  // namespace

Complex sigma(Sign sign, long n, long r, const Complex& z, const TrigPotential& v) {
  require_sigma_args(n, r);
  const int bits = working_bits(z, v);
  if (n % 2 == 0) return Complex::zero(bits);
  WalkSumEngine eng(kind_for(sign), n, z, v, r, false, bits);
  Complex term(bits);
  for (long i = 0; i <= r; ++i) term = eng.next_term();
  return term;
}

Real sigma_star(Sign sign, long n, long r, const Complex& z, const TrigPotential& v) {
  require_sigma_args(n, r);
  const int bits = working_bits(z, v);
  if (n % 2 == 0) return Real(bits);
  WalkSumEngine eng(kind_for(sign), n, z, v, r, true, bits);
  for (long i = 0; i <= r; ++i) eng.next_term();
  return eng.last_term_abs_sum();
}

Complex tau(long n, long nu, const Complex& z, const TrigPotential& v) {
  if (std::labs(n) < 2) throw std::invalid_argument("tau: |n| must be >= 2");
  if (nu < 1) throw std::invalid_argument("tau: nu must be >= 1");
  const int bits = working_bits(z, v);
  WalkSumEngine eng(EngineKind::W, n, z, v, nu, false, bits);
  Complex term(bits);
  for (long i = 1; i <= nu; ++i) term = eng.next_term();
  return term;
}

SeriesValue beta(Sign sign, long n, const Complex& z, const TrigPotential& v,
                 const PrecisionConfig& cfg) {
  cfg.validate();
  const int bits = std::max(cfg.precision_bits, working_bits(z, v));
  if (n % 2 == 0) return SeriesValue{Complex(bits), Real(bits), 0u, false};
  if (std::labs(n) < 3) throw std::invalid_argument("beta: odd n requires |n| >= 3");

  const long m = (std::labs(n) - 1) / 2;
  TailRoutes routes(bits);
  if (z.abs() <= Real(0.5, bits)) {
    const Real& D = v.D();
    routes.count_bound_valid = true;
    routes.count_bound_ratio = ldexp2(D * D, 3) / m;
    routes.count_bound_scale = D;
    routes.descent_valid = true;
    routes.descent_ratio = phi(n, z, v).abs_sum;
  }
  return sum_series(kind_for(sign), n, z, v, cfg, routes, bits, kBetaTermCap);
}

SeriesValue alpha(long n, const Complex& z, const TrigPotential& v,
                  const PrecisionConfig& cfg) {
  cfg.validate();
  const int bits = std::max(cfg.precision_bits, working_bits(z, v));
  if (std::labs(n) < 2) throw std::invalid_argument("alpha: |n| must be >= 2");

  TailRoutes routes(bits);
  if (z.abs() <= Real(0.5, bits)) {
    const Real& D = v.D();
    routes.count_bound_valid = true;
    routes.count_bound_ratio = ldexp2(D * D, 3) / std::labs(n);
    routes.count_bound_scale = Real(1.0, bits);
  }
  return sum_series(EngineKind::W, n, z, v, cfg, routes, bits, kAlphaTermCap);
}

PhiFactor phi(long n, const Complex& z, const TrigPotential& v) {
  if (n % 2 == 0 || std::labs(n) < 3)
    throw std::invalid_argument("phi: n must be odd with |n| >= 3");
  const int bits = working_bits(z, v);
  const long m = (std::labs(n) - 1) / 2;
  const Complex zz = (n > 0) ? z : -z;
  const Complex bA = v.b() * v.A();
  const Complex aB = v.a() * v.B();
  // For n < 0 the single descent step of the sigma_1 walks sits on the
  // opposite coefficient pair: the all-down walk gains an aB factor where the
  // all-up walk gained bA, and vice versa (checked against brute-force
  // enumeration; the m-term sum carries aB, the (m-1)-term sum carries bA).
  const Complex& c_long = (n > 0) ? bA : aB;
  const Complex& c_short = (n > 0) ? aB : bA;

  auto factor = [&](long c) {
    Complex f = zz;
    f += Complex(Real(c, bits), Real(bits));
    if (f.is_zero())
      throw SingularDenominatorError(c, "phi: vanishing factor " + std::to_string(c));
    return f;
  };

  Complex val(bits);
  Real abs_sum(bits);
  for (long k = 1; k <= m; ++k) {
    Complex term = c_long / (factor(4 * (m + 1 - k)) * factor(4 * k));
    abs_sum += term.abs();
    val += term;
  }
  for (long k = 2; k <= m; ++k) {
    Complex term = c_short / (factor(4 * (k - 1)) * factor(4 * (m + 1 - k)));
    abs_sum += term.abs();
    val += term;
  }
  return PhiFactor{std::move(val), std::move(abs_sum)};
}

}  // namespace dgap
