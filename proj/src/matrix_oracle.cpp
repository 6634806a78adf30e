#include "dgap/matrix_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

#include "dgap/errors.hpp"

namespace dgap {
namespace {

// ---------------------------------------------------------------------------
// Balancing (Parlett-Reinsch, powers of two, no permutation phase). Rough
// double-precision magnitudes are enough to pick the exact 2^e scalings.
// ---------------------------------------------------------------------------
void balance(DenseMatrix& M) {
  const long n = M.dim();
  bool changed = true;
  for (int pass = 0; pass < 20 && changed; ++pass) {
    changed = false;
    for (long i = 0; i < n; ++i) {
      double c = 0.0, r = 0.0;
      for (long j = 0; j < n; ++j) {
        if (j == i) continue;
        c += M.at(j, i).abs1().to_double();
        r += M.at(i, j).abs1().to_double();
      }
      if (c == 0.0 || r == 0.0 || !std::isfinite(c) || !std::isfinite(r)) continue;
      const double s = c + r;
      long e = 0;
      // pick 2^e with c*2^e ~ r*2^-e; c tracks c0*4^e against fixed r
      while (c < r / 2.0) { c *= 4.0; ++e; }
      while (c > r * 2.0) { c /= 4.0; --e; }
      if (e != 0 && (c + r) / std::ldexp(1.0, e) < 0.95 * s) {
        changed = true;
        for (long j = 0; j < n; ++j) {
          // row i /= 2^e, column i *= 2^e
          mpfr_mul_2si(M.at(i, j).re().raw(), M.at(i, j).re().raw(), -e, MPFR_RNDN);
          mpfr_mul_2si(M.at(i, j).im().raw(), M.at(i, j).im().raw(), -e, MPFR_RNDN);
          mpfr_mul_2si(M.at(j, i).re().raw(), M.at(j, i).re().raw(), e, MPFR_RNDN);
          mpfr_mul_2si(M.at(j, i).im().raw(), M.at(j, i).im().raw(), e, MPFR_RNDN);
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Householder reduction to upper Hessenberg form (Hermitian reflectors).
// Columns that are already reduced are skipped, so block-tridiagonal input
// passes through in O(n^2).
// ---------------------------------------------------------------------------
void hessenberg(DenseMatrix& M) {
  const long n = M.dim();
  const int bits = M.precision_bits();
  for (long j = 0; j + 2 < n; ++j) {
    bool needs_work = false;
    for (long i = j + 2; i < n; ++i)
      if (!M.at(i, j).is_zero()) { needs_work = true; break; }
    if (!needs_work) continue;

    Real sigma2(bits);
    for (long i = j + 1; i < n; ++i) {
      const Complex& x = M.at(i, j);
      sigma2 += x.re() * x.re() + x.im() * x.im();
    }
    Real sigma = sqrt(sigma2);
    if (sigma.is_zero()) continue;

    const Complex alpha = M.at(j + 1, j);
    Complex phase = Complex::one(bits);
    Real alpha_abs = alpha.abs();
    if (!alpha_abs.is_zero()) phase = alpha / alpha_abs;

    // v = x + phase*sigma*e1; P = I - 2 v v^*/(v^* v) maps x to -phase*sigma*e1.
    std::vector<Complex> v;
    v.reserve(static_cast<size_t>(n - j - 1));
    v.push_back(alpha + phase * sigma);
    for (long i = j + 2; i < n; ++i) v.push_back(M.at(i, j));
    Real vnorm2(bits);
    for (const Complex& w : v) vnorm2 += w.re() * w.re() + w.im() * w.im();
    if (vnorm2.is_zero()) continue;

    // Left: M <- P M on rows j+1..n-1 (columns j..n-1).
    for (long cidx = j; cidx < n; ++cidx) {
      Complex w(bits);
      for (long i = j + 1; i < n; ++i)
        w += v[static_cast<size_t>(i - j - 1)].conj() * M.at(i, cidx);
      w = ldexp2(Real(1.0, bits), 1) * w / vnorm2;
      for (long i = j + 1; i < n; ++i)
        M.at(i, cidx) -= w * v[static_cast<size_t>(i - j - 1)];
    }
    // Right: M <- M P on columns j+1..n-1 (all rows).
    for (long ridx = 0; ridx < n; ++ridx) {
      Complex w(bits);
      for (long i = j + 1; i < n; ++i)
        w += M.at(ridx, i) * v[static_cast<size_t>(i - j - 1)];
      w = ldexp2(Real(1.0, bits), 1) * w / vnorm2;
      for (long i = j + 1; i < n; ++i)
        M.at(ridx, i) -= w * v[static_cast<size_t>(i - j - 1)].conj();
    }
    // Column j is now exactly the reflected vector.
    M.at(j + 1, j) = -(phase * sigma);
    for (long i = j + 2; i < n; ++i) M.at(i, j) = Complex(bits);
  }
}

// ---------------------------------------------------------------------------
// Complex Givens rotation: G = [[c, s], [-conj(s), c]], c real >= 0, such
// that G [f; g] = [r; 0].
// ---------------------------------------------------------------------------
struct Givens {
  Real c;
  Complex s;
  Complex r;
};

Givens make_givens(const Complex& f, const Complex& g, int bits) {
  Real fa = f.abs();
  Real ga = g.abs();
  if (ga.is_zero()) return Givens{Real(1.0, bits), Complex(bits), f};
  if (fa.is_zero()) {
    Complex s = g.conj() / ga;
    return Givens{Real(bits), std::move(s), Complex(ga)};
  }
  Real h = hypot(fa, ga);
  Real c = fa / h;
  Complex fsign = f / fa;
  Complex s = fsign * g.conj() / h;
  Complex r = fsign * h;
  return Givens{std::move(c), std::move(s), std::move(r)};
}

// Allocation-free rotation kernel: [a; b] <- [c a + s b; -conj(s) a + c b].
// The right-multiplication variant is the same kernel with s conjugated.
struct RotWorkspace {
  mpfr_t t1, t2, t3, t4, acc;
  explicit RotWorkspace(int bits) {
    mpfr_init2(t1, bits);
    mpfr_init2(t2, bits);
    mpfr_init2(t3, bits);
    mpfr_init2(t4, bits);
    mpfr_init2(acc, bits);
  }
  ~RotWorkspace() {
    mpfr_clear(t1);
    mpfr_clear(t2);
    mpfr_clear(t3);
    mpfr_clear(t4);
    mpfr_clear(acc);
  }
  RotWorkspace(const RotWorkspace&) = delete;
  RotWorkspace& operator=(const RotWorkspace&) = delete;
};

void apply_rot(Complex& a, Complex& b, const Real& c, const Complex& s, RotWorkspace& w) {
  mpfr_srcptr cr = c.raw();
  mpfr_srcptr sr = s.re().raw();
  mpfr_srcptr si = s.im().raw();
  mpfr_ptr ar = a.re().raw(), ai = a.im().raw();
  mpfr_ptr br = b.re().raw(), bi = b.im().raw();
  // t1 = c*ar + sr*br - si*bi
  mpfr_mul(w.t1, cr, ar, MPFR_RNDN);
  mpfr_fma(w.t1, sr, br, w.t1, MPFR_RNDN);
  mpfr_mul(w.acc, si, bi, MPFR_RNDN);
  mpfr_sub(w.t1, w.t1, w.acc, MPFR_RNDN);
  // t2 = c*ai + sr*bi + si*br
  mpfr_mul(w.t2, cr, ai, MPFR_RNDN);
  mpfr_fma(w.t2, sr, bi, w.t2, MPFR_RNDN);
  mpfr_fma(w.t2, si, br, w.t2, MPFR_RNDN);
  // t3 = c*br - sr*ar - si*ai
  mpfr_mul(w.t3, cr, br, MPFR_RNDN);
  mpfr_mul(w.acc, sr, ar, MPFR_RNDN);
  mpfr_sub(w.t3, w.t3, w.acc, MPFR_RNDN);
  mpfr_mul(w.acc, si, ai, MPFR_RNDN);
  mpfr_sub(w.t3, w.t3, w.acc, MPFR_RNDN);
  // t4 = c*bi - sr*ai + si*ar
  mpfr_mul(w.t4, cr, bi, MPFR_RNDN);
  mpfr_mul(w.acc, sr, ai, MPFR_RNDN);
  mpfr_sub(w.t4, w.t4, w.acc, MPFR_RNDN);
  mpfr_fma(w.t4, si, ar, w.t4, MPFR_RNDN);
  mpfr_set(ar, w.t1, MPFR_RNDN);
  mpfr_set(ai, w.t2, MPFR_RNDN);
  mpfr_set(br, w.t3, MPFR_RNDN);
  mpfr_set(bi, w.t4, MPFR_RNDN);
}

// Trailing 2x2 eigenvalues; the one nearer d is the Wilkinson shift.
std::pair<Complex, Complex> eig2x2(const Complex& a, const Complex& b, const Complex& c,
                                   const Complex& d, int bits) {
  Complex mid = (a + d) / 2L;
  Complex half_diff = (a - d) / 2L;
  Complex sq = sqrt(half_diff * half_diff + b * c);
  (void)bits;
  return {mid + sq, mid - sq};
}

void qr_sweep(DenseMatrix& H, long lo, long hi, const Complex& mu, RotWorkspace& ws) {
  const int bits = H.precision_bits();
  Complex x = H.at(lo, lo) - mu;
  Complex y = H.at(lo + 1, lo);
  for (long k = lo; k < hi; ++k) {
    if (k > lo) {
      x = H.at(k, k - 1);
      y = H.at(k + 1, k - 1);
    }
    Givens g = make_givens(x, y, bits);
    Complex sconj = g.s.conj();
    if (k > lo) {
      H.at(k, k - 1) = g.r;
      H.at(k + 1, k - 1) = Complex(bits);
    }
    const long jstart = (k > lo) ? k : lo;
    for (long j = jstart; j <= hi; ++j)
      apply_rot(H.at(k, j), H.at(k + 1, j), g.c, g.s, ws);
    const long iend = std::min(k + 2, hi);
    for (long i = lo; i <= iend; ++i)
      apply_rot(H.at(i, k), H.at(i, k + 1), g.c, sconj, ws);
  }
}

}  // namespace

BoundaryCondition bc_for(long n) {
  return (n % 2 == 0) ? BoundaryCondition::periodic : BoundaryCondition::antiperiodic;
}

DenseMatrix build_matrix(BoundaryCondition bc, long K, const TrigPotential& v,
                         const PrecisionConfig& cfg) {
  cfg.validate();
  if (K < 4) throw std::invalid_argument("build_matrix: K must be >= 4");
  const int bits = cfg.precision_bits;
  const long parity = (bc == BoundaryCondition::periodic) ? 0 : 1;
  const long kmax = K - (((K - parity) % 2 + 2) % 2);
  const long nm = kmax + 1;  // modes -kmax, -kmax+2, ..., kmax
  DenseMatrix M(2 * nm, bits);

  // Two coupling chains; chain 0 starts with component 1 at mode -kmax,
  // chain 1 with component 2. Within a chain consecutive entries differ by
  // one mode step (+2) and alternate component, so all coupling is adjacent.
  for (long chain = 0; chain < 2; ++chain) {
    const long base = chain * nm;
    for (long i = 0; i < nm; ++i) {
      const long k = -kmax + 2 * i;
      const int c = ((i % 2 == 0) == (chain == 0)) ? 1 : 2;
      M.at(base + i, base + i) =
          Complex(Real(c == 1 ? -k : k, bits), Real(bits));
      if (i + 1 < nm) {
        // row (c, k) <- column (c', k+2) and the transposed coupling
        M.at(base + i, base + i + 1) =
            v.fourier_coefficient(c == 1 ? Component::P : Component::Q, -2);
        M.at(base + i + 1, base + i) =
            v.fourier_coefficient(c == 1 ? Component::Q : Component::P, 2);
      }
    }
  }
  return M;
}

std::vector<Complex> eigenvalues_all(DenseMatrix H, const PrecisionConfig& cfg) {
  cfg.validate();
  const long n = H.dim();
  const int bits = cfg.precision_bits;
  std::vector<Complex> evs;
  if (n == 0) return evs;
  evs.reserve(static_cast<size_t>(n));

  balance(H);
  hessenberg(H);

  Real scale(bits);
  for (long i = 0; i < n; ++i)
    for (long j = std::max<long>(0, i - 1); j < n; ++j)
      if (Real e = H.at(i, j).abs1(); e > scale) scale = std::move(e);
  const Real eps = Real::two_pow(4 - bits, bits);

  RotWorkspace ws(bits);
  const long sweep_cap = 50 * n;
  long sweeps = 0;
  long stagnation = 0;
  long hi = n - 1;
  while (hi >= 0) {
    // Deflation scan: zero negligible subdiagonals below hi.
    long lo = hi;
    while (lo > 0) {
      Real sub = H.at(lo, lo - 1).abs1();
      Real thr = eps * max(H.at(lo, lo).abs1() + H.at(lo - 1, lo - 1).abs1(), scale);
      if (sub <= thr) {
        H.at(lo, lo - 1) = Complex(bits);
        break;
      }
      --lo;
    }
    if (lo == hi) {
      evs.push_back(H.at(hi, hi));
      --hi;
      stagnation = 0;
      continue;
    }
    if (lo == hi - 1) {
      auto [e1, e2] = eig2x2(H.at(lo, lo), H.at(lo, hi), H.at(hi, lo), H.at(hi, hi), bits);
      evs.push_back(std::move(e1));
      evs.push_back(std::move(e2));
      hi -= 2;
      stagnation = 0;
      continue;
    }
    if (++sweeps > sweep_cap)
      throw NumericalFailureError("eigenvalues_all: QR did not converge within " +
                                  std::to_string(sweep_cap) + " sweeps");
    Complex mu(bits);
    if (++stagnation % 16 == 0) {
      // Exceptional shift to break symmetry-induced stalls.
      mu = H.at(hi, hi) + Complex(H.at(hi, hi - 1).abs1() * Real(0.75, bits));
    } else {
      auto [e1, e2] =
          eig2x2(H.at(hi - 1, hi - 1), H.at(hi - 1, hi), H.at(hi, hi - 1), H.at(hi, hi), bits);
      mu = ((e1 - H.at(hi, hi)).abs() <= (e2 - H.at(hi, hi)).abs()) ? e1 : e2;
    }
    qr_sweep(H, lo, hi, mu, ws);
  }

  std::sort(evs.begin(), evs.end(),
            [](const Complex& x, const Complex& y) { return pair_order_less(x, y); });
  return evs;
}

MatrixSpectrum matrix_spectrum(BoundaryCondition bc, long K, const TrigPotential& v,
                               const PrecisionConfig& cfg) {
  DenseMatrix M = build_matrix(bc, K, v, cfg);
  const long dim = M.dim();
  std::vector<Complex> evs = eigenvalues_all(std::move(M), cfg);
  return MatrixSpectrum{bc, K, dim, std::move(evs), cfg.precision_bits};
}

std::vector<Complex> eigenvalues_in_disc(const MatrixSpectrum& s, long n) {
  std::vector<Complex> out;
  const int bits = s.precision_bits;
  const Real half(0.5, bits);
  const Complex nn(Real(n, bits), Real(bits));
  for (const Complex& ev : s.eigenvalues)
    if ((ev - nn).abs() < half) out.push_back(ev);
  return out;
}

SpectralPair localize_pair(long n, const MatrixSpectrum& base, const MatrixSpectrum& refined,
                           const TrigPotential& v, const PrecisionConfig& cfg) {
  const int bits = cfg.precision_bits;
  std::vector<Complex> in_disc = eigenvalues_in_disc(base, n);
  if (in_disc.size() != 2)
    throw LocalizationError(static_cast<long>(in_disc.size()),
                            "localize_pair: disc around n = " + std::to_string(n) +
                                " contains " + std::to_string(in_disc.size()) +
                                " eigenvalues, expected 2");
  // Truncation estimate: distance to the nearest refined eigenvalue.
  Real shift(bits);
  for (const Complex& ev : in_disc) {
    Real best = Real::nan(bits);
    for (const Complex& rv : refined.eigenvalues) {
      Real d = (ev - rv).abs();
      if (best.is_nan() || d < best) best = std::move(d);
    }
    if (!best.is_nan() && best > shift) shift = std::move(best);
  }
  // Backward-error heuristic: dim * 2^(10 - bits) * ||M||, with the norm
  // bounded by the diagonal reach plus the coupling row sums.
  Real norm_bound = Real(base.K, bits) + ldexp2(v.D(), 1);
  Real backward = Real(base.dimension, bits) * Real::two_pow(10 - bits, bits) * norm_bound;

  Complex lm = in_disc[0];
  Complex lp = in_disc[1];
  if (pair_order_less(lp, lm)) std::swap(lm, lp);
  Complex gamma = lp - lm;
  return SpectralPair{n,          std::move(lm),        std::move(lp), std::move(gamma),
                      Method::matrix, backward + shift, 0u};
}

SpectralPair spectral_pair_matrix(long n, const TrigPotential& v, const PrecisionConfig& cfg,
                                  long K) {
  cfg.validate();
  if (std::labs(n) < 3)
    throw std::invalid_argument("spectral_pair_matrix: |n| must be >= 3");
  if (K == 0) K = std::labs(n) + 40;
  if (K < std::labs(n) + 4)
    throw std::invalid_argument("spectral_pair_matrix: K must be >= |n| + 4");
  MatrixSpectrum base = matrix_spectrum(bc_for(n), K, v, cfg);
  MatrixSpectrum refined = matrix_spectrum(bc_for(n), K + 20, v, cfg);
  return localize_pair(n, base, refined, v, cfg);
}

}  // namespace dgap
