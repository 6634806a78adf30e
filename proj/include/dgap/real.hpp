#ifndef DGAP_REAL_HPP
#define DGAP_REAL_HPP

#include <mpfr.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace dgap {

// Arbitrary-precision real number. RAII over mpfr_t; every value carries its
// own precision in bits, and binary operations produce results at the wider
// of the two operand precisions. All roundings are to nearest.
class Real {
public:
  explicit Real(int prec_bits) { mpfr_init2(v_, check_prec(prec_bits)); mpfr_set_zero(v_, 1); }

  Real(double x, int prec_bits) {
    mpfr_init2(v_, check_prec(prec_bits));
    mpfr_set_d(v_, x, MPFR_RNDN);
  }

  Real(long x, int prec_bits) {
    mpfr_init2(v_, check_prec(prec_bits));
    mpfr_set_si(v_, x, MPFR_RNDN);
  }

  // Decimal string, correctly rounded to prec_bits.
  Real(const std::string& s, int prec_bits) {
    mpfr_init2(v_, check_prec(prec_bits));
    if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0) {
      mpfr_clear(v_);
      throw std::invalid_argument("Real: cannot parse \"" + s + "\"");
    }
  }

  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }

  Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }

  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }

  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }

  ~Real() { mpfr_clear(v_); }

  int precision_bits() const { return static_cast<int>(mpfr_get_prec(v_)); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  // Decimal scientific notation with the given number of significant digits,
  // e.g. "1.953125000e-03". Deterministic for identical inputs.
  std::string to_scientific(int sig_digits = 30) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
    if (sig_digits < 2) sig_digits = 2;
    char* out = nullptr;
    mpfr_asprintf(&out, "%.*Re", sig_digits - 1, v_);
    std::string s(out);
    mpfr_free_str(out);
    return s;
  }

  // ---- in-place arithmetic ----
  Real& operator+=(const Real& o) { widen(o); mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { widen(o); mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { widen(o); mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { widen(o); mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(long k) { mpfr_mul_si(v_, v_, k, MPFR_RNDN); return *this; }
  Real& operator/=(long k) { mpfr_div_si(v_, v_, k, MPFR_RNDN); return *this; }

  void negate() { mpfr_neg(v_, v_, MPFR_RNDN); }

  // ---- binary arithmetic (max-precision contagion) ----
  friend Real operator+(const Real& x, const Real& y) { return bin(mpfr_add, x, y); }
  friend Real operator-(const Real& x, const Real& y) { return bin(mpfr_sub, x, y); }
  friend Real operator*(const Real& x, const Real& y) { return bin(mpfr_mul, x, y); }
  friend Real operator/(const Real& x, const Real& y) { return bin(mpfr_div, x, y); }

  friend Real operator-(const Real& x) {
    Real r(x.precision_bits());
    mpfr_neg(r.v_, x.v_, MPFR_RNDN);
    return r;
  }

  friend Real operator*(const Real& x, long k) {
    Real r(x.precision_bits());
    mpfr_mul_si(r.v_, x.v_, k, MPFR_RNDN);
    return r;
  }
  friend Real operator*(long k, const Real& x) { return x * k; }
  friend Real operator/(const Real& x, long k) {
    Real r(x.precision_bits());
    mpfr_div_si(r.v_, x.v_, k, MPFR_RNDN);
    return r;
  }
  friend Real operator/(long k, const Real& x) {
    Real r(x.precision_bits());
    mpfr_si_div(r.v_, k, x.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator+(const Real& x, long k) {
    Real r(x.precision_bits());
    mpfr_add_si(r.v_, x.v_, k, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& x, long k) {
    Real r(x.precision_bits());
    mpfr_sub_si(r.v_, x.v_, k, MPFR_RNDN);
    return r;
  }
  friend Real operator+(long k, const Real& x) { return x + k; }
  friend Real operator-(long k, const Real& x) {
    Real r(x.precision_bits());
    mpfr_si_sub(r.v_, k, x.v_, MPFR_RNDN);
    return r;
  }

  // ---- comparisons (exact) ----
  friend bool operator==(const Real& x, const Real& y) { return mpfr_equal_p(x.v_, y.v_) != 0; }
  friend bool operator!=(const Real& x, const Real& y) { return !(x == y); }
  friend bool operator<(const Real& x, const Real& y) { return mpfr_less_p(x.v_, y.v_) != 0; }
  friend bool operator<=(const Real& x, const Real& y) { return mpfr_lessequal_p(x.v_, y.v_) != 0; }
  friend bool operator>(const Real& x, const Real& y) { return mpfr_greater_p(x.v_, y.v_) != 0; }
  friend bool operator>=(const Real& x, const Real& y) {
    return mpfr_greaterequal_p(x.v_, y.v_) != 0;
  }
  friend bool operator==(const Real& x, long k) { return mpfr_cmp_si(x.v_, k) == 0; }
  friend bool operator<(const Real& x, long k) { return mpfr_cmp_si(x.v_, k) < 0; }
  friend bool operator<=(const Real& x, long k) { return mpfr_cmp_si(x.v_, k) <= 0; }
  friend bool operator>(const Real& x, long k) { return mpfr_cmp_si(x.v_, k) > 0; }
  friend bool operator>=(const Real& x, long k) { return mpfr_cmp_si(x.v_, k) >= 0; }
  friend bool operator<(const Real& x, double d) { return mpfr_cmp_d(x.v_, d) < 0; }
  friend bool operator<=(const Real& x, double d) { return mpfr_cmp_d(x.v_, d) <= 0; }
  friend bool operator>(const Real& x, double d) { return mpfr_cmp_d(x.v_, d) > 0; }
  friend bool operator>=(const Real& x, double d) { return mpfr_cmp_d(x.v_, d) >= 0; }

  // ---- constants and integer helpers ----
  static Real two_pow(long k, int prec_bits) {
    Real r(prec_bits);
    mpfr_set_si(r.v_, 1, MPFR_RNDN);
    mpfr_mul_2si(r.v_, r.v_, k, MPFR_RNDN);
    return r;
  }
  static Real factorial(unsigned long m, int prec_bits) {
    Real r(prec_bits);
    mpfr_fac_ui(r.v_, m, MPFR_RNDN);
    return r;
  }
  static Real euler_constant(int prec_bits) {
    Real r(prec_bits);
    mpfr_const_euler(r.v_, MPFR_RNDN);
    return r;
  }
  static Real nan(int prec_bits) {
    Real r(prec_bits);
    mpfr_set_nan(r.v_);
    return r;
  }

private:
  static int check_prec(int bits) {
    if (bits < MPFR_PREC_MIN) throw std::invalid_argument("Real: precision too small");
    return bits;
  }

  void widen(const Real& o) {
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) {
      mpfr_t t;
      mpfr_init2(t, mpfr_get_prec(o.v_));
      mpfr_set(t, v_, MPFR_RNDN);
      mpfr_swap(t, v_);
      mpfr_clear(t);
    }
  }

  template <typename F>
  static Real bin(F f, const Real& x, const Real& y) {
    Real r(std::max(x.precision_bits(), y.precision_bits()));
    f(r.raw(), x.v_, y.v_, MPFR_RNDN);
    return r;
  }

  mpfr_t v_;
};

// ---- elementary functions (namespace scope so qualified lookup works) ----
inline Real abs(const Real& x) {
  Real r(x.precision_bits());
  mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
inline Real sqrt(const Real& x) {
  Real r(x.precision_bits());
  mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
inline Real log(const Real& x) {
  Real r(x.precision_bits());
  mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
inline Real exp(const Real& x) {
  Real r(x.precision_bits());
  mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
inline Real atan2(const Real& y, const Real& x) {
  Real r(std::max(y.precision_bits(), x.precision_bits()));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}
inline Real hypot(const Real& x, const Real& y) {
  Real r(std::max(x.precision_bits(), y.precision_bits()));
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}
inline Real cos(const Real& x) {
  Real r(x.precision_bits());
  mpfr_cos(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
inline Real sin(const Real& x) {
  Real r(x.precision_bits());
  mpfr_sin(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
inline Real min(const Real& x, const Real& y) {
  Real r(std::max(x.precision_bits(), y.precision_bits()));
  mpfr_min(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}
inline Real max(const Real& x, const Real& y) {
  Real r(std::max(x.precision_bits(), y.precision_bits()));
  mpfr_max(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}
// x * 2^k, exact.
inline Real ldexp2(const Real& x, long k) {
  Real r(x.precision_bits());
  mpfr_mul_2si(r.raw(), x.raw(), k, MPFR_RNDN);
  return r;
}

}  // namespace dgap

#endif  // DGAP_REAL_HPP
