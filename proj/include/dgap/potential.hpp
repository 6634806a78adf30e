#ifndef DGAP_POTENTIAL_HPP
#define DGAP_POTENTIAL_HPP

#include "dgap/complex.hpp"

namespace dgap {

enum class Component { P, Q };

// The two-mode trigonometric potential
//   P(x) = a e^{-2ix} + A e^{2ix},  Q(x) = b e^{-2ix} + B e^{2ix}.
// Immutable after construction. D = max coefficient magnitude is computed
// once and reused by every tail bound.
class TrigPotential {
public:
  TrigPotential(Complex a, Complex A, Complex b, Complex B);

  const Complex& a() const { return a_; }
  const Complex& A() const { return A_; }
  const Complex& b() const { return b_; }
  const Complex& B() const { return B_; }

  const Real& D() const { return d_; }
  bool nonzero() const { return nonzero_; }
  int precision_bits() const;

  // Fourier coefficient p(m) or q(m) about {e^{imx}, m even}; zero for |m| != 2.
  // Odd m is a caller bug.
  Complex fourier_coefficient(Component which, long m) const;

  // (P,Q) -> (Q,P): coefficient order (b, B, a, A).
  TrigPotential swapped() const { return TrigPotential(b_, B_, a_, A_); }

private:
  Complex a_, A_, b_, B_;
  Real d_;
  bool nonzero_;
};

}  // namespace dgap

#endif  // DGAP_POTENTIAL_HPP
