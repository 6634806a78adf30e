#include "dgap/potential.hpp"

#include <stdexcept>
#include <utility>

namespace dgap {

TrigPotential::TrigPotential(Complex a, Complex A, Complex b, Complex B)
    : a_(std::move(a)),
      A_(std::move(A)),
      b_(std::move(b)),
      B_(std::move(B)),
      d_(max(max(a_.abs(), A_.abs()), max(b_.abs(), B_.abs()))),
      nonzero_(!a_.is_zero() && !A_.is_zero() && !b_.is_zero() && !B_.is_zero()) {}

int TrigPotential::precision_bits() const {
  return std::max(std::max(a_.precision_bits(), A_.precision_bits()),
                  std::max(b_.precision_bits(), B_.precision_bits()));
}

Complex TrigPotential::fourier_coefficient(Component which, long m) const {
  if (m % 2 != 0)
    throw std::invalid_argument("fourier_coefficient: m must be even");
  if (m == -2) return which == Component::P ? a_ : b_;
  if (m == 2) return which == Component::P ? A_ : B_;
  return Complex::zero(precision_bits());
}

}  // namespace dgap
