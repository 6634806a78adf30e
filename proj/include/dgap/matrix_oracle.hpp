#ifndef DGAP_MATRIX_ORACLE_HPP
#define DGAP_MATRIX_ORACLE_HPP

#include <vector>

#include "dgap/potential.hpp"
#include "dgap/precision.hpp"
#include "dgap/solver.hpp"

namespace dgap {

enum class BoundaryCondition { periodic, antiperiodic };

// periodic for even n, antiperiodic for odd n.
BoundaryCondition bc_for(long n);

// Dense complex matrix, row major, single precision-bits setting.
class DenseMatrix {
public:
  DenseMatrix(long dim, int bits)
      : dim_(dim), bits_(bits), a_(static_cast<size_t>(dim * dim), Complex(bits)) {}

  long dim() const { return dim_; }
  int precision_bits() const { return bits_; }

  Complex& at(long i, long j) { return a_[static_cast<size_t>(i * dim_ + j)]; }
  const Complex& at(long i, long j) const { return a_[static_cast<size_t>(i * dim_ + j)]; }

private:
  long dim_;
  int bits_;
  std::vector<Complex> a_;
};

// Truncated spectrum of the Dirac operator in the Fourier basis.
struct MatrixSpectrum {
  BoundaryCondition bc;
  long K;  // mode cutoff
  long dimension;
  std::vector<Complex> eigenvalues;  // sorted by (Re, Im), algebraic multiplicity
  int precision_bits;
};

// Fourier-basis representation: rows indexed by (component c, mode k) with
// k of the boundary condition's parity and |k| <= K; diagonal -k for c = 1,
// +k for c = 2; p(k-l) couples (1,k) to (2,l) and q(k-l) couples (2,k) to
// (1,l), nonzero only for |k-l| = 2. Basis rows are ordered along the two
// coupling chains, which renders the matrix block tridiagonal.
DenseMatrix build_matrix(BoundaryCondition bc, long K, const TrigPotential& v,
                         const PrecisionConfig& cfg);

// All eigenvalues of a dense complex matrix: balancing, Householder
// Hessenberg reduction and single-shift QR with deflation, entirely at the
// configured precision. Sorted by (Re, Im).
std::vector<Complex> eigenvalues_all(DenseMatrix H, const PrecisionConfig& cfg);

MatrixSpectrum matrix_spectrum(BoundaryCondition bc, long K, const TrigPotential& v,
                               const PrecisionConfig& cfg);

// Eigenvalues with |lambda - n| < 1/2, in sorted order.
std::vector<Complex> eigenvalues_in_disc(const MatrixSpectrum& s, long n);

// Localize the pair near n from a base spectrum plus its K+20 refinement:
// exactly two disc eigenvalues required, error estimate = QR backward bound
// plus the observed truncation shift.
SpectralPair localize_pair(long n, const MatrixSpectrum& base, const MatrixSpectrum& refined,
                           const TrigPotential& v, const PrecisionConfig& cfg);

// Full matrix route: build at K (default |n| + 40), extract the disc pair,
// refine at K + 20 for the truncation estimate.
SpectralPair spectral_pair_matrix(long n, const TrigPotential& v, const PrecisionConfig& cfg,
                                  long K = 0);

}  // namespace dgap

#endif  // DGAP_MATRIX_ORACLE_HPP
