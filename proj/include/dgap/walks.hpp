#ifndef DGAP_WALKS_HPP
#define DGAP_WALKS_HPP

#include <vector>

#include "dgap/potential.hpp"

namespace dgap {

// Admissible +/-2-step walks on the integer grid. The three classes:
//   X: -n -> n   (indexes the beta+ series; r = wrong-direction step count)
//   Y:  n -> -n  (beta-)
//   W:  n -> n   (alpha; indexed by half-length nu >= 1)
enum class WalkKind { X, Y, W };

struct Walk {
  WalkKind kind;
  long n;
  std::vector<int> steps;  // entries +2 / -2

  long start() const;
  long target() const;
  // Interior vertices j_1 .. j_{L-1} (derived from steps; the endpoint is not
  // a vertex).
  std::vector<long> vertices() const;
  bool admissible() const;
};

// Brute-force enumeration cap: |n| + 2r (X/Y) or 2*nu (W) may not exceed this.
inline constexpr long kEnumerationStepCap = 34;

// All admissible walks of the class, in lexicographic step order (-2 < +2).
// X/Y with even n yield an empty sequence; |n| < 3 (X/Y) or |n| < 2 (W) is a
// caller bug. index is r for X/Y and nu >= 1 for W.
std::vector<Walk> enumerate_walks(WalkKind kind, long n, long index);

// Weight h^+(x,z), h^-(y,z) or h(w,z): alternating q/p coefficients over the
// steps divided by the alternating resolvent factors (n -/+ j + z) over the
// interior vertices. Throws SingularDenominatorError if a factor vanishes.
Complex walk_weight(const Walk& walk, const Complex& z, const TrigPotential& v);

}  // namespace dgap

#endif  // DGAP_WALKS_HPP
