#include "dgap/walks.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "dgap/errors.hpp"

namespace dgap {
namespace {

// Interior-vertex admissibility. For X: odd positions != n, even != -n.
// Y mirrors X. For W every interior vertex must avoid both n and -n (the
// first and last interior vertices cannot equal n anyway, so the blanket
// rule matches the classwise one).
bool vertex_allowed(WalkKind kind, long n, long pos, long j) {
  switch (kind) {
    case WalkKind::X: return (pos % 2 != 0) ? j != n : j != -n;
    case WalkKind::Y: return (pos % 2 != 0) ? j != -n : j != n;
    case WalkKind::W: return j != n && j != -n;
  }
  return false;
}

void dfs(WalkKind kind, long n, long length, long target, long pos, long j,
         std::vector<int>& steps, std::vector<Walk>& out) {
  if (pos == length) {
    if (j == target) out.push_back({kind, n, steps});
    return;
  }
  const long remaining = length - pos;
  for (int s : {-2, +2}) {
    const long jn = j + s;
    // Cannot reach the target in the remaining steps.
    if (std::labs(target - jn) > 2 * (remaining - 1)) continue;
    if (remaining > 1 && !vertex_allowed(kind, n, pos + 1, jn)) continue;
    steps.push_back(s);
    dfs(kind, n, length, target, pos + 1, jn, steps, out);
    steps.pop_back();
  }
}

}  // namespace

long Walk::start() const { return kind == WalkKind::X ? -n : n; }
long Walk::target() const { return kind == WalkKind::Y ? -n : n; }

std::vector<long> Walk::vertices() const {
  std::vector<long> js;
  if (steps.empty()) return js;
  js.reserve(steps.size() - 1);
  long j = start();
  for (size_t t = 0; t + 1 < steps.size(); ++t) {
    j += steps[t];
    js.push_back(j);
  }
  return js;
}

bool Walk::admissible() const {
  long sum = 0;
  for (int s : steps) {
    if (s != 2 && s != -2) return false;
    sum += s;
  }
  if (sum != target() - start()) return false;
  if (kind == WalkKind::W && steps.size() % 2 != 0) return false;
  if (kind != WalkKind::W && steps.size() % 2 == 0) return false;
  const auto js = vertices();
  for (size_t i = 0; i < js.size(); ++i)
    if (!vertex_allowed(kind, n, static_cast<long>(i) + 1, js[i])) return false;
  return true;
}

std::vector<Walk> enumerate_walks(WalkKind kind, long n, long index) {
  if (index < 0) throw std::invalid_argument("enumerate_walks: negative index");
  long length = 0;
  if (kind == WalkKind::W) {
    if (std::labs(n) < 2) throw std::invalid_argument("enumerate_walks: W needs |n| > 1");
    if (index < 1) throw std::invalid_argument("enumerate_walks: W needs nu >= 1");
    length = 2 * index;
  } else {
    if (n % 2 == 0) return {};  // no admissible walks between -n and n for even n
    if (std::labs(n) < 3) throw std::invalid_argument("enumerate_walks: X/Y need |n| >= 3");
    length = std::labs(n) + 2 * index;
  }
  if (length > kEnumerationStepCap)
    throw EnumerationCapError("enumerate_walks: " + std::to_string(length) +
                              " steps exceeds the brute-force cap of " +
                              std::to_string(kEnumerationStepCap));
  std::vector<Walk> out;
  std::vector<int> steps;
  steps.reserve(length);
  Walk probe{kind, n, {}};
  dfs(kind, n, length, probe.target(), 0, probe.start(), steps, out);
  return out;
}

Complex walk_weight(const Walk& walk, const Complex& z, const TrigPotential& v) {
  const int bits = std::max(z.precision_bits(), v.precision_bits());
  const bool q_first = walk.kind == WalkKind::X;
  const bool minus_first = walk.kind == WalkKind::X;

  Complex num = Complex::one(bits);
  Complex den = Complex::one(bits);
  long j = walk.start();
  const long L = static_cast<long>(walk.steps.size());
  for (long t = 1; t <= L; ++t) {
    const int s = walk.steps[static_cast<size_t>(t - 1)];
    const bool odd_pos = (t % 2 != 0);
    const Component c = (odd_pos == q_first) ? Component::Q : Component::P;
    num *= v.fourier_coefficient(c, s);
    j += s;
    if (t == L) break;
    // factor (n - j + z) at odd positions for X, (n + j + z) for Y/W; swapped
    // at even positions.
    const long base = (odd_pos == minus_first) ? walk.n - j : walk.n + j;
    Complex factor = z;
    factor += Complex(Real(base, bits), Real(bits));
    if (factor.is_zero())
      throw SingularDenominatorError(j, "walk_weight: vanishing factor at vertex " +
                                            std::to_string(j));
    den *= factor;
  }
  return num / den;
}

}  // namespace dgap
