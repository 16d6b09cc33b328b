#ifndef PATGF_CATALOG_HPP
#define PATGF_CATALOG_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "patgf/chebyshev.hpp"
#include "patgf/engine.hpp"
#include "patgf/errors.hpp"
#include "patgf/permutation.hpp"
#include "patgf/rational_function.hpp"

// Closed forms for families built from
//
//   U_l^k = { tau in S_k : tau_{l+1..k} = (l+1, ..., k) },   |U_l^k| = l!,
//
// all counted inside S_n(132) and expressed through the reduced Chebyshev
// sequence q_k of chebyshev.hpp, with E_l = c_0 + ... + c_{l-1} x^{l-1}.

namespace patgf {

/// U_l^k in canonical order.
inline PatternSet ulkPatterns(int k, int l) {
  if (l < 1 || l > k) throw Error(ErrorCode::kPreconditionViolated, "U_l^k needs 1 <= l <= k");
  std::vector<int> head(l);
  std::iota(head.begin(), head.end(), 1);
  PatternSet out;
  do {
    std::vector<int> e = head;
    for (int v = l + 1; v <= k; ++v) e.push_back(v);
    out.emplace_back(std::move(e));
  } while (std::next_permutation(head.begin(), head.end()));
  return canonicalSet(std::move(out));
}

/// { (tau', k) : tau' in T' } with k = |tau'| + 1.
inline PatternSet appendLargest(const PatternSet& patterns) {
  PatternSet out;
  for (const auto& p : patterns) {
    std::vector<int> e(p.begin(), p.end());
    e.push_back(static_cast<int>(p.size()) + 1);
    out.emplace_back(std::move(e));
  }
  return canonicalSet(std::move(out));
}

/// F_T = 1/(1 - x*F_{T'}) when T is T' with a new largest entry appended.
inline RationalFunction liftByLargest(const RationalFunction& f_prime) {
  const RationalFunction den = RationalFunction::constant(1) - RationalFunction(Polynomial::x()) * f_prime;
  if (den.isZero()) throw Error(ErrorCode::kDegenerateContinuedFraction, "1 - x*F' vanishes");
  return RationalFunction::constant(1) / den;
}

/// F_{U_l^k} = R_{k-l; E_l}.
inline RationalFunction gfAvoidUlk(int k, int l) {
  if (l < 1 || l > k) throw Error(ErrorCode::kPreconditionViolated, "gfAvoidUlk needs 1 <= l <= k");
  const RationalFunction e = catalanPolynomial(l);
  if (k == l) return e;
  return cfClosed(k - l, e);
}

/// 132-avoiders avoiding U_l^k \ {t} and containing t exactly once:
/// x^k / (q_{k-l} - x*E_l*q_{k-l-1})^2, the same for every 132-avoiding t in
/// U_l^k. Members containing 132 (possible once l >= 3) give 0.
inline RationalFunction gfExactOnceUlk(int k, int l, const Permutation& t) {
  if (l < 1 || l >= k) throw Error(ErrorCode::kPreconditionViolated, "gfExactOnceUlk needs 1 <= l < k");
  const PatternSet family = ulkPatterns(k, l);
  if (!std::binary_search(family.begin(), family.end(), t))
    throw Error(ErrorCode::kPreconditionViolated, t.toString() + " is not in U_" + std::to_string(l) + "^" +
                                                      std::to_string(k));
  if (!avoids132(t)) return {};
  const Polynomial x = Polynomial::x();
  const Polynomial base = reducedChebyshev(k - l) - x * catalanPolynomial(l) * reducedChebyshev(k - l - 1);
  return RationalFunction(Polynomial::monomial(k), base * base);
}

/// A rational function times x^{half_exponent/2}; used to replay expressions
/// written with sqrt(x) and insist that the half powers cancel.
struct HalfGraded {
  RationalFunction value;
  int half_exponent = 0;

  friend HalfGraded operator*(const HalfGraded& a, const HalfGraded& b) {
    return {a.value * b.value, a.half_exponent + b.half_exponent};
  }
  friend HalfGraded operator/(const HalfGraded& a, const HalfGraded& b) {
    return {a.value / b.value, a.half_exponent - b.half_exponent};
  }

  RationalFunction reduce() const {
    if (half_exponent % 2 != 0)
      throw Error(ErrorCode::kUnreducedHalfPower, "x^(" + std::to_string(half_exponent) + "/2) survives");
    const int e = half_exponent / 2;
    if (e >= 0) return value * RationalFunction(Polynomial::monomial(e));
    return value / RationalFunction(Polynomial::monomial(-e));
  }
};

/// W_{k;j} = U_{k-j} - x*U_{k-2-j} at 1/(2*sqrt(x)), i.e. x^{-(k-j)/2} * reducedW(k, j).
inline HalfGraded chebyshevW(int k, int j) { return {reducedW(k, j), -(k - j)}; }

/// The closed sum usually quoted for 132-avoiders containing both members of
/// U_2^k = {12...k, 213...k} exactly once:
///
///   2 x^2 sqrt(x) / W_{k;1}^2 * sum_{j=3}^{k-2} 1 / (W_{k;j-1} W_{k;j}).
///
/// Reproduced literally. Its series disagrees with exhaustive counts (it is
/// 0 for k = 3, 4 where the true counts are not); gfBothOnceU2kCorrected is
/// the oracle-validated form.
inline RationalFunction gfBothOnceU2k(int k) {
  if (k < 3) throw Error(ErrorCode::kPreconditionViolated, "gfBothOnceU2k needs k >= 3");
  const HalfGraded prefactor{RationalFunction(Polynomial::monomial(2, 2)), 1};
  const HalfGraded w1 = chebyshevW(k, 1);
  RationalFunction total;
  for (int j = 3; j <= k - 2; ++j) {
    const HalfGraded term = prefactor / (w1 * w1 * chebyshevW(k, j - 1) * chebyshevW(k, j));
    total += term.reduce();
  }
  return total;
}

/// Both members of U_2^k exactly once, from the recurrence
///
///   G_k = x F_{U_2^{k-1}} G_k + x F_{12..k-1; 213..k-1} F_{213..k; 12..k}
///       + x F_{213..k-1; 12..k-1} F_{12..k; 213..k} + x G_{k-1} F_{U_2^k},
///
/// which holds for k >= 4. With D_i = q_{i-1} - x^2 q_{i-3} (so that
/// F_{U_2^i} = D_{i-1}/D_i and each exactly-once factor is x^i/D_i^2) it
/// unrolls to
///
///   G_k = ( x^{k-3} D_3^2 G_3 + 2 sum_{i=4}^{k} x^{k+i} / (D_{i-1} D_i) ) / D_k^2.
///
/// G_3 is not zero and has no such shortcut; it comes from the engine.
inline RationalFunction gfBothOnceU2kCorrected(int k, GfEngine& engine) {
  if (k < 3) throw Error(ErrorCode::kPreconditionViolated, "gfBothOnceU2kCorrected needs k >= 3");
  const auto d = [](int i) { return RationalFunction(reducedW(i, 1)); };
  const RationalFunction g3 = engine.exact({}, ulkPatterns(3, 2));
  RationalFunction numerator = RationalFunction(Polynomial::monomial(k - 3)) * d(3) * d(3) * g3;
  for (int i = 4; i <= k; ++i)
    numerator += RationalFunction(Polynomial::monomial(k + i, 2)) / (d(i - 1) * d(i));
  return numerator / (d(k) * d(k));
}

inline RationalFunction gfBothOnceU2kCorrected(int k) {
  GfEngine engine;
  return gfBothOnceU2kCorrected(k, engine);
}

}  // namespace patgf

#endif  // PATGF_CATALOG_HPP
