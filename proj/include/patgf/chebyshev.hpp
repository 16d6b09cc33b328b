#ifndef PATGF_CHEBYSHEV_HPP
#define PATGF_CHEBYSHEV_HPP

#include <string>
#include <vector>

#include "patgf/errors.hpp"
#include "patgf/polynomial.hpp"
#include "patgf/rational_function.hpp"

// The continued fraction
//
//   R_{k;E}(x) = 1/(1 - x/(1 - x/( ... /(1 - x*E)))),   k levels,  R_{0;E} = E,
//
// and its closed forms in Chebyshev polynomials of the second kind evaluated
// at t = 1/(2*sqrt(x)). Every such expression is carried in the sqrt-free form
//
//   q_k(x) = x^{k/2} * U_k(1/(2*sqrt(x))),
//   q_{-1} = 0,  q_0 = 1,  q_k = q_{k-1} - x*q_{k-2},
//
// which follows from U_k(t) = 2t*U_{k-1}(t) - U_{k-2}(t) after multiplying
// through by x^{k/2}. With this substitution
//
//   U_{k-1} - sqrt(x)*E*U_{k-2}       x^{-(k-1)/2} (q_{k-1} - x*E*q_{k-2})
//   --------------------------------  = ------------------------------------
//   sqrt(x)(U_k - sqrt(x)*E*U_{k-1})    x^{-(k-1)/2} (q_k - x*E*q_{k-1})
//
// and x^{k/2} * (U_k - sqrt(x)*E*U_{k-1}) = q_k - x*E*q_{k-1}, so both closed
// forms become identities between ordinary rational functions.

namespace patgf {

/// q_k for k >= -1.
inline Polynomial reducedChebyshev(int k) {
  if (k < -1) throw Error(ErrorCode::kIndexOutOfRange, "q_k is defined for k >= -1, got " + std::to_string(k));
  if (k == -1) return {};
  Polynomial prev;      // q_{-1}
  Polynomial cur{1};    // q_0
  const Polynomial x = Polynomial::x();
  for (int i = 1; i <= k; ++i) {
    Polynomial next = cur - x * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// R_{k;E} by unrolling R_{j;E} = 1/(1 - x*R_{j-1;E}).
inline RationalFunction cfIterative(int k, const RationalFunction& e) {
  if (k < 0) throw Error(ErrorCode::kIndexOutOfRange, "continued fraction depth must be >= 0");
  const RationalFunction one = RationalFunction::constant(1);
  const RationalFunction x = Polynomial::x();
  RationalFunction r = e;
  for (int j = 1; j <= k; ++j) {
    const RationalFunction den = one - x * r;
    if (den.isZero())
      throw Error(ErrorCode::kDegenerateContinuedFraction, "1 - x*R vanishes at level " + std::to_string(j));
    r = one / den;
  }
  return r;
}

namespace detail {

// q_k - x*E*q_{k-1}
inline RationalFunction shiftedCombination(int k, const RationalFunction& e) {
  return RationalFunction(reducedChebyshev(k)) -
         RationalFunction(Polynomial::x() * reducedChebyshev(k - 1)) * e;
}

}  // namespace detail

/// R_{k;E} = (q_{k-1} - x*E*q_{k-2}) / (q_k - x*E*q_{k-1}), k >= 1.
inline RationalFunction cfClosed(int k, const RationalFunction& e) {
  if (k < 1) throw Error(ErrorCode::kIndexOutOfRange, "closed form needs k >= 1");
  const RationalFunction den = detail::shiftedCombination(k, e);
  if (den.isZero()) throw Error(ErrorCode::kDegenerateContinuedFraction, "q_k - x*E*q_{k-1} vanishes");
  return detail::shiftedCombination(k - 1, e) / den;
}

/// R_{1;E} * ... * R_{k;E} = 1 / (q_k - x*E*q_{k-1}), k >= 1.
inline RationalFunction cfProductClosed(int k, const RationalFunction& e) {
  if (k < 1) throw Error(ErrorCode::kIndexOutOfRange, "product closed form needs k >= 1");
  const RationalFunction den = detail::shiftedCombination(k, e);
  if (den.isZero()) throw Error(ErrorCode::kDegenerateContinuedFraction, "q_k - x*E*q_{k-1} vanishes");
  return RationalFunction::constant(1) / den;
}

/// How reducedW treats q_m for m < -1, which the Chebyshev family leaves undefined.
enum class BelowRange { kReject, kTreatAsZero };

/// x^{(k-j)/2} * (U_{k-j} - x*U_{k-j-2}) at 1/(2*sqrt(x)), i.e.
/// q_{k-j} - x^2 * q_{k-j-2}.
inline Polynomial reducedW(int k, int j, BelowRange policy = BelowRange::kReject) {
  const int m = k - j;
  if (m < 0) throw Error(ErrorCode::kIndexOutOfRange, "W_{k;j} needs k - j >= 0");
  if (m - 2 < -1 && policy == BelowRange::kReject)
    throw Error(ErrorCode::kIndexOutOfRange,
                "W_{" + std::to_string(k) + ";" + std::to_string(j) + "} references q_" +
                    std::to_string(m - 2) + "; pass BelowRange::kTreatAsZero to opt in");
  const Polynomial tail = m - 2 >= -1 ? reducedChebyshev(m - 2) : Polynomial{};
  return reducedChebyshev(m) - Polynomial::monomial(2) * tail;
}

/// c_0..c_order with c_{n+1} = sum_i c_i c_{n-i}.
inline PowerSeries catalanSeries(int order) {
  if (order < 0) throw Error(ErrorCode::kPreconditionViolated, "negative order");
  std::vector<Rational> c(order + 1);
  c[0] = 1;
  for (int n = 0; n < order; ++n) {
    Rational acc = 0;
    for (int i = 0; i <= n; ++i) acc += c[i] * c[n - i];
    c[n + 1] = acc;
  }
  return PowerSeries(std::move(c));
}

/// E_l(x) = c_0 + c_1 x + ... + c_{l-1} x^{l-1}.
inline Polynomial catalanPolynomial(int l) {
  if (l <= 0) return {};
  return Polynomial(catalanSeries(l - 1).coeffs());
}

}  // namespace patgf

#endif  // PATGF_CHEBYSHEV_HPP
