#ifndef PATGF_RATIONAL_FUNCTION_HPP
#define PATGF_RATIONAL_FUNCTION_HPP

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "patgf/errors.hpp"
#include "patgf/polynomial.hpp"

namespace patgf {

/// Truncated power series: exactly order + 1 coefficients, nothing implied
/// beyond them.
class PowerSeries {
 public:
  explicit PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error(ErrorCode::kPreconditionViolated, "a power series needs order >= 0");
  }

  static PowerSeries fromCounts(const std::vector<std::uint64_t>& counts) {
    std::vector<Rational> v;
    v.reserve(counts.size());
    for (auto c : counts) v.emplace_back(BigInt(c));
    return PowerSeries(std::move(v));
  }

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int i) const { return coeffs_.at(i); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  /// Product truncated to the smaller of the two orders.
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const int order = std::min(a.order(), b.order());
    std::vector<Rational> v(order + 1);
    for (int i = 0; i <= order; ++i)
      for (int j = 0; i + j <= order; ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return PowerSeries(std::move(v));
  }

  PowerSeries truncated(int order) const {
    if (order > this->order())
      throw Error(ErrorCode::kIndexOutOfRange, "cannot extend a truncated series");
    return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  bool isIntegral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return denominator(c) == 1; });
  }

  /// Comma-separated coefficients ("1,1,2,5").
  std::string toString() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i > 0) out += ',';
      out += coeffs_[i].str();
    }
    return out;
  }

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// num/den in lowest terms. The scalar is fixed by making the lowest nonzero
/// coefficient of den equal to 1 (den(0) = 1 for anything expandable at the
/// origin), so two functions are equal iff their representations are.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial{1}) {}

  RationalFunction(Polynomial num)  // NOLINT(google-explicit-constructor)
      : num_(std::move(num)), den_(Polynomial{1}) {
    normalize();
  }

  RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.isZero()) throw Error(ErrorCode::kDivisionByZero, "zero denominator");
    normalize();
  }

  static RationalFunction constant(const Rational& c) { return Polynomial::constant(c); }

  const Polynomial& num() const noexcept { return num_; }
  const Polynomial& den() const noexcept { return den_; }
  bool isZero() const noexcept { return num_.isZero(); }

  RationalFunction operator-() const { return RationalFunction(-num_, den_, Normalized{}); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.isZero()) throw Error(ErrorCode::kDivisionByZero, "division by the zero rational function");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }

  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  /// First order + 1 Taylor coefficients at x = 0.
  PowerSeries series(int order) const {
    if (order < 0) throw Error(ErrorCode::kPreconditionViolated, "negative series order");
    const Rational d0 = den_.coeff(0);
    if (d0 == 0) throw Error(ErrorCode::kPoleAtOrigin, toString() + " has a pole at x = 0");
    std::vector<Rational> c(order + 1);
    for (int n = 0; n <= order; ++n) {
      Rational acc = num_.coeff(n);
      for (int i = 1; i <= std::min(n, den_.degree()); ++i) acc -= den_.coeff(i) * c[n - i];
      c[n] = acc / d0;
    }
    return PowerSeries(std::move(c));
  }

  std::string toString(TermOrder order = TermOrder::kAscending) const {
    const auto wrap = [order](const Polynomial& p) {
      std::string s = p.toString(order);
      const bool single = std::count_if(p.coeffs().begin(), p.coeffs().end(),
                                        [](const Rational& c) { return c != 0; }) <= 1;
      return single && s.front() != '-' ? s : "(" + s + ")";
    };
    if (den_ == Polynomial{1}) return num_.toString(order);
    return wrap(num_) + "/" + wrap(den_);
  }

 private:
  struct Normalized {};
  RationalFunction(Polynomial num, Polynomial den, Normalized)
      : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (num_.isZero()) {
      den_ = Polynomial{1};
      return;
    }
    if (den_.degree() > 0) {
      const Polynomial g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = Polynomial::divmod(num_, g).first;
        den_ = Polynomial::divmod(den_, g).first;
      }
    }
    const Rational scale = Rational(1) / den_.coeff(den_.valuation());
    if (scale != 1) {
      num_ = scale * num_;
      den_ = scale * den_;
    }
  }

  Polynomial num_;
  Polynomial den_;
};

/// Canonical representative of num/den.
inline RationalFunction rfNormalize(const Polynomial& num, const Polynomial& den) {
  return RationalFunction(num, den);
}

inline std::ostream& operator<<(std::ostream& os, const PowerSeries& v) { return os << v.toString(); }
inline std::ostream& operator<<(std::ostream& os, const RationalFunction& v) { return os << v.toString(); }

}  // namespace patgf

#endif  // PATGF_RATIONAL_FUNCTION_HPP
