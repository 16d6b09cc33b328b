#ifndef PATGF_POLYNOMIAL_HPP
#define PATGF_POLYNOMIAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <initializer_list>
#include <span>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "patgf/errors.hpp"

namespace patgf {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class TermOrder { kAscending, kDescending };

inline std::string toString(const Rational& q) { return q.str(); }

/// Dense univariate polynomial in x over the rationals. Coefficients are kept
/// in ascending degree with no trailing zeros, so the zero polynomial is the
/// empty sequence and structural equality is value equality.
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  Polynomial(std::initializer_list<long long> coeffs) {
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  static Polynomial constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

  /// x^power.
  static Polynomial monomial(int power, const Rational& c = 1) {
    std::vector<Rational> v(power + 1);
    v[power] = c;
    return Polynomial(std::move(v));
  }

  static Polynomial x() { return monomial(1); }

  bool isZero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  /// Index of the lowest nonzero coefficient; -1 for the zero polynomial.
  int valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return static_cast<int>(i);
    return -1;
  }

  Rational coeff(int i) const {
    return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : Rational(0);
  }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }
  const Rational& leading() const { return coeffs_.back(); }

  Rational evaluate(const Rational& at) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  /// Multiplies by x^k.
  Polynomial shifted(int k) const {
    if (isZero()) return {};
    std::vector<Rational> v(k, Rational(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(v));
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& b) {
    if (b.coeffs_.size() > coeffs_.size()) coeffs_.resize(b.coeffs_.size());
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& b) {
    if (b.coeffs_.size() > coeffs_.size()) coeffs_.resize(b.coeffs_.size());
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.isZero() || b.isZero()) return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(v));
  }

  friend Polynomial operator*(const Rational& s, const Polynomial& p) {
    if (s == 0) return {};
    Polynomial r = p;
    for (auto& c : r.coeffs_) c *= s;
    return r;
  }

  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Euclidean division: a = q*b + r with deg r < deg b.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.isZero()) throw Error(ErrorCode::kDivisionByZero, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial{}, a};
    std::vector<Rational> rem = a.coeffs_;
    std::vector<Rational> quo(a.degree() - b.degree() + 1);
    const Rational& lead = b.leading();
    for (int i = a.degree() - b.degree(); i >= 0; --i) {
      const Rational f = rem[i + b.degree()] / lead;
      quo[i] = f;
      if (f == 0) continue;
      for (int j = 0; j <= b.degree(); ++j) rem[i + j] -= f * b.coeffs_[j];
    }
    rem.resize(b.degree());
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
  }

  /// Monic gcd; gcd(0, 0) = 0.
  friend Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.isZero()) {
      auto r = divmod(a, b).second;
      a = std::move(b);
      b = r.isZero() ? std::move(r) : r.monic();
    }
    return a.isZero() ? a : a.monic();
  }

  Polynomial monic() const { return isZero() ? *this : Rational(1) / leading() * *this; }

  /// "1 - 2*x - x^2" (ascending) or "-x^2 - 2*x + 1" (descending).
  std::string toString(TermOrder order = TermOrder::kAscending) const {
    if (isZero()) return "0";
    std::vector<int> powers;
    for (int i = 0; i <= degree(); ++i)
      if (coeffs_[i] != 0) powers.push_back(i);
    if (order == TermOrder::kDescending) std::reverse(powers.begin(), powers.end());
    std::string out;
    bool first = true;
    for (int e : powers) {
      const Rational& c = coeffs_[e];
      const bool negative = c < 0;
      if (first)
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      first = false;
      const Rational mag = negative ? Rational(-c) : c;
      if (e == 0) {
        out += mag.str();
        continue;
      }
      if (mag != 1) out += mag.str() + "*";
      out += e == 1 ? "x" : "x^" + std::to_string(e);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& v) { return os << v.toString(); }

}  // namespace patgf

#endif  // PATGF_POLYNOMIAL_HPP
