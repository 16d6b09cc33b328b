#ifndef PATGF_JSON_IO_HPP
#define PATGF_JSON_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "patgf/errors.hpp"
#include "patgf/rational_function.hpp"

namespace patgf {

// Coefficients travel as decimal strings ("-3", "1/2") so consumers never
// need wide integer support.

inline nlohmann::json coefficientsToJson(std::span<const Rational> coeffs) {
  auto arr = nlohmann::json::array();
  for (const auto& c : coeffs) arr.push_back(c.str());
  return arr;
}

inline nlohmann::json toJson(const RationalFunction& f) {
  return {{"num", coefficientsToJson(f.num().coeffs())}, {"den", coefficientsToJson(f.den().coeffs())}};
}

inline nlohmann::json toJson(const PowerSeries& s) { return coefficientsToJson(s.coeffs()); }

inline Polynomial polynomialFromJson(const nlohmann::json& arr) {
  if (!arr.is_array()) throw Error(ErrorCode::kParseError, "expected an array of coefficient strings");
  std::vector<Rational> coeffs;
  for (const auto& item : arr) {
    if (!item.is_string()) throw Error(ErrorCode::kParseError, "coefficients must be strings");
    try {
      coeffs.emplace_back(item.get<std::string>());
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParseError, "bad coefficient '" + item.get<std::string>() + "'");
    }
  }
  return Polynomial(std::move(coeffs));
}

inline RationalFunction rationalFunctionFromJson(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw Error(ErrorCode::kParseError, "expected {\"num\": [...], \"den\": [...]}");
  return RationalFunction(polynomialFromJson(j.at("num")), polynomialFromJson(j.at("den")));
}

}  // namespace patgf

#endif  // PATGF_JSON_IO_HPP
