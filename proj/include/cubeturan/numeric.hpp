#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace cubeturan {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt binomial(int n, int k);
BigInt pow2(int e);

// Exact rational of a decimal literal such as "0.36578".
Rational decimal_rational(const std::string& text);

inline std::string to_decimal(const BigInt& v) { return v.str(); }
std::string to_string(const Rational& r);

}  // namespace cubeturan
