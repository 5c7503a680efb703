#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace conifold {

using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Renders an exact rational as "p" or "p/q" (q > 0, fully reduced).
std::string to_string(const Rational& x);

/// Exact binomial coefficient C(a, k) for a >= 0, k >= 0.
BigInt binomial(const BigInt& a, int k);

/// x^e for integer e of either sign; throws ZeroWeight when inverting zero.
Rational rational_pow(const Rational& x, long long e);

} // namespace conifold
