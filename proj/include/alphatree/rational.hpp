#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace alphatree {

using BigNat = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Rational make_rational(const BigNat& num, const BigNat& den);
Rational make_rational(std::int64_t num, std::int64_t den);

// Parses "3", "-1/4" or "0.125" (finite decimal) exactly.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);

double to_double(const Rational& r);

// log2 of a positive rational in float64, robust for very large num/den.
double log2_of(const Rational& r);

// Smallest integer c with 2^-c <= r, i.e. ceil(-log2 r), computed exactly.
// Requires r > 0; the result may be negative when r > 1.
std::int64_t ceil_neg_log2(const Rational& r);

// True iff r == 2^e for some integer e (r > 0).
bool is_power_of_two(const Rational& r);

// 2^-e as an exact rational; e may be negative.
Rational pow2_neg(std::int64_t e);

}  // namespace alphatree
