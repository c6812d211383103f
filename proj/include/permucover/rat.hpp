#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "permucover/errors.hpp"

namespace permucover {

// Exact scalars. BigInt is an arbitrary-precision integer, Rat an always
// normalized rational (denominator > 0, numerator/denominator coprime,
// zero represented as 0/1). boost::multiprecision maintains the canonical
// form; everything downstream relies on it for hashing and deduplication.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Parses "p/q" or "p" with optional leading sign. Throws InputError on
// malformed text or zero denominator.
Rat parse_rat(std::string_view text);

// "p/q", or just "p" when the denominator is 1.
std::string rat_to_string(const Rat& r);

std::string bigint_to_string(const BigInt& z);
BigInt parse_bigint(std::string_view text);

double rat_to_double(const Rat& r);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

// Least common multiple of the denominators; 1 for an empty list.
BigInt common_denominator(const std::vector<Rat>& values);

} // namespace permucover
