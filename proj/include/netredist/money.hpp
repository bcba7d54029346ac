#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace netredist {

// All monetary amounts (valuations, payments, rebates, surpluses) are exact
// rationals. Every comparison in the mechanisms is an equality-or-order test
// on these; floating point would silently break tie handling and the
// non-deficit accounting, so it is banned from the money path.
using Money = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepted forms: "12", "-3", "2.5", "0.125", "2/5". Whitespace is trimmed.
// Throws MalformedInputError(bad_money) otherwise.
Money parse_money(const std::string& text);

// Inverse of parse_money: integers render bare ("17"), amounts with a
// denominator dividing 1000 render as minimal decimals ("2.5", "0.833" never
// appears — 5/6 is not representable in 3 digits and renders "5/6"), anything
// else renders "p/q". Deterministic; round-trips through parse_money.
std::string format_money(const Money& value);

// floor(value) as a plain integer; value must fit.
long long money_floor(const Money& value);

inline Money money_ratio(long long num, long long den) { return Money(BigInt(num), BigInt(den)); }

}  // namespace netredist
