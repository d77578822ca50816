#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace locstat {

// Exact arbitrary-precision rational. cpp_rational keeps values canonical
// (reduced, positive denominator) after every operation.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Canonical string form "p/q" in lowest terms, q >= 1 (e.g. "3/4", "-1/2", "0/1").
std::string rat_str(const Rational& r);

// Parses "p/q" or a bare integer "p". Throws ValidationError on malformed input
// or zero denominator.
Rational rat_parse(std::string_view s);

}  // namespace locstat
