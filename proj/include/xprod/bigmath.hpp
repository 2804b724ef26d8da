#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace xprod {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// "p" when the denominator is 1, otherwise "p/q" (q > 0, lowest terms).
std::string rat_to_string(const BigRat& v);

// Accepts "p" and "p/q"; throws std::domain_error on anything else.
BigRat rat_from_string(std::string_view text);

}  // namespace xprod
