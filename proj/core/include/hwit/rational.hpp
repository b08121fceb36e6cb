#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hwit {

// Exact arbitrary-precision arithmetic. cpp_rational keeps the canonical
// form we rely on everywhere: reduced fraction, positive denominator.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline int sign_of(const Rat& r) { return r.sign(); }
inline int sign_of(const Int& n) { return n.sign(); }

// Parses "n" or "n/d" with optional leading '-'. Throws ParseError on
// malformed input or a zero denominator.
Rat parse_rat(const std::string& text);

std::string to_string(const Rat& r);
std::string to_string(const Int& n);

// Exact integer square root of a perfect square; throws std::domain_error
// when n is negative or not a square.
Int sqrt_exact(const Int& n);
Rat sqrt_exact(const Rat& r);

}  // namespace hwit
