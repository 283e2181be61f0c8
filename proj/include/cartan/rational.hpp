// Exact rational arithmetic used throughout: leading principal minors,
// symmetrisation weights and Gram matrices are all rational.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace cartan {

using BigInt = boost::multiprecision::cpp_int;

// Always in lowest terms with positive denominator (invariants maintained
// by the backing type); canonical zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rational_num(const Rational& q) { return numerator(q); }
inline BigInt rational_den(const Rational& q) { return denominator(q); }

inline int sign_of(const Rational& q) { return q.sign(); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// Serialized form is "p/q", or just "p" when q = 1.
std::string to_string(const Rational& q);

// Inverse of to_string; accepts optional leading '-' on the numerator.
Rational rational_from_string(const std::string& s);

}  // namespace cartan
