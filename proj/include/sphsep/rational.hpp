#pragma once

#include "sphsep/types.hpp"

#include <string>

namespace sphsep {

// Parses "p", "-p" or "p/q" (decimal digits) into a canonical rational.
// Throws ValidationError on malformed text or a zero denominator.
Rational parse_rational(const std::string& text);

// Serializes as "p" or "p/q", lowest terms, positive denominator.
std::string format_rational(const Rational& value);

inline double to_double(const Rational& value) { return value.convert_to<double>(); }

// Exact: every finite double is a dyadic rational.
inline Rational rational_from_double(double value) { return Rational(value); }

VectorXd to_double(const VectorXr& v);
MatrixXd to_double(const MatrixXr& m);
VectorXr lift_to_rational(const VectorXd& v);

}  // namespace sphsep
