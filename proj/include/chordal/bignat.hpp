#pragma once

#include <gmpxx.h>

#include <string>

namespace chordal {

// Arbitrary-precision nonnegative integer. Nonnegativity is a usage
// convention; GMP integers are signed.
using BigNat = mpz_class;
using Rational = mpq_class;

inline std::string to_decimal(const BigNat& v) { return v.get_str(10); }

}  // namespace chordal
