#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "parv/errors.hpp"

namespace parv {

// All geometry in this library is exact. Scalar is an arbitrary-precision
// rational kept in canonical form (denominator > 0, gcd(num, den) = 1);
// mpq_class maintains that invariant through arithmetic.
using Scalar = mpq_class;
using Int = mpz_class;

using Vec = std::vector<Scalar>;
using IVec = std::vector<Int>;

/// Parses "p", "-p" or "p/q". Throws input_error on a zero denominator or
/// any other malformed token.
Scalar rational_from_string(const std::string& text);

/// Canonical "p" / "p/q" rendering.
std::string rational_to_string(const Scalar& q);

/// Decimal approximation, marked with a leading '~'. Only ever used for
/// human-readable report annotations, never in a verification path.
std::string decimal_approx(const Scalar& q, int digits = 6);

std::string vec_to_string(const Vec& v);
std::string ivec_to_string(const IVec& v);

}  // namespace parv
