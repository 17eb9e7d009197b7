#ifndef MIRLAT_RATIONAL_HPP_
#define MIRLAT_RATIONAL_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace mirlat {

// Exact rational over arbitrary-precision integers. Always kept canonical.
using Rational = mpq_class;
using RationalVec = std::vector<Rational>;

// Canonical p/q. (Two-argument mpq_class construction does not canonicalize.)
Rational frac(std::int64_t p, std::int64_t q);

// Parses "p/q", "p" or "-p/q". Throws Error(Parse) on malformed input or q=0.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);
bool is_half_integer(const Rational& q);   // q ∈ ½ℤ

// Throws Error(NonIntegral) unless q is an integer fitting in int64.
std::int64_t to_int64(const Rational& q, std::string_view what = "value");

Rational dot(const RationalVec& a, const RationalVec& b);

// Overflow-checked int64 helpers for the integer-valued CY1/K3 calculus.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);

} // namespace mirlat

#endif
