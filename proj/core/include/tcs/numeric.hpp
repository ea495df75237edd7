#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace tcs {

// All arithmetic in the library is exact: arbitrary-precision integers for
// lattice data, rationals (always canonicalized, positive denominator) for
// points and solutions. No floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline int sgn(const Int& a) { return mpz_sgn(a.get_mpz_t()); }
inline int sgn(const Rat& a) { return mpq_sgn(a.get_mpq_t()); }

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// gcd of a vector, always >= 0; gcd of the zero vector is 0.
Int content(const IntVec& v);

// Divide by the content so the entries are coprime. Direction (sign) is kept.
void make_primitive(IntVec& v);

// Exact dot products.
Int dot(const IntVec& a, const IntVec& b);
Rat dot(const IntVec& a, const RatVec& b);

IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scaled(const Int& c, const IntVec& v);
IntVec negated(const IntVec& v);
bool is_zero(const IntVec& v);
bool is_zero(const RatVec& v);

// a*x + b*y entrywise.
IntVec combine(const Int& a, const IntVec& x, const Int& b, const IntVec& y);

// Clear denominators: smallest positive multiple of v with integer entries,
// divided down to primitive. Zero vector maps to zero vector.
IntVec primitive_of_rational(const RatVec& v);

RatVec to_rational(const IntVec& v);

int compare(const IntVec& a, const IntVec& b);  // lexicographic

std::string to_string(const Int& a);
std::string to_string(const Rat& a);

// Parses "-12" / "3/4"; rejects trailing garbage.
std::optional<Rat> parse_rational(const std::string& s);
std::optional<Int> parse_integer(const std::string& s);

// Comma-separated rational vector, e.g. "1,1,2" or "3/2,-1".
std::optional<RatVec> parse_point(const std::string& s);

}  // namespace tcs
