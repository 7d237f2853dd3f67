#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace udca {

// Exact arithmetic everywhere. No floating point in any core module.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Rat to_rat(const Int& v) { return Rat(v); }

inline RatVec to_rat(const IntVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

/// Exact conversion back to integers; nullopt if any coordinate has a
/// denominator other than 1.
std::optional<IntVec> to_int(const RatVec& v);

bool is_zero(const IntVec& v);
bool is_zero(const RatVec& v);

IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec negate(const IntVec& a);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const RatVec& a, const Rat& s);
IntVec scale(const IntVec& a, const Int& s);

Int dot(const IntVec& a, const IntVec& b);
Rat dot(const RatVec& a, const RatVec& b);
Rat dot(const IntVec& a, const RatVec& b);

/// Mathematical floor of n/2 and ceil of n/2 (round toward -inf / +inf).
Int half_floor(const Int& n);
Int half_ceil(const Int& n);

/// floor / ceil of an exact rational.
Int rat_floor(const Rat& r);
Int rat_ceil(const Rat& r);

/// gcd of all entries, always >= 0; 0 for the zero vector.
Int content(const IntVec& v);

/// Divide by the content. Zero vectors pass through. Does not touch sign.
IntVec primitive(const IntVec& v);

/// Divide by the content and flip so the first nonzero entry is positive.
/// Only valid where the sign of the vector carries no meaning.
IntVec primitive_signed(const IntVec& v);

/// Clear denominators: smallest positive multiplier making all entries
/// integral, then reduce by content. Preserves direction.
IntVec primitive_direction(const RatVec& v);

bool lex_less(const IntVec& a, const IntVec& b);
bool lex_less(const RatVec& a, const RatVec& b);

std::string format_rat(const Rat& r);           // "p" or "p/q"
Rat parse_rat(const std::string& s);            // accepts "p" and "p/q"

std::string format_vec(const IntVec& v);
std::string format_vec(const RatVec& v);

}  // namespace udca
