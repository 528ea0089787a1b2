#pragma once

// Exact rational scalar used throughout the combinatorial layer.
// Arbitrary precision so lattice / simplex pivots can never overflow.

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace hermrep {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// r in (1/2)Z, i.e. denominator 1 or 2 after normalization.
inline bool is_half_integer(const Rat& r) {
    const Int d = denominator(r);
    return d == 1 || d == 2;
}

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Rat rat_floor(const Rat& r) { return Rat(floor_div(numerator(r), denominator(r))); }
inline Rat rat_ceil(const Rat& r) { return -rat_floor(-r); }

// Parses "p", "-p", "p/q". Throws std::invalid_argument on anything else.
Rat parse_rat(const std::string& s);

// "p" if integral, else "p/q" (normalized, q > 0).
std::string rat_str(const Rat& r);

} // namespace hermrep
