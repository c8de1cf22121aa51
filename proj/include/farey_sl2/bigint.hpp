#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace farey {

using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

Int gcd_int(const Int& a, const Int& b);

// Strict decimal: optional leading '-', then digits. Throws ParseError.
Int parse_int(std::string_view text);

inline std::string to_string(const Int& x) { return x.str(); }

// Floor division and non-negative modulus for machine indices.
inline long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}
inline long pos_mod(long a, long b) { return a - b * floor_div(a, b); }

}  // namespace farey
