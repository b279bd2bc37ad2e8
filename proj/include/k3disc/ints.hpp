#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <vector>

namespace k3disc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Floor division (cpp_int's operator/ truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int mod_floor(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

// Quotient rounded to nearest integer, ties toward -inf.  Keeps entries
// small during elimination.
inline Int round_div(const Int& a, const Int& b) {
    Int q = floor_div(a, b);
    Int r = a - q * b;  // 0 <= r < |b|
    if (2 * r > abs(b)) ++q;
    return q;
}

inline Int gcd_vec(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    return g;
}

// floor(sqrt(n)) for n >= 0.
inline Int isqrt_floor(const Int& n) {
    if (n < 0) throw std::invalid_argument("isqrt_floor: negative argument");
    return boost::multiprecision::sqrt(n);
}

inline Int rfloor(const Rat& r) { return floor_div(numerator(r), denominator(r)); }

inline Int rceil(const Rat& r) { return -floor_div(-numerator(r), denominator(r)); }

// Fractional part in [0,1).
inline Rat frac_part(const Rat& r) { return r - Rat(rfloor(r)); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// floor(sqrt(r)) for a rational r >= 0.  Exact: c = isqrt(floor(r)) satisfies
// c^2 <= r < (c+1)^2.
inline Int rat_sqrt_floor(const Rat& r) {
    if (r < 0) throw std::invalid_argument("rat_sqrt_floor: negative argument");
    return isqrt_floor(rfloor(r));
}

inline long long to_int64(const Int& n) {
    if (n > std::numeric_limits<long long>::max() || n < std::numeric_limits<long long>::min())
        throw std::overflow_error("to_int64: value out of range");
    return static_cast<long long>(n);
}

inline IntVec negated(const IntVec& v) {
    IntVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

// Lexicographic canonical sign: true if v should be replaced by -v
// (first nonzero coordinate negative).
inline bool sign_noncanonical(const IntVec& v) {
    for (const Int& x : v)
        if (x != 0) return x < 0;
    return false;
}

}  // namespace k3disc
