// Exact integer/rational scalars and a few small helpers shared by all
// modules. Arbitrary precision is non-negotiable: Schur determinant
// intermediates overflow fixed-width integers already at modest rank.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <stdexcept>

namespace lrv {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt binomial(long n, long m) {
    if (m < 0 || m > n) return 0;
    if (m > n - m) m = n - m;
    BigInt num = 1;
    for (long i = 0; i < m; ++i) {
        num *= n - i;
        num /= i + 1;  // exact: product of j consecutive integers is divisible by j!
    }
    return num;
}

inline BigInt big_pow(const BigInt& base, unsigned e) {
    BigInt acc = 1, b = base;
    while (e) {
        if (e & 1u) acc *= b;
        b *= b;
        e >>= 1u;
    }
    return acc;
}

inline long long to_ll(const BigInt& x) {
    if (x > std::numeric_limits<long long>::max() ||
        x < std::numeric_limits<long long>::min())
        throw std::overflow_error("value exceeds 64-bit range: " + x.str());
    return static_cast<long long>(x);
}

}  // namespace lrv
