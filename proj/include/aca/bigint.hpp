#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace aca {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_factorial(unsigned m) {
    BigInt r = 1;
    for (unsigned i = 2; i <= m; ++i) r *= i;
    return r;
}

inline BigInt big_pow(const BigInt& base, unsigned exp) {
    BigInt r = 1, b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

inline BigInt big_pow2(unsigned exp) { return BigInt(1) << exp; }

}  // namespace aca
