#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace subthresh {

using BigInt = boost::multiprecision::cpp_int;

/// Natural log of a nonnegative integer; log 0 = -inf.
double log_of(const BigInt& x);

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

/// n (n-1) ... (n-k+1); zero when k > n.
inline BigInt falling_factorial(int n, int k) {
    if (k > n) return 0;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) r *= (n - i);
    return r;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

inline std::string to_decimal(const BigInt& x) { return x.str(); }

inline bool fits_u64(const BigInt& x) {
    return x >= 0 && x <= BigInt(std::numeric_limits<std::uint64_t>::max());
}

} // namespace subthresh
