#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace secant {

using BigInt = boost::multiprecision::cpp_int;

/// Exact binomial coefficient.  Everything downstream (degree bounds,
/// multiplicity bounds, scroll degrees) is integer arithmetic on these,
/// never floating point.
inline BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt acc = 1;
    for (long long i = 1; i <= k; ++i) {
        acc *= (n - k + i);
        acc /= i; // exact at every step: acc is binom(n-k+i, i)
    }
    return acc;
}

} // namespace secant
