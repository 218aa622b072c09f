#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace simwaring {

/// Exact integer type for ranks and counts. Products of (a_i + 1) overflow
/// 64 bits quickly, so everything rank-valued goes through this.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& value) { return value.str(); }

inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

/// multinomial(d; parts) = d! / prod(parts_i!), with sum(parts) == d.
inline BigInt multinomial(int degree, const std::vector<int>& parts) {
    BigInt result = 1;
    int remaining = degree;
    for (int part : parts) {
        result *= binomial(remaining, part);
        remaining -= part;
    }
    return result;
}

} // namespace simwaring
