#ifndef NUMSG_NUMERIC_HPP
#define NUMSG_NUMERIC_HPP

#include <cstdint>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace numsg {

using BigInt = boost::multiprecision::cpp_int;

/// C(n, k), zero when k < 0 or k > n or n < 0.
inline BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

/// F_n with F_1 = F_2 = 1; F_0 = 0.
inline BigInt fibonacci(long n) {
    if (n < 0) throw std::domain_error("fibonacci: negative index");
    BigInt a = 0, b = 1;
    for (long i = 0; i < n; ++i) {
        BigInt t = a + b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

inline std::uint64_t fibonacci_u64(int n) {
    if (n < 0 || n > 93) throw std::domain_error("fibonacci_u64: index out of range");
    std::uint64_t a = 0, b = 1;
    for (int i = 0; i < n; ++i) {
        const std::uint64_t t = a + b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace numsg

#endif  // NUMSG_NUMERIC_HPP
