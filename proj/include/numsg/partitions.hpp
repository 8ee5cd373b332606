#ifndef NUMSG_PARTITIONS_HPP
#define NUMSG_PARTITIONS_HPP

#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "numsg/numeric.hpp"
#include "numsg/semigroup.hpp"

namespace numsg {

struct MathConstants {
    static constexpr double phi = std::numbers::phi;
    static constexpr double sqrt5 = 2.23606797749978969640917366873127623544061835961152572427089;
    /// (5 - sqrt 5) / 10, where f(c) peaks.
    static constexpr double alpha = (5.0 - sqrt5) / 10.0;
    /// (5 + sqrt 5) / 10 = 1 - alpha, the typical m/g ratio.
    static constexpr double gamma = (5.0 + sqrt5) / 10.0;

    /// (3/2)(ln phi / pi)^2
    static double beta1() {
        const double r = std::log(phi) / std::numbers::pi;
        return 1.5 * r * r;
    }
    /// (1 - gamma)(2 gamma - 1) - beta1
    static double beta2() { return (1.0 - gamma) * (2.0 * gamma - 1.0) - beta1(); }
};

/// Memoized p(x, y, z): partitions of x into at most y parts, each at most
/// z. For fixed (y, z) the counts are the coefficients of the Gaussian
/// binomial [y+z choose y]_q, filled by
///   G(y, z) = G(y-1, z) + q^y G(y, z-1)
/// (either fewer than y parts, or exactly y parts each reduced by one).
/// Not thread-safe; keep one table per thread.
class PartitionTable {
public:
    using Poly = std::vector<BigInt>;

    /// Coefficient vector of length y*z + 1.
    const Poly& gaussian(int y, int z) {
        if (y < 0 || z < 0) throw std::invalid_argument("PartitionTable: negative bound");
        if (y == 0 || z == 0) return unit_;
        const auto key = std::make_pair(y, z);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        // Fill iteratively along z so deep tables never recurse far.
        for (int zz = 1; zz <= z; ++zz) {
            for (int yy = 1; yy <= y; ++yy) {
                const auto k = std::make_pair(yy, zz);
                if (memo_.count(k)) continue;
                const Poly& fewer = (yy == 1) ? unit_ : memo_.at({yy - 1, zz});
                const Poly& exact = (zz == 1) ? unit_ : memo_.at({yy, zz - 1});
                Poly p(static_cast<std::size_t>(yy) * static_cast<std::size_t>(zz) + 1, 0);
                for (std::size_t i = 0; i < fewer.size(); ++i) p[i] += fewer[i];
                for (std::size_t i = 0; i < exact.size(); ++i) p[i + static_cast<std::size_t>(yy)] += exact[i];
                memo_.emplace(k, std::move(p));
            }
        }
        return memo_.at(key);
    }

    BigInt p(long x, int y, int z) {
        if (y < 0 || z < 0) throw std::invalid_argument("p_restricted: y and z must be >= 0");
        if (x < 0 || x > static_cast<long>(y) * z) return 0;
        return gaussian(y, z)[static_cast<std::size_t>(x)];
    }

    std::size_t cached() const noexcept { return memo_.size(); }

private:
    Poly unit_{1};
    std::map<std::pair<int, int>, Poly> memo_;
};

inline BigInt p_restricted(long x, int y, int z) {
    PartitionTable t;
    return t.p(x, y, z);
}

/// Number of semigroups with genus g, multiplicity m, weight w and F < 2m:
/// p(w - (g-m+1), g-m+1, 2m-2-g). Zero when the parameters admit none.
inline BigInt count_by_weight_f2m(PartitionTable& table, int g, int m, long w) {
    if (m < 1 || m > g + 1) return 0;
    const int y = g - m + 1;
    const int z = 2 * m - 2 - g;
    if (z < 0) return 0;
    return table.p(w - y, y, z);
}

inline BigInt count_by_weight_f2m(int g, int m, long w) {
    PartitionTable t;
    return count_by_weight_f2m(t, g, m, w);
}

/// For F < 2m the gaps above m are m+i_1 < ... < m+i_{g-m+1}; the partition
/// is j_a = i_a - a, nondecreasing with parts in [0, 2m-2-g].
inline std::vector<int> semigroup_to_partition(const Semigroup& s) {
    const int m = s.multiplicity();
    if (s.frobenius() >= 2 * m) throw std::domain_error("semigroup_to_partition: requires F < 2m");
    std::vector<int> parts;
    int a = 0;
    for (int h : s.gaps()) {
        if (h <= m) continue;
        ++a;
        parts.push_back(h - m - a);
    }
    return parts;
}

inline Semigroup partition_to_semigroup(int g, int m, const std::vector<int>& parts) {
    const int y = g - m + 1;
    const int z = 2 * m - 2 - g;
    if (m < 1 || y < 0 || z < 0 || static_cast<int>(parts.size()) > y)
        throw std::domain_error("partition_to_semigroup: shape does not fit genus/multiplicity");
    // Short partitions are padded with leading zeros.
    std::vector<int> j(static_cast<std::size_t>(y) - parts.size(), 0);
    j.insert(j.end(), parts.begin(), parts.end());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (j[i] < 0 || j[i] > z || (i > 0 && j[i] < j[i - 1]))
            throw std::domain_error("partition_to_semigroup: parts must be nondecreasing within [0, 2m-2-g]");
    }
    std::vector<int> gaps;
    for (int x = 1; x < m; ++x) gaps.push_back(x);
    for (int a = 1; a <= y; ++a) gaps.push_back(m + j[static_cast<std::size_t>(a - 1)] + a);
    return Semigroup::from_gaps(gaps);
}

/// Unrestricted p(n) by the standard part-size DP.
inline BigInt p_total(int n) {
    if (n < 0) return 0;
    std::vector<BigInt> dp(static_cast<std::size_t>(n) + 1, 0);
    dp[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int x = part; x <= n; ++x) dp[static_cast<std::size_t>(x)] += dp[static_cast<std::size_t>(x - part)];
    return dp[static_cast<std::size_t>(n)];
}

/// Hardy-Ramanujan leading term exp(pi sqrt(2n/3)) / (4 n sqrt 3).
inline double hr_estimate(double n) {
    if (n < 1) throw std::domain_error("hr_estimate: n must be >= 1");
    return std::exp(std::numbers::pi * std::sqrt(2.0 * n / 3.0)) / (4.0 * n * std::sqrt(3.0));
}

/// sum_R C(g-R, R) == F_{g+1}
inline bool fib_identity_check(int g) {
    if (g < 0) throw std::domain_error("fib_identity_check: negative genus");
    BigInt lhs = 0;
    for (int r = 0; 2 * r <= g; ++r) lhs += binomial(g - r, r);
    return lhs == fibonacci(g + 1);
}

/// f(c) = (1-c)^(1-c) / (c^c (1-2c)^(1-2c)) on (0, 1/2), evaluated in log
/// space. C((1-c)n, cn) grows like f(c)^n.
inline double growth_rate_f(double c) {
    if (!(c > 0.0 && c < 0.5)) throw std::domain_error("growth_rate_f: c must lie in (0, 1/2)");
    const double log_f = (1.0 - c) * std::log1p(-c) - c * std::log(c) - (1.0 - 2.0 * c) * std::log1p(-2.0 * c);
    return std::exp(log_f);
}

}  // namespace numsg

#endif  // NUMSG_PARTITIONS_HPP
