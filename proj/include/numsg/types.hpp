#ifndef NUMSG_TYPES_HPP
#define NUMSG_TYPES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "numsg/numeric.hpp"
#include "numsg/partitions.hpp"
#include "numsg/semigroup.hpp"

namespace numsg {

/// Position of F relative to m, 2m and 3m. F = m, 2m, 3m are impossible
/// (all are members), so the four classes partition every semigroup of
/// positive genus: F = m-1, m < F < 2m, 2m < F < 3m, F > 3m.
enum class FrobeniusClass { kOrdinary, kLow, kMid, kHigh };

inline std::string_view to_string(FrobeniusClass c) {
    switch (c) {
        case FrobeniusClass::kOrdinary: return "ORDINARY";
        case FrobeniusClass::kLow: return "LOW";
        case FrobeniusClass::kMid: return "MID";
        case FrobeniusClass::kHigh: return "HIGH";
    }
    return "?";
}

inline FrobeniusClass frobenius_class(int m, int f) {
    if (f < m) return FrobeniusClass::kOrdinary;
    if (f < 2 * m) return FrobeniusClass::kLow;
    if (f < 3 * m) return FrobeniusClass::kMid;
    return FrobeniusClass::kHigh;
}

inline FrobeniusClass frobenius_class(const Semigroup& s) {
    if (s.is_natural()) throw std::domain_error("frobenius_class: undefined for N");
    return frobenius_class(s.multiplicity(), s.frobenius());
}

/// Type (A; k) of a semigroup with 2m < F < 3m: k = F - 2m and
/// A = (S cap [m, m+k]) - m. A always contains 0 and k is not in A + A.
struct TypeAK {
    int k = 1;
    std::vector<int> a;  // ascending, subset of [0, k-1]

    friend bool operator==(const TypeAK&, const TypeAK&) = default;
    friend auto operator<=>(const TypeAK&, const TypeAK&) = default;
};

/// 0 in A, A within [0, k-1], k not in A + A.
inline bool in_family(const std::vector<int>& a, int k) {
    if (k < 1 || a.empty() || a.front() != 0) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 0 || a[i] > k - 1 || (i > 0 && a[i] <= a[i - 1])) return false;
        if (std::binary_search(a.begin(), a.end(), k - a[i])) return false;
    }
    return true;
}

inline TypeAK type_ak(const Semigroup& s) {
    if (s.is_natural() || frobenius_class(s) != FrobeniusClass::kMid)
        throw std::domain_error("type_ak: requires 2m < F < 3m");
    const int m = s.multiplicity();
    TypeAK t;
    t.k = s.frobenius() - 2 * m;
    for (int x = m; x <= m + t.k; ++x)
        if (s.contains(x)) t.a.push_back(x - m);
    return t;
}

/// Every A in the family for k: subsets of [0, k-1] containing 0 with
/// k not in A + A, including A = [0, k-1] itself when it qualifies (k = 1).
/// Output is ordered by bitmask of A \ {0}. Supports k <= 62.
inline std::vector<std::vector<int>> enumerate_Ak(int k) {
    if (k < 1) throw std::invalid_argument("enumerate_Ak: k must be >= 1");
    if (k > 62) throw std::invalid_argument("enumerate_Ak: k too large");
    std::vector<std::vector<int>> out;
    std::vector<int> cur{0};
    // Depth-first over elements 1..k-1; an element x is excluded whenever
    // k - x is already present (which also rules out 2x = k).
    auto rec = [&](auto&& self, int x) -> void {
        if (x == k) {
            out.push_back(cur);
            return;
        }
        self(self, x + 1);
        if (2 * x == k) return;
        if (std::binary_search(cur.begin(), cur.end(), k - x)) return;
        cur.push_back(x);
        self(self, x + 1);
        cur.pop_back();
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end(), [](const std::vector<int>& l, const std::vector<int>& r) {
        std::uint64_t bl = 0, br = 0;
        for (int x : l) bl |= std::uint64_t{1} << x;
        for (int x : r) br |= std::uint64_t{1} << x;
        return bl < br;
    });
    return out;
}

/// |(A+A) cap [0, k]|
inline int doubled_count(const std::vector<int>& a, int k) {
    std::vector<bool> hit(static_cast<std::size_t>(k) + 1, false);
    for (int x : a)
        for (int y : a)
            if (x + y <= k) hit[static_cast<std::size_t>(x + y)] = true;
    return static_cast<int>(std::count(hit.begin(), hit.end(), true));
}

/// Fibonacci index g - |(A+A) cap [0,k]| + |A| - k - 1 of the type bound.
inline int zhao_index(const std::vector<int>& a, int k, int g) {
    return g - doubled_count(a, k) + static_cast<int>(a.size()) - k - 1;
}

/// Upper bound F_index on the number of genus-g semigroups of type (A; k);
/// 0 when the index is not positive.
inline BigInt zhao_bound(const std::vector<int>& a, int k, int g) {
    const int idx = zhao_index(a, k, g);
    if (idx < 1) return 0;
    return fibonacci(idx);
}

/// phi/sqrt5 + (1/sqrt5) sum_{k<=k_max} sum_{A} phi^(-|(A+A) cap [0,k]| + |A| - k - 1)
inline double zhao_constant_partial(int k_max) {
    if (k_max < 1) throw std::invalid_argument("zhao_constant_partial: k_max must be >= 1");
    const double phi = MathConstants::phi;
    const double s5 = MathConstants::sqrt5;
    double inner = 0.0;
    for (int k = 1; k <= k_max; ++k)
        for (const auto& a : enumerate_Ak(k))
            inner += std::pow(phi, -doubled_count(a, k) + static_cast<int>(a.size()) - k - 1);
    return phi / s5 + inner / s5;
}

/// F < 2m and W(S) < g - 1.
inline bool eisenbud_harris(const Semigroup& s) {
    if (s.is_natural()) return false;
    return s.frobenius() < 2 * s.multiplicity() && weight(s) < s.genus() - 1;
}

struct MidWeightDecomposition {
    int s_count = 0;  // Kunz coordinates >= 2
    int t_count = 0;  // Kunz coordinates == 3
    std::int64_t d = 0;
    std::int64_t recomputed = 0;
    std::int64_t direct = 0;
    bool check = false;
};

/// With i_1 < ... < i_s the residues whose coordinate is >= 2 and
/// i_{j_1} < ... < i_{j_t} those equal to 3:
///   w = d + s + sum_a (i_{j_a} - a) + t(m - s + 1),  d = sum_a (i_a - a).
inline MidWeightDecomposition weight_decomposition_mid(const Semigroup& s) {
    if (s.is_natural() || frobenius_class(s) != FrobeniusClass::kMid)
        throw std::domain_error("weight_decomposition_mid: requires 2m < F < 3m");
    const KunzVector v = kunz_vector(s);
    const int m = v.m;
    MidWeightDecomposition r;
    std::int64_t threes = 0;
    for (int i = 1; i < m; ++i) {
        if (v.at(i) >= 2) {
            ++r.s_count;
            r.d += i - r.s_count;
        }
        if (v.at(i) == 3) {
            ++r.t_count;
            threes += i - r.t_count;
        }
    }
    r.recomputed = r.d + r.s_count + threes + static_cast<std::int64_t>(r.t_count) * (m - r.s_count + 1);
    r.direct = weight(s);
    r.check = r.recomputed == r.direct && r.s_count + r.t_count == s.genus() - m + 1;
    return r;
}

}  // namespace numsg

#endif  // NUMSG_TYPES_HPP
