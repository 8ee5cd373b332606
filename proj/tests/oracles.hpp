#ifndef NUMSG_TESTS_ORACLES_HPP
#define NUMSG_TESTS_ORACLES_HPP

// Naive reference implementations. Nothing here calls into the library, so
// agreement with it is evidence rather than tautology.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

/// Gaps of <gens>, by closing under addition on [0, limit].
inline std::vector<int> gaps_of_generators(const std::vector<int>& gens, int limit = 200) {
    std::vector<bool> in(static_cast<std::size_t>(limit) + 1, false);
    in[0] = true;
    for (int x = 1; x <= limit; ++x)
        for (int a : gens)
            if (a <= x && in[static_cast<std::size_t>(x - a)]) in[static_cast<std::size_t>(x)] = true;
    std::vector<int> gaps;
    for (int x = 1; x <= limit; ++x)
        if (!in[static_cast<std::size_t>(x)]) gaps.push_back(x);
    return gaps;
}

/// True if the complement of `gaps` in N is closed under addition.
inline bool is_gap_set(const std::vector<int>& gaps) {
    if (gaps.empty()) return true;
    const std::set<int> g(gaps.begin(), gaps.end());
    const int top = *g.rbegin();
    for (int a = 1; a <= top; ++a) {
        if (g.count(a)) continue;
        for (int b = a; a + b <= top; ++b)
            if (!g.count(b) && g.count(a + b)) return false;
    }
    return true;
}

/// Every gap set of size g, by filtering all g-subsets of [1, 2g-1].
inline std::vector<std::vector<int>> all_gap_sets(int g) {
    std::vector<std::vector<int>> out;
    if (g == 0) {
        out.push_back({});
        return out;
    }
    const int n = 2 * g - 1;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(pick.size()) == g) {
            if (is_gap_set(pick)) out.push_back(pick);
            return;
        }
        for (int x = next; x <= n; ++x) {
            pick.push_back(x);
            self(self, x + 1);
            pick.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

inline int multiplicity(const std::vector<int>& gaps) {
    int m = 1;
    while (std::binary_search(gaps.begin(), gaps.end(), m)) ++m;
    return m;
}

inline int frobenius(const std::vector<int>& gaps) { return gaps.empty() ? -1 : gaps.back(); }

inline std::int64_t weight(const std::vector<int>& gaps) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < gaps.size(); ++i) s += gaps[i] - static_cast<std::int64_t>(i + 1);
    return s;
}

/// Apery-set coordinates k_i with k_i m + i the least member congruent to i.
inline std::vector<int> kunz(const std::vector<int>& gaps) {
    const int m = multiplicity(gaps);
    std::vector<int> k;
    for (int i = 1; i < m; ++i) {
        int x = i;
        while (std::binary_search(gaps.begin(), gaps.end(), x)) x += m;
        k.push_back((x - i) / m);
    }
    return k;
}

/// All sums of n elements of h with repetition, by nested iteration.
inline std::set<int> nfold(const std::vector<int>& h, int n) {
    std::set<int> cur{0};
    for (int step = 0; step < n; ++step) {
        std::set<int> next;
        for (int a : cur)
            for (int b : h) next.insert(a + b);
        cur = std::move(next);
    }
    return cur;
}

/// Partitions of x into at most y parts each at most z, by listing.
inline std::uint64_t partitions(int x, int y, int z) {
    if (x == 0) return 1;
    if (x < 0 || y == 0 || z == 0) return 0;
    // Largest part is exactly p, for p = 1..min(x, z).
    std::uint64_t c = 0;
    for (int p = 1; p <= std::min(x, z); ++p) c += partitions(x - p, y - 1, p);
    return c;
}

inline std::uint64_t partitions_unrestricted(int n) { return partitions(n, n, n); }

inline std::uint64_t fib(int n) {
    std::uint64_t a = 0, b = 1;
    for (int i = 0; i < n; ++i) {
        const std::uint64_t t = a + b;
        a = b;
        b = t;
    }
    return a;
}

inline std::uint64_t choose(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

}  // namespace oracle

#endif  // NUMSG_TESTS_ORACLES_HPP
