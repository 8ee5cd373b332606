#ifndef NUMSG_KUNZ_HPP
#define NUMSG_KUNZ_HPP

#include <algorithm>
#include <climits>
#include <cstdint>
#include <functional>
#include <vector>

#include "numsg/kunz_vector.hpp"
#include "numsg/numeric.hpp"

namespace numsg {

namespace detail {

// Backtracking over k_1..k_{m-1}. When k_c is placed, every inequality whose
// largest index is c is decided, giving an interval [lo, hi] for k_c:
//   k_c <= k_i + k_{c-i}                      (additive, i + (c-i) = c)
//   k_c >= k_{i+c-m} - k_i - 1  for i <= c    (wrapped, i + c > m)
class KunzSearch {
public:
    KunzSearch(int m, int g, const std::function<void(const KunzVector&)>* sink)
        : m_(m)
        , g_(g)
        , sink_(sink)
        , k_(static_cast<std::size_t>(m), 0) {}

    std::uint64_t run() {
        if (m_ < 2 || g_ < m_ - 1) return 0;
        place(1, 0);
        return count_;
    }

private:
    int k(int i) const { return k_[static_cast<std::size_t>(i)]; }

    void place(int c, int sum) {
        const int remaining_after = m_ - 1 - c;
        int hi = g_ - sum - remaining_after;
        int lo = 1;
        for (int i = 1; 2 * i <= c; ++i) hi = std::min(hi, k(i) + k(c - i));
        for (int i = 1; i < c; ++i)
            if (i + c > m_) lo = std::max(lo, k(i + c - m_) - k(i) - 1);
        if (2 * c > m_) {
            // 2 k_c + 1 >= k_{2c-m}
            const int need = k(2 * c - m_) - 1;
            lo = std::max(lo, (need + 1) / 2);
        }
        if (c == m_ - 1) {
            // The sum must hit g exactly.
            const int forced = g_ - sum;
            if (forced < lo || forced > hi) return;
            lo = hi = forced;
        }
        for (int v = lo; v <= hi; ++v) {
            k_[static_cast<std::size_t>(c)] = v;
            if (c == m_ - 1) {
                ++count_;
                if (sink_ && *sink_) {
                    KunzVector out{m_, std::vector<int>(k_.begin() + 1, k_.end())};
                    (*sink_)(out);
                }
            } else {
                place(c + 1, sum + v);
            }
        }
        k_[static_cast<std::size_t>(c)] = 0;
    }

    int m_;
    int g_;
    const std::function<void(const KunzVector&)>* sink_;
    std::vector<int> k_;
    std::uint64_t count_ = 0;
};

}  // namespace detail

/// Number of lattice points of the Kunz system with multiplicity m and
/// sum g, i.e. N(m, g). Zero when g < m-1. Each vector is passed to `sink`
/// when one is given, in lexicographic order.
inline std::uint64_t enumerate_kunz(int m, int g, const std::function<void(const KunzVector&)>& sink = {}) {
    detail::KunzSearch search(m, g, &sink);
    return search.run();
}

/// Semigroups of genus g with F < 2m: every Kunz coordinate is 1 or 2, so
/// with R twos and m-1 = g-R ones the count is sum_R C(g-R, R).
inline BigInt count_f_less_2m(int g) {
    if (g < 0) return 0;
    BigInt total = 0;
    for (int r = 0; 2 * r <= g; ++r) total += binomial(g - r, r);
    return total;
}

}  // namespace numsg

#endif  // NUMSG_KUNZ_HPP
