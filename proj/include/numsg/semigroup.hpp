#ifndef NUMSG_SEMIGROUP_HPP
#define NUMSG_SEMIGROUP_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "numsg/bitmap.hpp"
#include "numsg/error.hpp"
#include "numsg/kunz_vector.hpp"

namespace numsg {

/// A numerical semigroup S, stored as its membership bitmap over [0, F+1].
/// Every integer above F is a member. The full semigroup N is encoded with
/// F = -1, g = 0, m = 1. Values are immutable once built.
class Semigroup {
public:
    Semigroup()
        : members_(1) {
        members_.set(0);
    }

    static Semigroup natural() { return Semigroup(); }

    /// Least additively closed set containing gens and 0.
    static Semigroup from_generators(std::span<const int> gens) {
        if (gens.empty()) throw std::invalid_argument("from_generators: empty generator list");
        long g = 0;
        for (int a : gens) {
            if (a <= 0) throw std::invalid_argument("from_generators: generators must be positive");
            g = std::gcd(g, static_cast<long>(a));
        }
        if (g != 1) throw InfiniteComplement(g);

        const auto [lo, hi] = std::minmax_element(gens.begin(), gens.end());
        if (*lo == 1) return natural();
        // Frobenius number is below (min-1)(max-1) for coprime generators.
        const std::size_t limit = static_cast<std::size_t>(*lo - 1) * static_cast<std::size_t>(*hi - 1) + 1;
        std::vector<int> sorted(gens.begin(), gens.end());
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

        Bitmap reach(limit + 1);
        reach.set(0);
        int frob = -1;
        for (std::size_t x = 1; x <= limit; ++x) {
            bool in = false;
            for (int a : sorted) {
                if (static_cast<std::size_t>(a) > x) break;
                if (reach.test(x - static_cast<std::size_t>(a))) {
                    in = true;
                    break;
                }
            }
            if (in)
                reach.set(x);
            else
                frob = static_cast<int>(x);
        }
        Bitmap members(static_cast<std::size_t>(frob) + 2);
        for (int x = 0; x <= frob + 1; ++x)
            if (reach.test(static_cast<std::size_t>(x))) members.set(static_cast<std::size_t>(x));
        return Semigroup(std::move(members));
    }

    /// The semigroup whose gap set is exactly `gaps` (strictly increasing,
    /// positive). Throws InvalidGapSet with a witness a+b when the complement
    /// is not closed.
    static Semigroup from_gaps(std::span<const int> gaps) {
        int prev = 0;
        for (int h : gaps) {
            if (h <= prev) throw InvalidGapSet("gaps must be strictly increasing positive integers");
            prev = h;
        }
        if (gaps.empty()) return natural();
        const int frob = gaps.back();
        Bitmap members(static_cast<std::size_t>(frob) + 2);
        for (int x = 0; x <= frob + 1; ++x) members.set(static_cast<std::size_t>(x));
        for (int h : gaps) members.reset(static_cast<std::size_t>(h));
        for (int a = 1; a <= frob / 2; ++a) {
            if (!members.test(static_cast<std::size_t>(a))) continue;
            for (int b = a; a + b <= frob; ++b) {
                if (members.test(static_cast<std::size_t>(b)) && !members.test(static_cast<std::size_t>(a + b)))
                    throw InvalidGapSet(a, b);
            }
        }
        return Semigroup(std::move(members));
    }

    /// Inverse of kunz_vector(); throws InvalidKunzVector listing each
    /// violated inequality.
    static Semigroup from_kunz(const KunzVector& v) {
        auto violations = validate(v);
        if (!violations.empty()) throw InvalidKunzVector(std::move(violations));
        const int m = v.m;
        int max_apery = 0;
        for (int i = 1; i < m; ++i) max_apery = std::max(max_apery, v.at(i) * m + i);
        const int frob = max_apery - m;
        Bitmap members(static_cast<std::size_t>(frob) + 2);
        for (int x = 0; x <= frob + 1; ++x) {
            const int r = x % m;
            if (r == 0 || x >= v.at(r) * m + r) members.set(static_cast<std::size_t>(x));
        }
        return Semigroup(std::move(members));
    }

    /// Wraps a bitmap the caller guarantees is additively closed, contains 0,
    /// and has its last bit set with bit size-2 clear (unless size is 1).
    static Semigroup trusted(Bitmap members) { return Semigroup(std::move(members)); }

    bool contains(long x) const noexcept {
        if (x < 0) return false;
        if (x > frobenius_) return true;
        return members_.test(static_cast<std::size_t>(x));
    }

    int multiplicity() const noexcept { return multiplicity_; }
    int frobenius() const noexcept { return frobenius_; }
    int genus() const noexcept { return genus_; }
    bool is_natural() const noexcept { return genus_ == 0; }
    std::int64_t gap_sum() const noexcept { return gap_sum_; }

    /// Membership over [0, F+1].
    const Bitmap& members() const noexcept { return members_; }

    /// Gap indicator over [0, F].
    Bitmap gap_bitmap() const {
        Bitmap h(static_cast<std::size_t>(frobenius_ + 1));
        for (int x = 1; x <= frobenius_; ++x)
            if (!members_.test(static_cast<std::size_t>(x))) h.set(static_cast<std::size_t>(x));
        return h;
    }

    std::vector<int> gaps() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(genus_));
        for (int x = 1; x <= frobenius_; ++x)
            if (!members_.test(static_cast<std::size_t>(x))) out.push_back(x);
        return out;
    }

    /// Minimal generating set, ascending. All minimal generators lie in
    /// [m, F+m].
    std::vector<int> minimal_generators() const {
        if (is_natural()) return {1};
        std::vector<int> out;
        const int m = multiplicity_;
        for (int x = m; x <= frobenius_ + m; ++x) {
            if (!contains(x)) continue;
            bool decomposable = false;
            for (int a = m; 2 * a <= x && !decomposable; ++a) decomposable = contains(a) && contains(x - a);
            if (!decomposable) out.push_back(x);
        }
        return out;
    }

    friend bool operator==(const Semigroup& a, const Semigroup& b) noexcept { return a.members_ == b.members_; }

private:
    explicit Semigroup(Bitmap members)
        : members_(std::move(members)) {
        frobenius_ = static_cast<int>(members_.size()) - 2;
        genus_ = 0;
        gap_sum_ = 0;
        multiplicity_ = frobenius_ + 1;
        bool seen = false;
        for (int x = 1; x <= frobenius_ + 1; ++x) {
            if (members_.test(static_cast<std::size_t>(x))) {
                if (!seen) multiplicity_ = x;
                seen = true;
            } else {
                ++genus_;
                gap_sum_ += x;
            }
        }
        if (frobenius_ < 0) multiplicity_ = 1;
    }

    Bitmap members_;
    int multiplicity_ = 1;
    int frobenius_ = -1;
    int genus_ = 0;
    std::int64_t gap_sum_ = 0;
};

/// Kunz coordinates with respect to the multiplicity.
inline KunzVector kunz_vector(const Semigroup& s) {
    if (s.is_natural()) throw std::domain_error("no Apery profile: the semigroup is N");
    const int m = s.multiplicity();
    KunzVector v{m, std::vector<int>(static_cast<std::size_t>(m - 1))};
    for (int i = 1; i < m; ++i) {
        int x = i;
        while (!s.contains(x)) x += m;
        v.k[static_cast<std::size_t>(i - 1)] = (x - i) / m;
    }
    return v;
}

/// W(S) = sum of gaps - g(g+1)/2.
inline std::int64_t weight(const Semigroup& s) noexcept {
    const std::int64_t g = s.genus();
    return s.gap_sum() - g * (g + 1) / 2;
}

/// Comma-separated rendering, e.g. "1,2,4".
inline std::string join(const std::vector<int>& xs, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

}  // namespace numsg

#endif  // NUMSG_SEMIGROUP_HPP
