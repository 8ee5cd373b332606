#ifndef NUMSG_SUMSET_HPP
#define NUMSG_SUMSET_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "numsg/bitmap.hpp"
#include "numsg/semigroup.hpp"

namespace numsg {

/// Iterated sumsets H, 2H, 3H, ... of a finite set of positive integers.
/// (k+1)H is built from kH by shift-OR over the elements of H.
class SumsetChain {
public:
    explicit SumsetChain(std::span<const int> h)
        : elements_(h.begin(), h.end()) {
        std::sort(elements_.begin(), elements_.end());
        elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
        if (!elements_.empty() && elements_.front() <= 0)
            throw std::invalid_argument("SumsetChain: elements must be positive");
        max_ = elements_.empty() ? 0 : elements_.back();
        current_ = Bitmap(static_cast<std::size_t>(max_) + 1);
        for (int x : elements_) current_.set(static_cast<std::size_t>(x));
        n_ = 1;
    }

    explicit SumsetChain(const Semigroup& s)
        : SumsetChain(s.gaps()) {}

    int n() const noexcept { return n_; }
    const Bitmap& current() const noexcept { return current_; }
    std::size_t size() const noexcept { return current_.count(); }

    /// Advance from nH to (n+1)H.
    void step() {
        ++n_;
        Bitmap next(static_cast<std::size_t>(n_) * static_cast<std::size_t>(max_) + 1);
        for (int x : elements_) next.or_shifted(current_, static_cast<std::size_t>(x));
        current_ = std::move(next);
    }

    void advance_to(int n) {
        if (n < n_) throw std::invalid_argument("SumsetChain: cannot move backwards");
        while (n_ < n) step();
    }

private:
    std::vector<int> elements_;
    int max_ = 0;
    Bitmap current_;
    int n_ = 1;
};

/// {h_1 + ... + h_n : h_i in H}, ascending. Empty when H is empty.
inline std::vector<int> nfold_sumset(std::span<const int> h, int n) {
    if (n < 1) throw std::invalid_argument("nfold_sumset: n must be >= 1");
    if (h.empty()) return {};
    SumsetChain chain(h);
    chain.advance_to(n);
    return chain.current().to_vector();
}

/// (2n-1)(g-1)
inline std::int64_t buchweitz_threshold(int n, int g) noexcept {
    return static_cast<std::int64_t>(2 * n - 1) * (g - 1);
}

/// True iff |nH(S)| > (2n-1)(g-1); then S is not a Weierstrass semigroup.
inline bool buchweitz_fails(const Semigroup& s, int n) {
    if (n < 2) throw std::invalid_argument("buchweitz_fails: criterion needs n >= 2");
    if (s.genus() < 2) throw std::domain_error("buchweitz_fails: genus must be >= 2");
    SumsetChain chain(s);
    chain.advance_to(n);
    return static_cast<std::int64_t>(chain.size()) > buchweitz_threshold(n, s.genus());
}

/// Largest n for which the size bound |nH| <= n(F-1)+1 still exceeds the
/// threshold: n < g / (2g-1-F). nullopt when F = 2g-1 (no finite bound).
/// A result of 1 means no n >= 2 can fail.
inline std::optional<int> buchweitz_horizon(int genus, int frobenius) {
    const int slack = 2 * genus - 1 - frobenius;
    if (slack <= 0) return std::nullopt;
    return (genus - 1) / slack;  // largest n with n * slack < genus
}

inline std::optional<int> buchweitz_horizon(const Semigroup& s) {
    return buchweitz_horizon(s.genus(), s.frobenius());
}

struct BuchweitzTest {
    int n;
    std::int64_t sumset_size;
    std::int64_t threshold;
    bool fails;
};

struct BuchweitzReport {
    int genus = 0;
    int n_cap = 0;
    std::optional<int> horizon;  // nullopt: unbounded
    std::vector<BuchweitzTest> tests;
    bool trivial = false;  // g <= 1, nothing can fail
    bool capped = false;   // horizon exceeded n_cap, so the search was cut off

    bool fails_any() const noexcept {
        return std::any_of(tests.begin(), tests.end(), [](const BuchweitzTest& t) { return t.fails; });
    }
    std::optional<int> first_failure() const noexcept {
        for (const auto& t : tests)
            if (t.fails) return t.n;
        return std::nullopt;
    }
    bool fails_at(int n) const noexcept {
        for (const auto& t : tests)
            if (t.n == n) return t.fails;
        return false;
    }
};

/// Tests n = 2 .. min(horizon, n_cap). Genus <= 1 reports "cannot fail".
inline BuchweitzReport classify_buchweitz(const Semigroup& s, int n_cap) {
    if (n_cap < 2) throw std::invalid_argument("classify_buchweitz: n_cap must be >= 2");
    BuchweitzReport r;
    r.genus = s.genus();
    r.n_cap = n_cap;
    if (s.genus() <= 1) {
        r.trivial = true;
        return r;
    }
    r.horizon = buchweitz_horizon(s);
    const int last = r.horizon ? std::min(*r.horizon, n_cap) : n_cap;
    r.capped = !r.horizon || *r.horizon > n_cap;
    if (last < 2) return r;
    SumsetChain chain(s);
    for (int n = 2; n <= last; ++n) {
        chain.step();
        const auto size = static_cast<std::int64_t>(chain.size());
        const auto thr = buchweitz_threshold(n, s.genus());
        r.tests.push_back({n, size, thr, size > thr});
    }
    return r;
}

}  // namespace numsg

#endif  // NUMSG_SUMSET_HPP
