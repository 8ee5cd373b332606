#ifndef NUMSG_TREE_HPP
#define NUMSG_TREE_HPP

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "numsg/bitmap.hpp"
#include "numsg/error.hpp"
#include "numsg/semigroup.hpp"

namespace numsg {

/// Hard capacity of the fixed-size tree nodes.
inline constexpr int kMaxTreeGenus = 60;
/// Default refusal threshold for enumeration requests.
inline constexpr int kDefaultGenusCap = 40;

/// A node of the genus tree. Each child removes one minimal generator
/// x > F, so the child has Frobenius number x and genus one higher. Every
/// semigroup of genus g+1 arises from exactly one parent of genus g.
///
/// decs[t] counts the unordered pairs {a, b} of members with a + b = t;
/// t is a gap iff decs[t] == 0 and a minimal generator iff decs[t] == 1.
class TreeNode {
public:
    static constexpr std::size_t kSize = 2 * kMaxTreeGenus + 4;

    static TreeNode root() noexcept {
        TreeNode n;
        for (std::size_t t = 0; t < kSize; ++t) n.decs_[t] = static_cast<std::uint8_t>(t / 2 + 1);
        n.genus_ = 0;
        n.frobenius_ = -1;
        n.multiplicity_ = 1;
        return n;
    }

    int genus() const noexcept { return genus_; }
    int frobenius() const noexcept { return frobenius_; }
    int multiplicity() const noexcept { return multiplicity_; }
    bool contains(int x) const noexcept { return x >= 0 && (x > frobenius_ || decs_[static_cast<std::size_t>(x)] > 0); }

    /// Effective generators (minimal generators above F), ascending.
    std::vector<int> removable() const {
        std::vector<int> out;
        for_each_removable([&](int x) { out.push_back(x); });
        return out;
    }

    template <class F>
    void for_each_removable(F&& f) const {
        if (genus_ >= kMaxTreeGenus) return;
        const int hi = std::min(std::max(frobenius_ + multiplicity_, 1), static_cast<int>(kSize) - 1);
        for (int x = std::max(frobenius_ + 1, 1); x <= hi; ++x)
            if (decs_[static_cast<std::size_t>(x)] == 1) f(x);
    }

    TreeNode remove(int x) const noexcept {
        TreeNode c = *this;
        const auto ux = static_cast<std::size_t>(x);
        for (std::size_t t = ux; t < kSize; ++t)
            if (decs_[t - ux] > 0) --c.decs_[t];
        c.genus_ = genus_ + 1;
        c.frobenius_ = x;
        c.multiplicity_ = (x == multiplicity_) ? x + 1 : multiplicity_;
        return c;
    }

    Semigroup semigroup() const {
        Bitmap members(static_cast<std::size_t>(frobenius_) + 2);
        for (int x = 0; x <= frobenius_ + 1; ++x)
            if (decs_[static_cast<std::size_t>(x)] > 0) members.set(static_cast<std::size_t>(x));
        return Semigroup::trusted(std::move(members));
    }

private:
    TreeNode() = default;

    std::array<std::uint8_t, kSize> decs_{};
    int genus_ = 0;
    int frobenius_ = -1;
    int multiplicity_ = 1;
};

inline std::vector<TreeNode> children(const TreeNode& n) {
    std::vector<TreeNode> out;
    n.for_each_removable([&](int x) { out.push_back(n.remove(x)); });
    return out;
}

/// Mergeable per-genus counter.
struct GenusTally {
    std::vector<std::uint64_t> count;

    void add(int genus, std::uint64_t n = 1) {
        const auto g = static_cast<std::size_t>(genus);
        if (count.size() <= g) count.resize(g + 1, 0);
        count[g] += n;
    }
    void merge(const GenusTally& o) {
        if (count.size() < o.count.size()) count.resize(o.count.size(), 0);
        for (std::size_t i = 0; i < o.count.size(); ++i) count[i] += o.count[i];
    }
    std::uint64_t at(int genus) const {
        const auto g = static_cast<std::size_t>(genus);
        return g < count.size() ? count[g] : 0;
    }
    friend bool operator==(const GenusTally& a, const GenusTally& b) {
        const std::size_t n = std::max(a.count.size(), b.count.size());
        for (std::size_t i = 0; i < n; ++i)
            if ((i < a.count.size() ? a.count[i] : 0) != (i < b.count.size() ? b.count[i] : 0)) return false;
        return true;
    }
};

struct EnumerationOptions {
    int threads = 1;
    int split_depth = 8;
    int genus_cap = kDefaultGenusCap;
};

/// Rough size of the genus-g layer, used in refusal messages.
inline double genus_size_estimate(int g) {
    return std::pow((1.0 + std::sqrt(5.0)) / 2.0, g);
}

inline void check_genus_cap(int g_max, const EnumerationOptions& opt) {
    if (g_max < 0) throw std::invalid_argument("genus bound must be nonnegative");
    const int cap = std::min(opt.genus_cap, kMaxTreeGenus);
    if (g_max > cap) throw ResourceLimit(g_max, cap, genus_size_estimate(g_max));
}

namespace detail {

template <class Fn>
void walk_subtree(const TreeNode& n, int g_max, int only_genus, Fn& fn) {
    if (only_genus < 0 || n.genus() == only_genus) fn(n);
    if (n.genus() >= g_max) return;
    n.for_each_removable([&](int x) { walk_subtree(n.remove(x), g_max, only_genus, fn); });
}

template <class Fn>
void collect_frontier(const TreeNode& n, int depth, int only_genus, Fn& fn, std::vector<TreeNode>& frontier) {
    if (n.genus() == depth) {
        frontier.push_back(n);
        return;
    }
    if (only_genus < 0 || n.genus() == only_genus) fn(n);
    n.for_each_removable([&](int x) { collect_frontier(n.remove(x), depth, only_genus, fn, frontier); });
}

}  // namespace detail

/// Depth-first reduction over the genus tree up to g_max. `make()` yields an
/// empty accumulator; `visit(acc, node)` folds one node; accumulators must
/// provide merge(). When only_genus >= 0 only nodes of that genus are
/// folded. Sequential mode visits children by removed generator ascending;
/// parallel mode splits into subtrees at opt.split_depth and merges
/// per-worker accumulators.
template <class Acc, class Make, class Visit>
Acc reduce_tree(int g_max, const EnumerationOptions& opt, Make make, Visit visit, int only_genus = -1) {
    check_genus_cap(g_max, opt);
    if (only_genus >= 0) g_max = std::min(g_max, only_genus);
    Acc total = make();
    const TreeNode root = TreeNode::root();
    const int depth = std::min(opt.split_depth, g_max);
    if (opt.threads <= 1 || depth <= 0) {
        auto fn = [&](const TreeNode& n) { visit(total, n); };
        detail::walk_subtree(root, g_max, only_genus, fn);
        return total;
    }

    std::vector<TreeNode> frontier;
    {
        auto fn = [&](const TreeNode& n) { visit(total, n); };
        detail::collect_frontier(root, depth, only_genus, fn, frontier);
    }

    const int workers = std::max(1, std::min<int>(opt.threads, static_cast<int>(frontier.size())));
    std::vector<Acc> partial;
    partial.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) partial.push_back(make());
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            Acc& acc = partial[static_cast<std::size_t>(w)];
            auto fn = [&](const TreeNode& n) { visit(acc, n); };
            for (std::size_t i = next++; i < frontier.size(); i = next++)
                detail::walk_subtree(frontier[i], g_max, only_genus, fn);
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& p : partial) total.merge(p);
    return total;
}

/// Visits every node of genus <= g_max (sequentially) and returns counts.
template <class Fn>
GenusTally walk_tree(int g_max, Fn&& fn, const EnumerationOptions& opt = {}) {
    EnumerationOptions seq = opt;
    seq.threads = 1;
    return reduce_tree<GenusTally>(
        g_max, seq, [] { return GenusTally{}; },
        [&](GenusTally& t, const TreeNode& n) {
            t.add(n.genus());
            fn(n);
        });
}

/// Invokes visitor once per semigroup of genus <= g_max, in deterministic
/// order. With opt.threads > 1 the visitor runs concurrently and must be
/// thread-safe.
template <class Visitor>
GenusTally enumerate_by_genus(int g_max, Visitor&& visitor, const EnumerationOptions& opt = {}) {
    return reduce_tree<GenusTally>(
        g_max, opt, [] { return GenusTally{}; },
        [&](GenusTally& t, const TreeNode& n) {
            t.add(n.genus());
            visitor(n.semigroup());
        });
}

/// N(g) for g = 0..g_max without materializing semigroups.
inline std::vector<std::uint64_t> count_by_genus(int g_max, const EnumerationOptions& opt = {}) {
    auto tally = reduce_tree<GenusTally>(
        g_max, opt, [] { return GenusTally{}; }, [](GenusTally& t, const TreeNode& n) { t.add(n.genus()); });
    tally.count.resize(static_cast<std::size_t>(g_max) + 1, 0);
    return tally.count;
}

/// N(m, g): semigroups by multiplicity and genus.
class CountMatrix {
public:
    CountMatrix() = default;
    explicit CountMatrix(int g_max)
        : g_max_(g_max)
        , cells_(static_cast<std::size_t>(g_max + 1) * static_cast<std::size_t>(g_max + 3), 0) {}

    int g_max() const noexcept { return g_max_; }

    /// Zero outside the tabulated range (m > g+1 is always empty).
    std::uint64_t at(int m, int g) const noexcept {
        if (g < 0 || g > g_max_ || m < 0 || m > g_max_ + 2) return 0;
        return cells_[index(m, g)];
    }
    void add(int m, int g, std::uint64_t n = 1) { cells_[index(m, g)] += n; }

    std::uint64_t row_sum(int g) const noexcept {
        std::uint64_t s = 0;
        for (int m = 0; m <= g_max_ + 2; ++m) s += at(m, g);
        return s;
    }

    void merge(const CountMatrix& o) {
        if (cells_.empty()) {
            *this = o;
            return;
        }
        for (std::size_t i = 0; i < cells_.size(); ++i) cells_[i] += o.cells_[i];
    }

    friend bool operator==(const CountMatrix&, const CountMatrix&) = default;

private:
    std::size_t index(int m, int g) const noexcept {
        return static_cast<std::size_t>(g) * static_cast<std::size_t>(g_max_ + 3) + static_cast<std::size_t>(m);
    }
    int g_max_ = 0;
    std::vector<std::uint64_t> cells_;
};

inline CountMatrix count_matrix(int g_max, const EnumerationOptions& opt = {}) {
    return reduce_tree<CountMatrix>(
        g_max, opt, [g_max] { return CountMatrix(g_max); },
        [](CountMatrix& c, const TreeNode& n) { c.add(n.multiplicity(), n.genus()); });
}

/// Oracle: every genus-g semigroup by filtering g-subsets of [1, 2g-1]
/// whose complement is additively closed. Refuses g > 10.
inline std::vector<Semigroup> brute_force_by_genus(int g) {
    if (g < 0) throw std::invalid_argument("brute_force_by_genus: negative genus");
    if (g > 10) throw std::invalid_argument("brute_force_by_genus: genus " + std::to_string(g) + " > 10 refused");
    if (g == 0) return {Semigroup::natural()};
    const int width = 2 * g;  // bits 0..2g-1; bit x is the integer x
    const std::uint32_t all = (std::uint32_t{1} << width) - 1;
    std::vector<Semigroup> out;
    for (std::uint32_t h = 0; h <= all; h += 2) {  // bit 0 (the integer 0) is never a gap
        if (std::popcount(h) != g) continue;
        const std::uint32_t members = all & ~h;
        bool closed = true;
        for (int a = 1; a < width && closed; ++a)
            if ((members >> a) & 1u) closed = ((members << a) & h & all) == 0;
        if (!closed) continue;
        std::vector<int> gaps;
        for (int x = 1; x < width; ++x)
            if ((h >> x) & 1u) gaps.push_back(x);
        out.push_back(Semigroup::from_gaps(gaps));
    }
    return out;
}

}  // namespace numsg

#endif  // NUMSG_TREE_HPP
