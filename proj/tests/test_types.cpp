#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "numsg/numsg.hpp"
#include "oracles.hpp"

using namespace numsg;

namespace {

Semigroup gens(std::initializer_list<int> xs) { return Semigroup::from_generators(std::vector<int>(xs)); }
Semigroup gaps(std::initializer_list<int> xs) { return Semigroup::from_gaps(std::vector<int>(xs)); }

// All subsets of [0, k-1] containing 0 whose doubling misses k, by bitmask.
std::set<std::vector<int>> family_oracle(int k) {
    std::set<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        if (!(mask & 1u)) continue;
        std::vector<int> a;
        for (int x = 0; x < k; ++x)
            if (mask >> x & 1u) a.push_back(x);
        bool ok = true;
        for (int x : a)
            for (int y : a)
                if (x + y == k) ok = false;
        if (ok) out.insert(a);
    }
    return out;
}

}  // namespace

TEST(FrobeniusClass, Examples) {
    EXPECT_EQ(frobenius_class(gens({3, 5, 7})), FrobeniusClass::kLow);
    EXPECT_EQ(frobenius_class(gens({3, 10, 11})), FrobeniusClass::kMid);
    EXPECT_EQ(frobenius_class(gaps({1, 3, 5, 7})), FrobeniusClass::kHigh);
    EXPECT_EQ(frobenius_class(gaps({1, 2, 3})), FrobeniusClass::kOrdinary);
    EXPECT_THROW(frobenius_class(Semigroup::natural()), std::domain_error);
    EXPECT_EQ(to_string(FrobeniusClass::kMid), "MID");
}

TEST(FrobeniusClass, NeverOnMultipleOfM) {
    walk_tree(14, [](const TreeNode& n) {
        if (n.genus() == 0) return;
        EXPECT_NE(n.frobenius() % n.multiplicity(), 0);
    });
}

TEST(TypeAK, Examples) {
    const TypeAK a = type_ak(gens({3, 10, 11}));
    EXPECT_EQ(a.k, 2);
    EXPECT_EQ(a.a, std::vector<int>{0});
    const TypeAK b = type_ak(gaps({1, 2, 4, 7}));
    EXPECT_EQ(b.k, 1);
    EXPECT_EQ(b.a, std::vector<int>{0});
    EXPECT_THROW(type_ak(gens({3, 5, 7})), std::domain_error);
    EXPECT_THROW(type_ak(gaps({1, 3, 5, 7})), std::domain_error);
    EXPECT_THROW(type_ak(Semigroup::natural()), std::domain_error);
}

TEST(TypeAK, ExhaustiveUniquenessAndReconstruction) {
    std::set<std::tuple<int, TypeAK, std::vector<int>, int>> keys;
    walk_tree(14, [&](const TreeNode& n) {
        if (n.genus() == 0) return;
        const Semigroup s = n.semigroup();
        if (frobenius_class(s) != FrobeniusClass::kMid) {
            EXPECT_THROW(type_ak(s), std::domain_error);
            return;
        }
        const TypeAK t = type_ak(s);
        const int m = s.multiplicity();
        EXPECT_TRUE(in_family(t.a, t.k));
        EXPECT_EQ(s.frobenius(), 2 * m + t.k);
        for (int x = m; x <= m + t.k; ++x)
            EXPECT_EQ(s.contains(x), std::binary_search(t.a.begin(), t.a.end(), x - m));
        // The type together with m and the Kunz vector pins down S.
        EXPECT_TRUE(keys.insert({m, t, kunz_vector(s).k, s.genus()}).second);
    });
}

TEST(EnumerateAk, Examples) {
    EXPECT_EQ(enumerate_Ak(1), (std::vector<std::vector<int>>{{0}}));
    EXPECT_EQ(enumerate_Ak(3), (std::vector<std::vector<int>>{{0}, {0, 1}, {0, 2}}));
    const auto k4 = enumerate_Ak(4);
    EXPECT_EQ(std::set<std::vector<int>>(k4.begin(), k4.end()),
              (std::set<std::vector<int>>{{0}, {0, 1}, {0, 3}}));
    EXPECT_THROW(enumerate_Ak(0), std::invalid_argument);
}

TEST(EnumerateAk, MatchesBitmaskOracle) {
    for (int k = 1; k <= 16; ++k) {
        const auto got = enumerate_Ak(k);
        EXPECT_EQ(std::set<std::vector<int>>(got.begin(), got.end()), family_oracle(k)) << k;
        for (const auto& a : got) EXPECT_TRUE(in_family(a, k));
    }
}

TEST(ZhaoBound, Examples) {
    EXPECT_EQ(zhao_bound({0}, 2, 6), 2);
    EXPECT_EQ(zhao_bound({0}, 1, 5), 2);
    EXPECT_EQ(zhao_index({0}, 2, 6), 3);
    EXPECT_EQ(zhao_bound({0}, 5, 3), 0);
}

TEST(ZhaoBound, DominatesCountsTo14) {
    std::map<std::pair<int, TypeAK>, std::uint64_t> counts;
    walk_tree(14, [&](const TreeNode& n) {
        if (n.genus() == 0 || frobenius_class(n.multiplicity(), n.frobenius()) != FrobeniusClass::kMid) return;
        ++counts[{n.genus(), type_ak(n.semigroup())}];
    });
    ASSERT_FALSE(counts.empty());
    for (const auto& [key, c] : counts) EXPECT_LE(BigInt(c), zhao_bound(key.second.a, key.second.k, key.first));
}

TEST(ZhaoConstant, PartialSums) {
    const double phi = MathConstants::phi, s5 = std::sqrt(5.0);
    EXPECT_NEAR(zhao_constant_partial(1), phi / s5 + std::pow(phi, -2) / s5, 1e-14);
    double prev = 0;
    for (int k = 1; k <= 15; ++k) {
        const double v = zhao_constant_partial(k);
        EXPECT_GE(v, prev);
        prev = v;
    }
    EXPECT_LE(zhao_constant_partial(5), zhao_constant_partial(10));
    EXPECT_THROW(zhao_constant_partial(0), std::invalid_argument);
}

TEST(EisenbudHarris, Examples) {
    EXPECT_TRUE(eisenbud_harris(gens({3, 5, 7})));
    EXPECT_FALSE(eisenbud_harris(gaps({1, 2, 3, 7})));
    for (int g = 2; g <= 8; ++g) {
        std::vector<int> ord;
        for (int i = 1; i <= g; ++i) ord.push_back(i);
        EXPECT_TRUE(eisenbud_harris(Semigroup::from_gaps(ord)));
    }
}

TEST(EisenbudHarris, ImpliesSmallFrobenius) {
    walk_tree(14, [](const TreeNode& n) {
        if (n.genus() == 0) return;
        const Semigroup s = n.semigroup();
        if (eisenbud_harris(s)) {
            const auto c = frobenius_class(s);
            EXPECT_TRUE(c == FrobeniusClass::kOrdinary || c == FrobeniusClass::kLow);
        }
    });
}

TEST(WeightDecomposition, Examples) {
    const auto d = weight_decomposition_mid(gens({3, 10, 11}));
    EXPECT_EQ(d.s_count, 2);
    EXPECT_EQ(d.t_count, 2);
    EXPECT_EQ(d.recomputed, 6);
    EXPECT_EQ(d.direct, 6);
    EXPECT_TRUE(d.check);
    EXPECT_TRUE(weight_decomposition_mid(gaps({1, 2, 4, 7})).check);
    EXPECT_THROW(weight_decomposition_mid(gens({3, 5, 7})), std::domain_error);
}

TEST(WeightDecomposition, ExhaustiveTo14) {
    std::uint64_t n_mid = 0;
    walk_tree(14, [&](const TreeNode& n) {
        if (n.genus() == 0 || frobenius_class(n.multiplicity(), n.frobenius()) != FrobeniusClass::kMid) return;
        const Semigroup s = n.semigroup();
        const auto d = weight_decomposition_mid(s);
        EXPECT_TRUE(d.check) << join(s.gaps());
        EXPECT_EQ(d.direct, oracle::weight(s.gaps()));
        ++n_mid;
    });
    EXPECT_GT(n_mid, 0u);
}

namespace {

// Sequences (k_1..k_a) over {1,2,3} with k_a = 3, sum b, and k_{i+j} != 3
// whenever k_i = k_j = 1.
std::uint64_t prefix_count(int a, int b) {
    std::vector<int> k(static_cast<std::size_t>(a) + 1, 0);
    std::uint64_t count = 0;
    const auto rec = [&](auto&& self, int i, int sum) -> void {
        if (i > a) {
            if (sum == b) ++count;
            return;
        }
        for (int v = (i == a ? 3 : 1); v <= 3; ++v) {
            if (sum + v + (a - i) > b) break;
            if (v == 3) {
                bool blocked = false;
                for (int x = 1; x < i && !blocked; ++x) blocked = k[x] == 1 && k[i - x] == 1;
                if (blocked) continue;
            }
            k[i] = v;
            self(self, i + 1, sum + v);
        }
    };
    rec(rec, 1, 0);
    return count;
}

}  // namespace

// #MID(g) = sum over (a, b, m) of P(a, b) C(m-1-a, g-b-(m-1-a)), where a = F - 2m
// and P(a, b) counts the admissible Kunz prefixes (k_1..k_a) summing to b.
TEST(MidDecomposition, CountIdentityTo14) {
    const int gmax = 14;
    std::vector<std::uint64_t> mid(gmax + 1, 0);
    walk_tree(gmax, [&](const TreeNode& n) {
        if (n.genus() == 0 || frobenius_class(n.multiplicity(), n.frobenius()) != FrobeniusClass::kMid) return;
        ++mid[static_cast<std::size_t>(n.genus())];
    });
    EXPECT_EQ(prefix_count(1, 3), 1u);
    EXPECT_EQ(prefix_count(2, 4), 0u);
    EXPECT_EQ(prefix_count(2, 5), 1u);
    for (int g = 1; g <= gmax; ++g) {
        std::uint64_t sum = 0;
        for (int b = 3; b <= g; ++b)
            for (int a = (b + 2) / 3; a <= b; ++a) {
                const std::uint64_t h = prefix_count(a, b);
                for (int m = a + 1; m <= g; ++m) {
                    const int r = m - 1 - a;
                    sum += h * oracle::choose(r, g - b - r);
                }
            }
        EXPECT_EQ(sum, mid[static_cast<std::size_t>(g)]) << "g=" << g;
    }
}
