#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "numsg/numsg.hpp"
#include "oracles.hpp"

using namespace numsg;

TEST(Validate, Examples) {
    EXPECT_TRUE(validate({3, {2, 1}}).empty());
    EXPECT_TRUE(validate({2, {5}}).empty());
    const auto bad = validate({3, {1, 3}});
    ASSERT_EQ(bad.size(), 1u);
    EXPECT_EQ(bad[0].kind, KunzViolation::Kind::kAdditive);
    EXPECT_EQ(bad[0].i, 1);
    EXPECT_EQ(bad[0].j, 1);
}

TEST(Validate, ReportsEveryViolation) {
    // m = 4: k_2 <= 2 k_1 fails, k_3 <= k_1 + k_2 fails, and k_1 <= k_3 + k_3 + 1 holds.
    const auto bad = validate({4, {1, 5, 9}});
    std::set<std::pair<int, int>> pairs;
    for (const auto& v : bad) pairs.insert({v.i, v.j});
    EXPECT_TRUE(pairs.count({1, 1}));
    EXPECT_TRUE(pairs.count({1, 2}));
    // Wrapped: k_2 + k_3 + 1 >= k_1 holds; k_3 + k_3 + 1 >= k_2 holds.
    EXPECT_EQ(bad.size(), 2u);

    const auto wrapped = validate({3, {5, 1}});
    ASSERT_EQ(wrapped.size(), 1u);
    EXPECT_EQ(wrapped[0].kind, KunzViolation::Kind::kWrapped);
    EXPECT_EQ(wrapped[0].i, 2);
    EXPECT_EQ(wrapped[0].j, 2);
    EXPECT_EQ(wrapped[0].describe(), "x1 <= x2+x2+1");

    EXPECT_FALSE(validate({3, {0, 1}}).empty());
    EXPECT_FALSE(validate({3, {1}}).empty());
    EXPECT_FALSE(validate({1, {}}).empty());
}

TEST(EnumerateKunz, Examples) {
    std::vector<KunzVector> seen;
    EXPECT_EQ(enumerate_kunz(3, 3, [&](const KunzVector& v) { seen.push_back(v); }), 2u);
    ASSERT_EQ(seen.size(), 2u);
    EXPECT_EQ(seen[0].k, (std::vector<int>{1, 2}));
    EXPECT_EQ(seen[1].k, (std::vector<int>{2, 1}));
    for (int g = 1; g <= 12; ++g) EXPECT_EQ(enumerate_kunz(g + 1, g), 1u);
    EXPECT_EQ(enumerate_kunz(4, 4), 3u);
    EXPECT_EQ(enumerate_kunz(5, 3), 0u);
}

TEST(EnumerateKunz, EveryVectorValidAndDistinct) {
    for (int g = 1; g <= 10; ++g) {
        for (int m = 2; m <= g + 1; ++m) {
            std::set<std::vector<int>> seen;
            enumerate_kunz(m, g, [&](const KunzVector& v) {
                EXPECT_TRUE(validate(v).empty());
                EXPECT_EQ(v.genus(), g);
                EXPECT_TRUE(seen.insert(v.k).second);
                EXPECT_EQ(kunz_vector(Semigroup::from_kunz(v)), v);
            });
        }
    }
}

TEST(EnumerateKunz, MatchesTreeUpTo15) {
    const CountMatrix c = count_matrix(15);
    for (int g = 1; g <= 15; ++g)
        for (int m = 2; m <= g + 1; ++m) EXPECT_EQ(enumerate_kunz(m, g), c.at(m, g)) << "m=" << m << " g=" << g;
}

TEST(EnumerateKunz, ValidatesEveryTreeSemigroup) {
    walk_tree(15, [](const TreeNode& n) {
        if (n.genus() == 0) return;
        EXPECT_TRUE(validate(kunz_vector(n.semigroup())).empty());
    });
}

TEST(KunzClasses, CoordinateRangesDetermineFrobeniusClass) {
    walk_tree(12, [](const TreeNode& n) {
        if (n.genus() == 0) return;
        const Semigroup s = n.semigroup();
        const KunzVector v = kunz_vector(s);
        const int top = *std::max_element(v.k.begin(), v.k.end());
        const int m = s.multiplicity();
        const int f = s.frobenius();
        EXPECT_EQ(f < 2 * m, top <= 2);
        EXPECT_EQ(2 * m < f && f < 3 * m, top == 3);
    });
}

TEST(CountFLess2m, Examples) {
    EXPECT_EQ(count_f_less_2m(4), 5);
    EXPECT_EQ(count_f_less_2m(0), 1);
    EXPECT_EQ(count_f_less_2m(25), 121393);
    std::uint64_t manual = 0;
    for (int r = 0; 2 * r <= 4; ++r) manual += oracle::choose(4 - r, r);
    EXPECT_EQ(manual, 5u);
}

TEST(CountFLess2m, TreeAndRecurrence) {
    std::vector<std::uint64_t> tree(21, 0);
    walk_tree(20, [&](const TreeNode& n) {
        if (n.frobenius() < 2 * n.multiplicity()) ++tree[static_cast<std::size_t>(n.genus())];
    });
    for (int g = 0; g <= 20; ++g) {
        EXPECT_EQ(count_f_less_2m(g), tree[static_cast<std::size_t>(g)]) << g;
        EXPECT_EQ(tree[static_cast<std::size_t>(g)], oracle::fib(g + 1)) << g;
        if (g >= 2) EXPECT_EQ(count_f_less_2m(g), count_f_less_2m(g - 1) + count_f_less_2m(g - 2));
    }
}
