#include <gtest/gtest.h>

#include <vector>

#include "numsg/numsg.hpp"
#include "oracles.hpp"

using namespace numsg;

namespace {

std::vector<int> v(std::initializer_list<int> xs) { return xs; }

}  // namespace

TEST(FromGenerators, TwoThree) {
    const auto s = Semigroup::from_generators(v({2, 3}));
    EXPECT_EQ(s.gaps(), v({1}));
    EXPECT_EQ(s.multiplicity(), 2);
    EXPECT_EQ(s.frobenius(), 1);
    EXPECT_EQ(s.genus(), 1);
    EXPECT_EQ(s.gaps(), oracle::gaps_of_generators({2, 3}, 10));
}

TEST(FromGenerators, ThreeFiveSeven) {
    const auto s = Semigroup::from_generators(v({3, 5, 7}));
    EXPECT_EQ(s.gaps(), v({1, 2, 4}));
    EXPECT_EQ(s.multiplicity(), 3);
    EXPECT_EQ(s.frobenius(), 4);
    EXPECT_EQ(s.genus(), 3);
}

TEST(FromGenerators, OneIsNatural) {
    const auto s = Semigroup::from_generators(v({1}));
    EXPECT_TRUE(s.is_natural());
    EXPECT_EQ(s.genus(), 0);
    EXPECT_EQ(s.frobenius(), -1);
    EXPECT_EQ(s.multiplicity(), 1);
}

TEST(FromGenerators, Errors) {
    EXPECT_THROW(Semigroup::from_generators(std::vector<int>{}), std::invalid_argument);
    EXPECT_THROW(Semigroup::from_generators(v({4, 6})), InfiniteComplement);
    EXPECT_THROW(Semigroup::from_generators(v({0, 3})), std::invalid_argument);
    try {
        Semigroup::from_generators(v({6, 9, 15}));
        FAIL();
    } catch (const InfiniteComplement& e) {
        EXPECT_EQ(e.gcd(), 3);
    }
}

TEST(FromGenerators, AgreesWithClosureOracle) {
    const std::vector<std::vector<int>> cases{{3, 4}, {5, 7, 9}, {4, 6, 9}, {7, 8, 9, 10}, {11, 13}, {6, 10, 15}};
    for (const auto& gens : cases) {
        const auto s = Semigroup::from_generators(gens);
        EXPECT_EQ(s.gaps(), oracle::gaps_of_generators(gens)) << join(gens);
    }
}

TEST(FromGaps, ValidExample) {
    const auto s = Semigroup::from_gaps(v({1, 2, 4, 5, 7, 8}));
    EXPECT_EQ(s.multiplicity(), 3);
    EXPECT_EQ(s.frobenius(), 8);
    EXPECT_EQ(s.genus(), 6);
    EXPECT_EQ(s.minimal_generators(), v({3, 10, 11}));
    EXPECT_EQ(s, Semigroup::from_generators(v({3, 10, 11})));
}

TEST(FromGaps, WitnessReported) {
    try {
        Semigroup::from_gaps(v({1, 2, 5, 8}));
        FAIL() << "expected InvalidGapSet";
    } catch (const InvalidGapSet& e) {
        EXPECT_EQ(e.witness(), "4+4=8");
        EXPECT_NE(std::string(e.what()).find("4+4=8"), std::string::npos);
    }
}

TEST(FromGaps, EmptyIsNatural) { EXPECT_TRUE(Semigroup::from_gaps(std::vector<int>{}).is_natural()); }

TEST(FromGaps, RejectsUnsorted) {
    EXPECT_THROW(Semigroup::from_gaps(v({2, 1})), InvalidGapSet);
    EXPECT_THROW(Semigroup::from_gaps(v({0, 1})), InvalidGapSet);
}

TEST(KunzVector, Examples) {
    EXPECT_EQ(kunz_vector(Semigroup::from_generators(v({3, 5, 7}))), (KunzVector{3, {2, 1}}));
    EXPECT_EQ(kunz_vector(Semigroup::from_generators(v({2, 3}))), (KunzVector{2, {1}}));
    EXPECT_EQ(kunz_vector(Semigroup::from_generators(v({3, 10, 11}))), (KunzVector{3, {3, 3}}));
    EXPECT_THROW(kunz_vector(Semigroup::natural()), std::domain_error);
}

TEST(FromKunz, Examples) {
    EXPECT_EQ(Semigroup::from_kunz({3, {2, 1}}), Semigroup::from_generators(v({3, 5, 7})));
    for (int g = 1; g <= 9; ++g) {
        std::vector<int> odd;
        for (int i = 0; i < g; ++i) odd.push_back(2 * i + 1);
        EXPECT_EQ(Semigroup::from_kunz({2, {g}}).gaps(), odd);
    }
}

TEST(FromKunz, ViolationNamesIndices) {
    try {
        Semigroup::from_kunz({3, {1, 3}});
        FAIL() << "expected InvalidKunzVector";
    } catch (const InvalidKunzVector& e) {
        ASSERT_EQ(e.violations().size(), 1u);
        EXPECT_EQ(e.violations()[0].i, 1);
        EXPECT_EQ(e.violations()[0].j, 1);
        EXPECT_EQ(e.violations()[0].describe(), "x2 <= x1+x1");
    }
}

TEST(Weight, Examples) {
    for (int g = 0; g <= 10; ++g) {
        std::vector<int> gaps;
        for (int i = 1; i <= g; ++i) gaps.push_back(i);
        EXPECT_EQ(weight(Semigroup::from_gaps(gaps)), 0);
    }
    EXPECT_EQ(weight(Semigroup::from_generators(v({3, 5, 7}))), 1);
    EXPECT_EQ(weight(Semigroup::from_gaps(v({1, 3, 5, 7}))), 6);
}

// Exhaustive properties over every semigroup of genus <= 12.
class CoreExhaustive : public ::testing::Test {
protected:
    template <class Fn>
    static void each(Fn&& fn) {
        walk_tree(12, [&](const TreeNode& n) { fn(n.semigroup()); });
    }
};

TEST_F(CoreExhaustive, RoundTrips) {
    each([](const Semigroup& s) {
        EXPECT_EQ(Semigroup::from_gaps(s.gaps()), s);
        if (!s.is_natural()) EXPECT_EQ(Semigroup::from_kunz(kunz_vector(s)), s);
        EXPECT_EQ(Semigroup::from_generators(s.minimal_generators()), s);
    });
}

TEST_F(CoreExhaustive, ClosureAndStatistics) {
    each([](const Semigroup& s) {
        const auto gaps = s.gaps();
        EXPECT_TRUE(oracle::is_gap_set(gaps));
        EXPECT_EQ(s.genus(), static_cast<int>(gaps.size()));
        EXPECT_EQ(s.frobenius(), oracle::frobenius(gaps));
        EXPECT_EQ(s.multiplicity(), oracle::multiplicity(gaps));
        EXPECT_LE(s.multiplicity(), s.genus() + 1);
        EXPECT_LE(s.frobenius(), 2 * s.genus() - 1);
        EXPECT_EQ(weight(s), oracle::weight(gaps));
    });
}

TEST_F(CoreExhaustive, KunzSumAndFrobenius) {
    each([](const Semigroup& s) {
        if (s.is_natural()) return;
        const KunzVector k = kunz_vector(s);
        EXPECT_EQ(k.k, oracle::kunz(s.gaps()));
        EXPECT_EQ(k.genus(), s.genus());
        int top = 0;
        for (int i = 1; i < k.m; ++i) top = std::max(top, k.at(i) * k.m + i);
        EXPECT_EQ(s.frobenius(), top - k.m);
    });
}

TEST_F(CoreExhaustive, WeightBoundsAndMaximum) {
    std::vector<std::int64_t> best(13, -1);
    std::vector<int> best_m(13, 0);
    std::vector<int> ties(13, 0);
    each([&](const Semigroup& s) {
        const int g = s.genus();
        const auto w = weight(s);
        EXPECT_GE(w, 0);
        EXPECT_LE(w, static_cast<std::int64_t>(g) * (g - 1) / 2);
        if (w > best[g]) {
            best[g] = w;
            best_m[g] = s.multiplicity();
            ties[g] = 1;
        } else if (w == best[g]) {
            ++ties[g];
        }
    });
    for (int g = 2; g <= 12; ++g) {
        EXPECT_EQ(best[g], static_cast<std::int64_t>(g) * (g - 1) / 2) << g;
        EXPECT_EQ(best_m[g], 2) << g;
        EXPECT_EQ(ties[g], 1) << g;
    }
}

TEST(Parse, RangesAndCommas) {
    EXPECT_EQ(parse_int_list("1..4,7, 9"), v({1, 2, 3, 4, 7, 9}));
    EXPECT_TRUE(parse_int_list("").empty());
    EXPECT_THROW(parse_int_list("1,,2"), std::invalid_argument);
    EXPECT_THROW(parse_int_list("5..3"), std::invalid_argument);
    EXPECT_THROW(parse_int_list("a"), std::invalid_argument);
}

TEST(RationalParse, Forms) {
    EXPECT_EQ(Rational::parse("1/21"), (Rational{1, 21}));
    EXPECT_EQ(Rational::parse("1.3667"), (Rational{13667, 10000}));
    EXPECT_EQ(Rational::parse("2/4"), (Rational{1, 2}));
    EXPECT_EQ(Rational::parse("3"), (Rational{3, 1}));
    EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
}
