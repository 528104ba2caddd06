#include <gtest/gtest.h>

#include <random>

#include "birdtrack/error.hpp"
#include "birdtrack/limits.hpp"
#include "birdtrack/perm.hpp"

using namespace birdtrack;

namespace {

Permutation cyc(const char* s, int n) { return Permutation::parse_cycles(s, n); }

Permutation random_perm(std::mt19937& rng, int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(v.begin(), v.end(), rng);
    return Permutation::from_images(v);
}

}  // namespace

TEST(Perm, ComposeRightToLeft) {
    EXPECT_EQ(compose(cyc("(132)", 3), cyc("(12)", 3)), cyc("(23)", 3));
    EXPECT_EQ(compose(cyc("(12)", 3), cyc("(132)", 3)), cyc("(13)", 3));
}

TEST(Perm, CycleDecomposition) {
    Permutation p = Permutation::from_images({2, 4, 5, 1, 3});
    EXPECT_EQ(p.to_string(), "(124)(35)");
    EXPECT_EQ(p.cycle_count(), 2);
}

TEST(Perm, ParseCycles) {
    EXPECT_EQ(cyc("(132)", 3).one_based_images(), (std::vector<int>{3, 1, 2}));
    EXPECT_TRUE(cyc("()", 4).is_identity());
    EXPECT_EQ(cyc("(1,10)", 10)(0), 9);
    EXPECT_THROW(cyc("(14)", 3), ParseError);
    EXPECT_THROW(cyc("(121)", 3), ParseError);
    EXPECT_THROW(cyc("(12", 3), ParseError);
}

TEST(Perm, FromImagesRejectsNonBijection) {
    EXPECT_THROW(Permutation::from_images({1, 1, 2}), DomainError);
    EXPECT_THROW(Permutation::from_images({0, 1}), DomainError);
}

TEST(Perm, Signs) {
    EXPECT_EQ(Permutation::identity(3).sign(), 1);
    EXPECT_EQ(cyc("(12)", 3).sign(), -1);
    EXPECT_EQ(cyc("(123)", 3).sign(), 1);
    EXPECT_EQ(cyc("(12)(34)", 4).sign(), 1);
}

TEST(Perm, ComposeDegreeMismatch) { EXPECT_THROW(compose(cyc("(12)", 2), cyc("(12)", 3)), DomainError); }

TEST(Perm, AllPermutationsLexicographic) {
    auto all = all_permutations(3);
    ASSERT_EQ(all.size(), 6u);
    EXPECT_TRUE(all.front().is_identity());
    EXPECT_EQ(all[1].one_based_images(), (std::vector<int>{1, 3, 2}));
    EXPECT_EQ(all.back().one_based_images(), (std::vector<int>{3, 2, 1}));
}

TEST(Algebra, SmallAntisymmetrisers) {
    AlgebraElement a2 = antisymmetriser(2);
    EXPECT_EQ(a2.coefficient(Permutation::identity(2)), RationalFunction(Rational(1, 2)));
    EXPECT_EQ(a2.coefficient(cyc("(12)", 2)), RationalFunction(Rational(-1, 2)));

    AlgebraElement a3 = antisymmetriser(3);
    EXPECT_EQ(a3.size(), 6u);
    EXPECT_EQ(a3.coefficient(cyc("(123)", 3)), RationalFunction(Rational(1, 6)));
    EXPECT_EQ(a3.coefficient(cyc("(13)", 3)), RationalFunction(Rational(-1, 6)));

    EXPECT_EQ(symmetriser(1), AlgebraElement::identity(1));
}

TEST(Algebra, SymmetricTimesAntisymmetricVanishes) {
    EXPECT_TRUE((symmetriser(2) * antisymmetriser(2)).is_zero());
}

TEST(Algebra, TraceGivesDimensions) {
    // tr S_2 = N(N+1)/2, tr A_3 = N(N-1)(N-2)/6
    EXPECT_EQ(symmetriser(2).trace(), RationalFunction::parse("N*(N+1)/2"));
    EXPECT_EQ(antisymmetriser(3).trace(), RationalFunction::parse("N*(N-1)*(N-2)/6"));
}

TEST(Algebra, ConjugateAndDagger) {
    AlgebraElement x(cyc("(123)", 3), RationalFunction(2));
    EXPECT_EQ(x.dagger(), AlgebraElement(cyc("(132)", 3), RationalFunction(2)));
    EXPECT_EQ(x.conjugated(cyc("(12)", 3)), AlgebraElement(cyc("(132)", 3), RationalFunction(2)));
}

TEST(Algebra, RatioTo) {
    AlgebraElement s = symmetriser(3);
    auto r = (RationalFunction::N() * s).ratio_to(s);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(*r, RationalFunction::N());
    EXPECT_FALSE(antisymmetriser(3).ratio_to(s).has_value());
}

TEST(Algebra, DegreeCapRaisesResourceError) {
    EXPECT_THROW(all_permutations(limits().max_degree + 1), ResourceError);
}

TEST(AlgebraProperty, AbsorbsPermutations) {
    std::mt19937 rng(5);
    for (int n = 1; n <= 6; ++n) {
        AlgebraElement s = symmetriser(n), a = antisymmetriser(n);
        for (int trial = 0; trial < 5; ++trial) {
            Permutation p = random_perm(rng, n);
            AlgebraElement pe(p);
            EXPECT_EQ(s * pe, s);
            EXPECT_EQ(pe * s, s);
            EXPECT_EQ(a * pe, RationalFunction(p.sign()) * a);
            EXPECT_EQ(pe * a, RationalFunction(p.sign()) * a);
        }
    }
}

TEST(AlgebraProperty, Idempotent) {
    for (int n = 1; n <= 5; ++n) {
        EXPECT_EQ(symmetriser(n) * symmetriser(n), symmetriser(n));
        EXPECT_EQ(antisymmetriser(n) * antisymmetriser(n), antisymmetriser(n));
    }
}

TEST(AlgebraProperty, RecursionsMatchDirectSums) {
    for (int n = 2; n <= 6; ++n) {
        EXPECT_EQ(symmetriser_recursive(n), symmetriser(n)) << n;
        EXPECT_EQ(antisymmetriser_recursive(n), antisymmetriser(n)) << n;
    }
}

TEST(AlgebraProperty, ComposeIsAssociativeAndInverseWorks) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + trial % 7;
        Permutation a = random_perm(rng, n), b = random_perm(rng, n), c = random_perm(rng, n);
        EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
        EXPECT_TRUE(compose(a, a.inverse()).is_identity());
        EXPECT_EQ(compose(a, b).sign(), a.sign() * b.sign());
        EXPECT_EQ(Permutation::parse_cycles(a.to_string(), n), a);
    }
}
