#include <gtest/gtest.h>

#include <set>

#include "birdtrack/error.hpp"
#include "birdtrack/perm.hpp"
#include "birdtrack/tableaux.hpp"

using namespace birdtrack;

namespace {

YoungDiagram D(std::vector<int> r) { return YoungDiagram(std::move(r)); }

Integer factorial(int n) {
    Integer f(1);
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Independent hook count: boxes right + boxes below + 1, read straight off the rows.
Integer naive_hook_product(const YoungDiagram& d) {
    Integer h(1);
    for (int r = 0; r < d.row_count(); ++r)
        for (int c = 0; c < d.row(r); ++c) {
            int below = 0;
            for (int rr = r + 1; rr < d.row_count(); ++rr)
                if (d.row(rr) > c) ++below;
            h *= d.row(r) - c - 1 + below + 1;
        }
    return h;
}

// Brute-force standard-tableau count: permutations of 1..n whose row filling is standard.
int brute_force_syt_count(const YoungDiagram& d) {
    int count = 0;
    for (const auto& p : all_permutations(d.box_count())) {
        std::vector<std::vector<int>> rows;
        int k = 0;
        for (int r = 0; r < d.row_count(); ++r) {
            rows.emplace_back();
            for (int c = 0; c < d.row(r); ++c) rows.back().push_back(p(k++) + 1);
        }
        if (YoungTableau(rows).is_standard()) ++count;
    }
    return count;
}

}  // namespace

TEST(Diagram, TextRoundTrip) {
    EXPECT_EQ(YoungDiagram::parse("[4,2,1]"), D({4, 2, 1}));
    EXPECT_EQ(D({4, 2, 1}).to_string(), "[4,2,1]");
    EXPECT_TRUE(YoungDiagram::parse("[]").empty());
    EXPECT_THROW(YoungDiagram::parse("[1,2]"), ParseError);
    EXPECT_THROW(YoungDiagram::parse("4,2"), ParseError);
}

TEST(Tableau, TextRoundTripAndStandardness) {
    YoungTableau t = YoungTableau::parse("[13/2]");
    EXPECT_EQ(t.rows(), (std::vector<std::vector<int>>{{1, 3}, {2}}));
    EXPECT_TRUE(t.is_standard());
    EXPECT_EQ(t.to_string(), "[13/2]");
    EXPECT_FALSE(YoungTableau::parse("[31/2]").is_standard());
    EXPECT_THROW(YoungTableau::parse("[11/2]"), ParseError);
    EXPECT_EQ(YoungTableau::parse("[1,2,3,4,5,6,7,8,9,10]").to_string(), "[1,2,3,4,5,6,7,8,9,10]");
}

TEST(Tableau, WithoutLargest) {
    EXPECT_EQ(YoungTableau::parse("[135/24]").without_largest(), YoungTableau::parse("[13/24]"));
    EXPECT_EQ(YoungTableau::parse("[12/3]").without_largest(), YoungTableau::parse("[12]"));
}

TEST(Tableau, StandardTableauxSmall) {
    auto t2 = standard_tableaux(2);
    ASSERT_EQ(t2.size(), 2u);
    EXPECT_EQ(t2[0].to_string(), "[12]");
    EXPECT_EQ(t2[1].to_string(), "[1/2]");
    auto t3 = standard_tableaux(3);
    ASSERT_EQ(t3.size(), 4u);
    EXPECT_EQ(t3[0].to_string(), "[123]");
    EXPECT_EQ(t3[1].to_string(), "[12/3]");
    EXPECT_EQ(t3[2].to_string(), "[13/2]");
    EXPECT_EQ(t3[3].to_string(), "[1/2/3]");
    EXPECT_EQ(standard_tableaux(1).size(), 1u);
}

TEST(Tableau, HookProducts) {
    EXPECT_EQ(hook_product(D({2})), 2);
    EXPECT_EQ(hook_product(D({2, 1})), 3);
    EXPECT_EQ(hook_product(D({1, 1, 1})), 6);
    EXPECT_EQ(hook_product(D({2, 2})), 12);
    EXPECT_EQ(hook_product(D({3, 2})), 24);
    EXPECT_EQ(hook_product(YoungDiagram()), 1);
}

TEST(Tableau, SymbolicDimensions) {
    EXPECT_EQ(sun_dimension(D({2})), RationalFunction::parse("N*(N+1)/2"));
    EXPECT_EQ(sun_dimension(D({2, 1})), RationalFunction::parse("N*(N^2-1)/3"));
    EXPECT_EQ(sun_dimension(D({1})), RationalFunction::N());
    EXPECT_EQ(sun_dimension(YoungDiagram()), RationalFunction(1));
}

TEST(Tableau, ConcreteDimensionsAtSU3) {
    EXPECT_EQ(sun_dimension(D({2, 1}), 3), 8);
    EXPECT_EQ(sun_dimension(D({3}), 3), 10);
    EXPECT_EQ(sun_dimension(D({3, 3}), 3), 10);
    EXPECT_EQ(sun_dimension(D({4, 2}), 3), 27);
    EXPECT_EQ(sun_dimension(D({2, 1, 1, 1}), 3), 0);
}

TEST(LR, TwoBoxes) {
    MultipletCount c = lr_multiply(D({1}), D({1}));
    EXPECT_EQ(c, (MultipletCount{{D({2}), 1}, {D({1, 1}), 1}}));
}

TEST(LR, OctetTimesOctetAtSU3) {
    MultipletCount c = sun_trim(lr_multiply(D({2, 1}), D({2, 1})), 3);
    MultipletCount expected{{YoungDiagram(), 1}, {D({2, 1}), 2}, {D({3}), 1}, {D({3, 3}), 1}, {D({4, 2}), 1}};
    EXPECT_EQ(c, expected);
    EXPECT_EQ(total_dimension(c, 3), 64);
}

TEST(LR, KnownProductWithMultiplicity) {
    // s_{21} s_{21} = s_42 + s_411 + s_33 + 2 s_321 + s_3111 + s_222 + s_2211
    MultipletCount c = lr_multiply(D({2, 1}), D({2, 1}));
    MultipletCount expected{{D({4, 2}), 1},    {D({4, 1, 1}), 1},    {D({3, 3}), 1},    {D({3, 2, 1}), 2},
                            {D({3, 1, 1, 1}), 1}, {D({2, 2, 2}), 1}, {D({2, 2, 1, 1}), 1}};
    EXPECT_EQ(c, expected);
}

TEST(Trim, FullColumnsAndOverflow) {
    EXPECT_EQ(sun_trim(D({1, 1, 1}), 3), YoungDiagram());
    EXPECT_EQ(sun_trim(D({3, 3, 3}), 3), YoungDiagram());
    EXPECT_EQ(sun_trim(D({4, 2, 1}), 3), D({3, 1}));
    MultipletCount c{{D({2, 1, 1, 1}), 1}};
    EXPECT_TRUE(sun_trim(c, 3).empty());
}

TEST(Adjoint, PowersMatchTableOne) {
    auto n2 = decompose_adjoint_power(2, 3);
    EXPECT_EQ(n2.multiplet_count, 6);
    EXPECT_EQ(n2.colour_space_dim, 8);
    auto l2 = decompose_adjoint_power_large_n(2);
    EXPECT_EQ(l2.multiplet_count, 7);
    EXPECT_EQ(l2.colour_space_dim, 9);
    auto n3 = decompose_adjoint_power(3, 3);
    EXPECT_EQ(n3.multiplet_count, 29);
    EXPECT_EQ(n3.colour_space_dim, 145);
    auto l3 = decompose_adjoint_power_large_n(3);
    EXPECT_EQ(l3.multiplet_count, 51);
    EXPECT_EQ(l3.colour_space_dim, 265);
}

TEST(Adjoint, FirstOccurrence) {
    EXPECT_EQ(first_occurrence(YoungDiagram(), 3), 0);
    EXPECT_EQ(first_occurrence(D({2, 1}), 3), 1);
    EXPECT_EQ(first_occurrence(D({3}), 3), 2);
    EXPECT_EQ(first_occurrence(D({3, 3}), 3), 2);
    EXPECT_EQ(first_occurrence(D({4, 2}), 3), 2);
    EXPECT_EQ(first_occurrence(D({5, 1}), 3), 3);
    // [k] has triality k mod 3 at SU(3); never appears in adjoint powers.
    EXPECT_FALSE(first_occurrence(D({1}), 3).has_value());
}

TEST(Adjoint, MixedTensorDiagrams) {
    EXPECT_EQ(mixed_tensor_diagram(D({1}), D({1}), 5), adjoint_diagram(5));
    EXPECT_EQ(mixed_tensor_diagram(D({2}), D({2}), 5), D({4, 2, 2, 2}));
    EXPECT_EQ(mixed_tensor_diagram(D({2}), D({1, 1}), 5), D({3, 1, 1}));
    EXPECT_EQ(mixed_tensor_diagram(D({1, 1}), D({2}), 5), D({3, 3, 2, 2}));
    EXPECT_EQ(mixed_tensor_diagram(D({1, 1}), D({1, 1}), 5), D({2, 2, 1}));
}

TEST(TableauProperty, StandardCountMatchesHookFormulaAndBruteForce) {
    for (int n = 1; n <= 6; ++n) {
        Integer total(0);
        for (const auto& shape : partitions(n)) {
            const std::size_t count = standard_tableaux(shape).size();
            EXPECT_EQ(Integer(static_cast<long>(count)), factorial(n) / hook_product(shape)) << shape.to_string();
            EXPECT_EQ(static_cast<int>(count), brute_force_syt_count(shape)) << shape.to_string();
            EXPECT_EQ(hook_product(shape), naive_hook_product(shape));
            total += Integer(static_cast<long>(count)) * Integer(static_cast<long>(count));
        }
        EXPECT_EQ(total, factorial(n));
        for (const auto& t : standard_tableaux(n)) EXPECT_TRUE(t.is_standard());
    }
}

TEST(TableauProperty, DimensionConservation) {
    std::vector<YoungDiagram> ds;
    for (int n = 1; n <= 3; ++n)
        for (const auto& p : partitions(n)) ds.push_back(p);
    for (long N = 3; N <= 5; ++N)
        for (const auto& a : ds)
            for (const auto& b : ds) {
                MultipletCount c = lr_multiply(a, b);
                EXPECT_EQ(total_dimension(c, N), sun_dimension(a, N) * sun_dimension(b, N));
                EXPECT_EQ(total_dimension(sun_trim(c, N), N), sun_dimension(a, N) * sun_dimension(b, N));
            }
}

TEST(TableauProperty, SymbolicDimensionAgreesWithConcrete) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& d : partitions(n))
            for (long N = 2; N <= 6; ++N)
                EXPECT_EQ(sun_dimension(d).evaluate(Rational(N), Rational(1)), Rational(sun_dimension(d, N)));
}

TEST(TableauProperty, AdjointPowerDimension) {
    for (long N = 2; N <= 4; ++N)
        for (int k = 0; k <= 3; ++k) {
            auto dec = decompose_adjoint_power(k, N);
            Integer expect(1);
            for (int i = 0; i < k; ++i) expect *= N * N - 1;
            EXPECT_EQ(total_dimension(dec.multiplets, N), expect);
        }
}

TEST(TableauProperty, FirstOccurrenceChangesByAtMostOne) {
    for (long N = 3; N <= 4; ++N) {
        const YoungDiagram adj = adjoint_diagram(N);
        for (int k = 0; k <= 3; ++k) {
            for (const auto& [d, m] : decompose_adjoint_power(k, N).multiplets) {
                auto nf = first_occurrence(d, N);
                ASSERT_TRUE(nf.has_value());
                EXPECT_LE(*nf, k);
                for (const auto& [e, mm] : sun_trim(lr_multiply(d, adj), N)) {
                    auto ne = first_occurrence(e, N);
                    ASSERT_TRUE(ne.has_value());
                    EXPECT_LE(std::abs(*ne - *nf), 1) << d.to_string() << " -> " << e.to_string();
                }
            }
        }
    }
}

TEST(Json, MultipletCountJson) {
    std::string j = multiplet_count_to_json(MultipletCount{{D({2, 1}), 2}}, 3);
    EXPECT_NE(j.find("\"multiplicity\": 2"), std::string::npos);
    EXPECT_NE(j.find("\"dimension\": \"8\""), std::string::npos);
}
