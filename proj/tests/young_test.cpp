#include <gtest/gtest.h>

#include "birdtrack/error.hpp"
#include "birdtrack/rewrite.hpp"
#include "birdtrack/young.hpp"

using namespace birdtrack;

namespace {

YoungTableau T(const char* s) { return YoungTableau::parse(s); }
const RationalFunction kN = RationalFunction::N();

}  // namespace

TEST(Young, ThreeBoxOperators) {
    EXPECT_EQ(young_operator(T("[123]")).element, symmetriser(3));
    EXPECT_EQ(young_operator(T("[1/2/3]")).element, antisymmetriser(3));
    auto expected = RationalFunction(Rational(4, 3)) * (symmetriser_on(3, {1, 2}) * antisymmetriser_on(3, {1, 3}));
    EXPECT_EQ(young_operator(T("[12/3]")).element, expected);
}

TEST(Young, NonStandardRejected) {
    EXPECT_THROW(young_operator(T("[21/3]")), DomainError);
    EXPECT_THROW(hermitian_young(T("[13/2/4]").relabelled({2, 1, 3, 4})), DomainError);
}

TEST(Young, LossOfTransversality) {
    auto a = young_operator(T("[135/24]")).element;
    auto b = young_operator(T("[123/45]")).element;
    EXPECT_TRUE((a * b).is_zero());
    EXPECT_FALSE((b * a).is_zero());
}

TEST(Young, HermitianBaseCase) {
    for (const char* s : {"[1]", "[12]", "[1/2]"})
        EXPECT_EQ(hermitian_young(T(s)).element, young_operator(T(s)).element);
}

TEST(Young, HermitianTwelveThree) {
    auto p = hermitian_young(T("[12/3]")).element;
    auto expected = RationalFunction(Rational(4, 3)) *
                    (symmetriser_on(3, {1, 2}) * antisymmetriser_on(3, {1, 3}) * symmetriser_on(3, {1, 2}));
    EXPECT_EQ(p, expected);
    EXPECT_EQ(p.trace(), young_operator(T("[12/3]")).element.trace());
}

TEST(Young, TraceDimensions) {
    EXPECT_EQ(operator_trace_dimension(young_operator(T("[12]"))), kN * (kN + 1) / 2);
    EXPECT_EQ(operator_trace_dimension(young_operator(T("[12/3]"))), kN * (kN * kN - 1) / 3);
    EXPECT_EQ(operator_trace_dimension(young_operator(T("[1]"))), kN);
}

TEST(Young, CapRaisesResourceError) {
    EXPECT_THROW(hermitian_young(T("[1234567]")), ResourceError);
}

TEST(Young, TensorInterpretationMatchesTrace) {
    auto y = young_operator(T("[13/2]"));
    // Closing every line of the tensor gives the algebraic trace.
    auto closed = partial_trace(y.tensor(), {{0, 3}, {1, 4}, {2, 5}});
    EXPECT_EQ(normal_form(closed).scalar(), operator_trace_dimension(y));
}

// ---- properties over all standard tableaux --------------------------------

TEST(YoungProperty, Idempotence) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& t : standard_tableaux(n)) {
            auto y = young_operator(t).element;
            EXPECT_EQ(y * y, y) << t.to_string();
            auto p = hermitian_young(t).element;
            EXPECT_EQ(p * p, p) << t.to_string();
        }
}

TEST(YoungProperty, Hermiticity) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& t : standard_tableaux(n)) {
            auto p = hermitian_young(t);
            EXPECT_EQ(p.element.dagger(), p.element) << t.to_string();
            if (n <= 3) EXPECT_EQ(dagger(p.tensor()), p.tensor()) << t.to_string();
        }
}

TEST(YoungProperty, TracePreservation) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& t : standard_tableaux(n)) {
            const auto dim = sun_dimension(t.shape());
            EXPECT_EQ(operator_trace_dimension(young_operator(t)), dim) << t.to_string();
            EXPECT_EQ(operator_trace_dimension(hermitian_young(t)), dim) << t.to_string();
        }
}

TEST(YoungProperty, HermitianOrthogonality) {
    for (int n = 3; n <= 5; ++n) {
        const auto ts = standard_tableaux(n);
        for (const auto& a : ts)
            for (const auto& b : ts)
                if (a != b) EXPECT_TRUE((hermitian_young(a).element * hermitian_young(b).element).is_zero())
                    << a.to_string() << " " << b.to_string();
    }
}

TEST(YoungProperty, CompletenessExact) {
    for (int n = 1; n <= 4; ++n) {
        AlgebraElement sum(n);
        for (const auto& t : standard_tableaux(n)) sum += hermitian_young(t).element;
        EXPECT_EQ(sum, AlgebraElement::identity(n)) << "n=" << n;
    }
}

TEST(YoungProperty, CompletenessFiveBoxesAtSmallN) {
    AlgebraElement sum(5);
    for (const auto& t : standard_tableaux(5)) sum += hermitian_young(t).element;
    const auto deviation = hilbert_schmidt_norm(sum - AlgebraElement::identity(5));
    for (int n : {2, 3}) EXPECT_EQ(deviation.evaluate(Rational(n), Rational(1, 2)), 0) << "N=" << n;
    // Holds in the group algebra itself, independent of N.
    EXPECT_EQ(sum, AlgebraElement::identity(5));
}

TEST(YoungProperty, PermutationCovariance) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& t : standard_tableaux(n))
            for (const auto& s : all_permutations(n)) {
                auto lhs = young_operator(t).element.conjugated(s);
                auto rhs = young_element(t.relabelled(s.one_based_images()));
                EXPECT_EQ(lhs, rhs) << t.to_string() << " " << s.to_string();
            }
}
