#include <gtest/gtest.h>

#include <map>
#include <set>

#include "birdtrack/error.hpp"
#include "birdtrack/multiplet.hpp"
#include "birdtrack/tableaux.hpp"
#include "birdtrack/young.hpp"

using namespace birdtrack;

namespace {

const RationalFunction kN = RationalFunction::N();
const RationalFunction kTR = RationalFunction::TR();
const Rational kHalf(1, 2);

const std::vector<BasisVector>& aa_projectors() {
    static const auto vs = gluon_projectors_AA();
    return vs;
}

const BasisVector& by_label(const std::vector<BasisVector>& vs, const std::string& label) {
    for (const auto& v : vs)
        if (v.label == label) return v;
    throw std::runtime_error("no basis vector " + label);
}

long double frobenius_sq(const NumericTensor& t) {
    long double s = 0;
    for (const auto& z : t.data) s += std::norm(z);
    return s;
}

}  // namespace

// ---- trace bases ----------------------------------------------------------

TEST(TraceBasis, Sizes) {
    EXPECT_EQ(trace_basis(1, 2).size(), 3u);
    EXPECT_EQ(trace_basis(0, 4).size(), 9u);
    EXPECT_EQ(trace_basis(0, 3).size(), 2u);
    EXPECT_EQ(trace_basis(2, 0).size(), 2u);
    EXPECT_EQ(trace_basis(0, 2).size(), 1u);
    EXPECT_EQ(trace_basis(0, 1).size(), 0u);
}

TEST(TraceBasis, QuarkPairTwoGluonsOrder) {
    const auto vs = trace_basis(1, 2);
    const auto sig = trace_basis_signature(1, 2);
    const std::string h = "[ports: g1:glu, g2:glu, q1:out, qb1:in; split: 4] ";
    EXPECT_EQ(normal_form(vs[0].expr), normal_form(TensorExpr::parse(h + "delta(q1,qb1)*gd(g1,g2)")));
    EXPECT_EQ(normal_form(vs[1].expr), normal_form(TensorExpr::parse(h + "t(g1;q1,x)*t(g2;x,qb1)")));
    EXPECT_EQ(normal_form(vs[2].expr), normal_form(TensorExpr::parse(h + "t(g2;q1,x)*t(g1;x,qb1)")));
    EXPECT_EQ(vs[0].expr.signature().kinds(), sig.kinds());
}

TEST(TraceBasis, ScalarProducts) {
    const auto g = gram_matrix(trace_basis(1, 2));
    EXPECT_EQ(g[0][1], kTR * (kN * kN - 1));
    EXPECT_EQ(g[0][0], kN * (kN * kN - 1));
    EXPECT_EQ(g[1][1], kTR * kTR * (kN * kN - 1) * (kN * kN - 1) / kN);
}

TEST(TraceBasis, FourGluonGramRank) {
    const auto g = gram_matrix(trace_basis(0, 4));
    ASSERT_EQ(g.size(), 9u);
    EXPECT_EQ(exact_rank(evaluate(g, Rational(2), kHalf)), 3);
    EXPECT_EQ(exact_rank(evaluate(g, Rational(3), kHalf)), 8);
    for (int n : {4, 5}) EXPECT_EQ(exact_rank(evaluate(g, Rational(n), kHalf)), 9) << "N=" << n;
}

TEST(TraceBasis, Validation) {
    EXPECT_THROW(trace_basis_signature(0, 0), DomainError);
    EXPECT_THROW(trace_basis(ExternalSignature({{"a", PortKind::QuarkOut}}, 1)), DomainError);
}

TEST(Rank, Exact) {
    RationalMatrix m{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    EXPECT_EQ(exact_rank(m), 1);
    EXPECT_EQ(exact_rank({}), 0);
    EXPECT_EQ(exact_rank({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}}), 2);
}

// ---- quarks ---------------------------------------------------------------

TEST(QuarkBasis, DiagonalGramAndDimensions) {
    const auto vs = quark_multiplet_basis();
    ASSERT_EQ(vs.size(), 6u);
    const auto rep = verify_basis(vs, true);
    EXPECT_TRUE(rep.ok()) << (rep.failures.empty() ? "" : rep.failures.front());
    EXPECT_EQ(rep.complete, std::optional<bool>(true));
    EXPECT_EQ(*by_label(vs, "[123]").dimension, kN * (kN + 1) * (kN + 2) / 6);
    EXPECT_EQ(*by_label(vs, "[12/3]").dimension, kN * (kN * kN - 1) / 3);
    EXPECT_EQ(*by_label(vs, "[13/2]").dimension, kN * (kN * kN - 1) / 3);
    EXPECT_EQ(*by_label(vs, "[1/2/3]").dimension, kN * (kN - 1) * (kN - 2) / 6);
    for (const auto& v : vs)
        if (v.kind == BasisKind::Projector) EXPECT_EQ(v.norm_sq, *v.dimension) << v.label;
}

TEST(QuarkBasis, ConnectorIsTransposition) {
    EXPECT_EQ(quark_transition_connector(), Permutation::parse_cycles("(23)", 3));
}

TEST(QuarkBasis, TransitionNormMatchesOracle) {
    const auto vs = quark_multiplet_basis();
    const auto& t1 = by_label(vs, "T1");
    EXPECT_EQ(t1.norm_sq, kN * (kN * kN - 1) / 4);
    for (int n : {3, 4}) {
        const long double numeric = frobenius_sq(numeric_eval(t1.expr, n, kHalf));
        const long double exact = t1.norm_sq.evaluate(Rational(n), kHalf).get_d();
        EXPECT_NEAR(static_cast<double>(numeric), static_cast<double>(exact), 1e-9 * static_cast<double>(exact));
    }
}

TEST(QuarkBasis, ConnectedOperatorIsProportionalToProjection) {
    const auto target = hermitian_young(YoungTableau::parse("[12/3]")).element;
    const auto source = hermitian_young(YoungTableau::parse("[13/2]")).element;
    const AlgebraElement sigma(quark_transition_connector());
    const AlgebraElement t1 = target * sigma * source;
    const AlgebraElement b = t1 * sigma;
    const auto ratio = (b * b).ratio_to(b);
    ASSERT_TRUE(ratio.has_value());
    EXPECT_FALSE(ratio->is_zero());
}

TEST(QuarkBasis, OnlyThreeQuarksSupported) { EXPECT_THROW(quark_multiplet_basis(4), DomainError); }

// ---- gluons ---------------------------------------------------------------

TEST(GluonBasis, ProjectorsVerify) {
    const auto rep = verify_basis(aa_projectors(), true);
    EXPECT_TRUE(rep.ok()) << (rep.failures.empty() ? "" : rep.failures.front());
    EXPECT_EQ(rep.complete, std::optional<bool>(true));
}

TEST(GluonBasis, DimensionsAtThree) {
    std::multiset<Rational> dims;
    RationalFunction total;
    for (const auto& v : aa_projectors()) {
        dims.insert(v.dimension->evaluate(Rational(3), kHalf));
        total += *v.dimension;
    }
    EXPECT_EQ(dims, (std::multiset<Rational>{Rational(0), Rational(1), Rational(8), Rational(8), Rational(10),
                                             Rational(10), Rational(27)}));
    EXPECT_EQ(total, (kN * kN - 1) * (kN * kN - 1));
}

TEST(GluonBasis, DimensionsMatchMixedTensors) {
    const YoungDiagram sym({2}), asym({1, 1});
    const std::map<std::string, std::pair<YoungDiagram, YoungDiagram>> shapes{
        {"27", {sym, sym}}, {"10", {sym, asym}}, {"10bar", {asym, sym}}, {"0", {asym, asym}}};
    for (const auto& [label, lm] : shapes) {
        const auto dim = *by_label(aa_projectors(), label).dimension;
        const int min_n = lm.first.row_count() + lm.second.row_count();
        for (long n = std::max(3, min_n); n <= 6; ++n) {
            const auto expected = sun_dimension(mixed_tensor_diagram(lm.first, lm.second, n), n);
            EXPECT_EQ(dim.evaluate(Rational(n), kHalf), Rational(expected)) << label << " N=" << n;
        }
    }
    EXPECT_EQ(*by_label(aa_projectors(), "27").dimension, kN * kN * (kN - 1) * (kN + 3) / 4);
    EXPECT_EQ(*by_label(aa_projectors(), "0").dimension, kN * kN * (kN + 1) * (kN - 3) / 4);
    EXPECT_EQ(*by_label(aa_projectors(), "10").dimension, (kN * kN - 4) * (kN * kN - 1) / 4);
}

TEST(GluonBasis, ProjectorsAgreeWithOracle) {
    for (const auto& v : aa_projectors())
        for (int n : {3, 4}) EXPECT_TRUE(oracle_check(v.expr, n, kHalf).agree) << v.label << " N=" << n;
}

TEST(GluonBasis, AdjointTransitions) {
    const auto vs = gluon_multiplet_basis_AA();
    ASSERT_EQ(vs.size(), 9u);
    const auto rep = verify_basis(vs);
    EXPECT_TRUE(rep.ok()) << (rep.failures.empty() ? "" : rep.failures.front());
    const auto& t = by_label(vs, "8a->8s");
    EXPECT_EQ(t.source, "8a");
    EXPECT_EQ(t.target, "8s");
    EXPECT_FALSE(t.norm_sq.is_zero());
}

TEST(GluonBasis, QuarkPairProjectors) {
    const auto rep = verify_basis(quark_pair_projectors(), true);
    EXPECT_TRUE(rep.ok()) << (rep.failures.empty() ? "" : rep.failures.front());
}

TEST(GluonBasis, QuarkPairGluonPairBasisIsOrthogonal) {
    const auto vs = quark_pair_gluon_pair_basis();
    ASSERT_EQ(vs.size(), 3u);
    const auto g = gram_matrix(vs);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            if (i == j) EXPECT_FALSE(g[i][j].is_zero());
            else EXPECT_TRUE(g[i][j].is_zero()) << i << j;
        }
}

TEST(GluonBasis, NoConnectorBetweenDifferentMultiplets) {
    EXPECT_THROW(transition_operator(by_label(aa_projectors(), "27"), by_label(aa_projectors(), "8a")), DomainError);
}

// ---- JSON -----------------------------------------------------------------

TEST(BasisJson, RoundTrip) {
    const auto vs = quark_multiplet_basis();
    const auto back = basis_from_json(basis_to_json(vs));
    ASSERT_EQ(back.size(), vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) {
        EXPECT_EQ(back[i].label, vs[i].label);
        EXPECT_EQ(back[i].kind, vs[i].kind);
        EXPECT_EQ(back[i].norm_sq, vs[i].norm_sq);
        EXPECT_EQ(back[i].dimension, vs[i].dimension);
        EXPECT_EQ(back[i].source, vs[i].source);
        EXPECT_EQ(normal_form(back[i].expr), normal_form(vs[i].expr));
    }
}

TEST(BasisJson, RejectsWrongNorm) {
    const std::string text =
        R"js([{"label":"x","kind":"projector","dsl_text":"[ports: i:out, j:in; split: 1] delta(i,j)","norm_sq":"N+1"}])js";
    EXPECT_THROW(basis_from_json(text), VerificationError);
    EXPECT_THROW(basis_from_json("{}"), ParseError);
    const std::string blob = R"([{"label":"x","kind":"blob","dsl_text":"1"}])";
    EXPECT_THROW(basis_from_json(blob), ParseError);
}
