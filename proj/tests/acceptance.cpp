// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "birdtrack/multiplet.hpp"
#include "birdtrack/rewrite.hpp"
#include "birdtrack/tableaux.hpp"
#include "birdtrack/vec3.hpp"
#include "birdtrack/young.hpp"
#include "generators.hpp"

using namespace birdtrack;

namespace {

const RationalFunction kN = RationalFunction::N();
const RationalFunction kTR = RationalFunction::TR();
const Rational kHalf(1, 2);
constexpr long double kRel = 1e-9L;
constexpr long double kAbs = 1e-12L;

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome r;
    try {
        r = body();
    } catch (const std::exception& e) {
        r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!r.pass) ++failures;
    std::printf("[%s] %2d %s: %s (%.2fs)\n", r.pass ? "PASS" : "FAIL", id, name, r.detail.c_str(), secs);
    std::fflush(stdout);
}

TensorExpr P(const std::string& s) { return TensorExpr::parse(s); }
Eps3Expr V(const std::string& s) { return Eps3Expr::parse(s); }

bool within_tolerance(long double dev, long double ref) { return dev <= kAbs || dev <= kRel * ref; }

Outcome eps_delta() {
    const bool shared = reduce_eps(V("[ports: i, j, l, k] eps(i,j,m)*eps(l,k,m)")) ==
                        V("[ports: i, j, l, k] d3l(i,l)*d3l(j,k) - d3l(i,k)*d3l(j,l)");
    const bool full = reduce_eps(V("eps(i,j,m)*eps(j,i,m)")) == V("-6");
    Eps3Expr a3({"i1", "i2", "i3", "j1", "j2", "j3"});
    for (const auto& p : all_permutations(3)) {
        std::vector<Atom> atoms;
        for (int k = 0; k < 3; ++k) atoms.push_back({AtomKind::GluonDelta, {p(k), 3 + k}});
        a3.add_term(atoms, Rational(p.sign(), 6));
    }
    const bool free_pair =
        expand_eps_pairs(V("[ports: i1, i2, i3, j1, j2, j3] eps(i1,i2,i3)*eps(j3,j2,j1)")) == Rational(-6) * a3;
    std::ostringstream d;
    d << "one shared index " << (shared ? "ok" : "wrong") << ", full contraction " << (full ? "-6" : "wrong")
      << ", free pair " << (free_pair ? "-6 A3" : "wrong");
    return {shared && full && free_pair, d.str()};
}

Outcome fierz() {
    const std::string h = "[ports: i:out, j:in, k:out, l:in; split: 4] ";
    const auto lhs = P(h + "t(a;i,j)*t(a;k,l)");
    const auto rhs = P(h + "T_R*delta(i,l)*delta(k,j) - T_R/N*delta(i,j)*delta(k,l)");
    long double worst = 0;
    bool ok = true;
    for (int n = 2; n <= 5; ++n)
        for (const Rational& tr : {kHalf, Rational(1)}) {
            const auto r = compare(numeric_eval(lhs, n, tr), numeric_eval(rhs, n, tr));
            worst = std::max(worst, r.max_abs_deviation);
            ok = ok && r.max_abs_deviation < kRel;
        }
    std::ostringstream d;
    d << "N=2..5, T_R in {1/2,1}, max deviation " << static_cast<double>(worst);
    return {ok, d.str()};
}

Outcome casimirs() {
    const auto cf = normal_form(P("t(a;i,k)*t(a;k,j)")).ratio_to(normal_form(P("delta(i,j)")));
    const auto ca = normal_form(P("f(a,c,d)*f(b,d,c)")).ratio_to(normal_form(P("gd(a,b)")));
    const bool ok = cf && ca && *cf == kTR * (kN * kN - 1) / kN && *ca == 2 * kTR * kN;
    return {ok, "C_F = " + (cf ? cf->to_string() : "?") + ", C_A = " + (ca ? ca->to_string() : "?")};
}

Outcome jacobi() {
    const auto nf = normal_form(P("f(a,b,e)*f(e,c,d) + f(b,c,e)*f(e,a,d) + f(c,a,e)*f(e,b,d)"));
    return {nf.is_zero(), nf.is_zero() ? "normal form is zero" : "residual " + nf.to_dsl()};
}

Outcome young_traces() {
    const auto t12 = operator_trace_dimension(young_operator(YoungTableau::parse("[12]")));
    const auto t123 = operator_trace_dimension(young_operator(YoungTableau::parse("[12/3]")));
    bool ok = t12 == kN * (kN + 1) / 2 && t123 == kN * (kN * kN - 1) / 3;
    std::ostringstream d;
    d << "tr Y[12] = " << t12 << ", tr Y[12/3] = " << t123 << ", adjoint column:";
    const long expected[] = {3, 8, 15, 24};
    for (long n = 2; n <= 5; ++n) {
        const auto shape = adjoint_diagram(n);
        const auto y = young_operator(standard_tableaux(shape).front());
        const Rational v = operator_trace_dimension(y).evaluate(Rational(n), kHalf);
        ok = ok && v == expected[n - 2];
        d << " " << v;
    }
    return {ok, d.str()};
}

Outcome transversality() {
    const auto a = young_operator(YoungTableau::parse("[135/24]")).element;
    const auto b = young_operator(YoungTableau::parse("[123/45]")).element;
    const bool loss = (a * b).is_zero() && !(b * a).is_zero();
    const auto ts = standard_tableaux(5);
    std::vector<AlgebraElement> ps;
    bool props = true;
    for (const auto& t : ts) {
        const auto p = hermitian_young(t);
        ps.push_back(p.element);
        props = props && p.element * p.element == p.element && p.element.dagger() == p.element &&
                operator_trace_dimension(p) == sun_dimension(t.shape());
    }
    bool transverse = true;
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = 0; j < ps.size(); ++j)
            if (i != j && !(ps[i] * ps[j]).is_zero()) transverse = false;
    std::ostringstream d;
    d << "Y[135/24]Y[123/45] = 0 and reverse != 0: " << (loss ? "yes" : "no") << "; " << ts.size()
      << " Hermitian operators idempotent/Hermitian/traces " << (props ? "ok" : "wrong") << ", transversal "
      << (transverse ? "ok" : "wrong");
    return {loss && props && transverse, d.str()};
}

Outcome gluon_projectors() {
    const auto vs = gluon_projectors_AA();
    const auto rep = verify_basis(vs, true);
    std::multiset<Rational> dims;
    std::ostringstream d;
    d << "traces at N=3:";
    for (const auto& v : vs) {
        const Rational x = v.dimension->evaluate(Rational(3), kHalf);
        dims.insert(x);
        d << " " << v.label << "=" << x;
    }
    const std::multiset<Rational> expected{Rational(1), Rational(8), Rational(8), Rational(10),
                                           Rational(10), Rational(27), Rational(0)};
    const bool ok = rep.ok() && rep.complete.value_or(false) && dims == expected;
    d << "; idempotent/Hermitian/transversal/complete " << (rep.ok() ? "ok" : rep.failures.front());
    return {ok, d.str()};
}

Outcome table1() {
    struct Row {
        int k;
        long long m3, d3, ml, dl;
    };
    const Row rows[] = {{2, 6, 8, 7, 9}, {3, 29, 145, 51, 265}, {4, 166, 3598, 513, 14833}, {5, 1002, 107160, 6345, 1334961}};
    bool ok = true;
    std::ostringstream d;
    for (const auto& r : rows) {
        const auto a = decompose_adjoint_power(r.k, 3);
        const auto b = decompose_adjoint_power_large_n(r.k);
        ok = ok && a.multiplet_count == r.m3 && a.colour_space_dim == r.d3 && b.multiplet_count == r.ml &&
             b.colour_space_dim == r.dl;
        d << (r.k > 2 ? "; " : "") << "n=" << r.k << ": " << a.multiplet_count << "/" << a.colour_space_dim << ", "
          << b.multiplet_count << "/" << b.colour_space_dim;
    }
    return {ok, d.str()};
}

Outcome trace_rank() {
    const auto g = gram_matrix(trace_basis(0, 4));
    const int r3 = exact_rank(evaluate(g, Rational(3), kHalf));
    const int r5 = exact_rank(evaluate(g, Rational(5), kHalf));
    return {g.size() == 9 && r3 == 8 && r5 == 9,
            std::to_string(g.size()) + " elements, rank " + std::to_string(r3) + " at N=3, " + std::to_string(r5) + " at N=5"};
}

Outcome quark_gluon() {
    const auto g = gram_matrix(quark_pair_gluon_pair_basis());
    bool diagonal = g.size() == 3;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) diagonal = diagonal && (i == j) != g[i][j].is_zero();
    const auto t = gram_matrix(trace_basis(1, 2));
    const bool off = t[0][1] == kTR * (kN * kN - 1);
    return {diagonal && off, std::string("multiplet Gram ") + (diagonal ? "diagonal" : "not diagonal") +
                                 ", trace <c1,c2> = " + t[0][1].to_string()};
}

Outcome quark_sector() {
    const auto vs = quark_multiplet_basis(3);
    const auto rep = verify_basis(vs, true);
    const auto target = hermitian_young(YoungTableau::parse("[12/3]")).element;
    const auto source = hermitian_young(YoungTableau::parse("[13/2]")).element;
    const AlgebraElement sigma(quark_transition_connector());
    const AlgebraElement b = target * sigma * source * sigma;
    const auto ratio = (b * b).ratio_to(b);
    const bool b_ok = ratio && !ratio->is_zero();
    std::ostringstream d;
    d << vs.size() << " vectors, checks " << (rep.ok() ? "ok" : rep.failures.front()) << ", B^2 = "
      << (b_ok ? ratio->to_string() : std::string("?")) << " B";
    return {rep.ok() && rep.complete.value_or(false) && b_ok, d.str()};
}

Outcome oracle_regression() {
    std::mt19937 rng(20261015);
    int checked = 0, agree = 0;
    long double worst_rel = 0;
    while (checked < 50) {
        gen::DiagramSpec spec;
        spec.atoms = 2 + static_cast<int>(rng() % 4);
        const auto e = gen::random_diagram(rng, spec);
        if (e.is_zero()) continue;
        bool all = true;
        for (int n = 2; n <= 5; ++n) {
            const auto r = oracle_check(e, n, kHalf);
            all = all && r.agree && within_tolerance(r.max_abs_deviation, r.max_reference);
            if (r.max_reference > kAbs) worst_rel = std::max(worst_rel, r.max_abs_deviation / r.max_reference);
        }
        ++checked;
        if (all) ++agree;
    }
    std::ostringstream d;
    d << agree << "/" << checked << " expressions agree at N=2..5, T_R=1/2, worst relative deviation "
      << static_cast<double>(worst_rel);
    return {agree == checked, d.str()};
}

}  // namespace

int main() {
    criterion(1, "eps-delta calculus", eps_delta);
    criterion(2, "Fierz identity (numeric)", fierz);
    criterion(3, "Casimirs", casimirs);
    criterion(4, "Jacobi identity", jacobi);
    criterion(5, "Young operator traces", young_traces);
    criterion(6, "transversality failure and Hermitian cure", transversality);
    criterion(7, "gluon projectors on A(x)A", gluon_projectors);
    criterion(8, "adjoint-power multiplet counts", table1);
    criterion(9, "four-gluon trace-basis rank", trace_rank);
    criterion(10, "quark-pair gluon-pair bases", quark_gluon);
    criterion(11, "three-quark multiplet basis", quark_sector);
    criterion(12, "numeric oracle regression", oracle_regression);
    std::printf("%d of 12 criteria passed\n", 12 - failures);
    return failures == 0 ? 0 : 1;
}
