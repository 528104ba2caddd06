#include "birdtrack/multiplet.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"

#include "birdtrack/error.hpp"
#include "birdtrack/limits.hpp"
#include "birdtrack/young.hpp"

namespace birdtrack {

namespace {

const char* kAAHeader = "[ports: a1:glu, a2:glu, b1:glu, b2:glu; split: 2] ";
const char* kVVHeader = "[ports: lb:in, l:out, rb:out, r:in; split: 2] ";

TensorExpr parse_with(const char* header, const std::string& body) { return TensorExpr::parse(header + body); }

NormalForm nf_compose(const NormalForm& a, const NormalForm& b) { return compose(a, b); }

// Closed trace of an operator: left port k joined to right port k.
RationalFunction operator_trace(const TensorExpr& e) {
    const int split = e.signature().split();
    if (2 * split != e.signature().size()) throw DomainError("trace needs as many left as right ports");
    std::vector<std::pair<int, int>> pairs;
    for (int k = 0; k < split; ++k) pairs.emplace_back(k, split + k);
    return normal_form(partial_trace(e, pairs)).scalar();
}

// lambda with x o x = lambda x.
RationalFunction square_ratio(const NormalForm& x, const std::string& what) {
    auto lambda = nf_compose(x, x).ratio_to(x);
    if (!lambda || lambda->is_zero()) throw VerificationError(what + " is not proportional to a projector");
    return *lambda;
}

BasisVector projector(std::string label, const NormalForm& p) {
    BasisVector v = make_vector(std::move(label), BasisKind::Projector, p.to_expr());
    v.dimension = operator_trace(v.expr);
    return v;
}

TensorExpr identity_like(const ExternalSignature& sig) {
    const auto kinds = sig.kinds();
    std::vector<PortKind> left(kinds.begin(), kinds.begin() + sig.split());
    std::vector<std::string> names;
    for (const auto& p : sig.ports()) names.push_back(p.name);
    return identity_operator(left).with_port_names(names);
}

}  // namespace

std::string to_string(BasisKind k) {
    switch (k) {
    case BasisKind::Projector: return "projector";
    case BasisKind::Transition: return "transition";
    case BasisKind::Trace: return "trace";
    }
    return "trace";
}

BasisVector make_vector(std::string label, BasisKind kind, const TensorExpr& expr) {
    BasisVector v;
    v.label = std::move(label);
    v.kind = kind;
    v.expr = expr;
    v.norm_sq = inner_product(expr, expr);
    return v;
}

// ---- trace bases ----------------------------------------------------------

ExternalSignature trace_basis_signature(int n_q, int n_g) {
    if (n_q < 0 || n_g < 0 || n_q + n_g < 1) throw DomainError("trace basis needs at least one external line");
    std::vector<Port> ports;
    for (int g = 1; g <= n_g; ++g) ports.push_back({"g" + std::to_string(g), PortKind::Gluon});
    for (int q = 1; q <= n_q; ++q) {
        ports.push_back({"q" + std::to_string(q), PortKind::QuarkOut});
        ports.push_back({"qb" + std::to_string(q), PortKind::QuarkIn});
    }
    return ExternalSignature(ports, static_cast<int>(ports.size()));
}

std::vector<TensorExpr> trace_basis(const ExternalSignature& sig) {
    std::vector<int> outs, ins, glus;
    for (int p = 0; p < sig.size(); ++p) {
        switch (sig.port(p).kind) {
        case PortKind::QuarkOut: outs.push_back(p); break;
        case PortKind::QuarkIn: ins.push_back(p); break;
        case PortKind::Gluon: glus.push_back(p); break;
        }
    }
    if (outs.size() != ins.size()) throw DomainError("trace basis needs equally many quark and antiquark ends");
    const int nq = static_cast<int>(outs.size()), ng = static_cast<int>(glus.size());
    std::vector<TensorExpr> out;
    for (const auto& s : all_permutations(nq + ng)) {
        bool fixed = false;
        for (int g = nq; g < nq + ng && !fixed; ++g) fixed = s(g) == g;
        if (fixed) continue;
        if (static_cast<int>(out.size()) >= limits().max_trace_basis_size)
            throw ResourceError("trace basis exceeds " + std::to_string(limits().max_trace_basis_size) + " elements");
        Wiring w;
        std::vector<bool> seen(static_cast<std::size_t>(nq + ng), false);
        for (int k = 0; k < nq; ++k) {
            std::vector<int> str{outs[static_cast<std::size_t>(k)]};
            int node = s(k);
            while (node >= nq) {
                seen[static_cast<std::size_t>(node)] = true;
                str.push_back(glus[static_cast<std::size_t>(node - nq)]);
                node = s(node);
            }
            str.push_back(ins[static_cast<std::size_t>(node)]);
            w.strings.push_back(std::move(str));
        }
        for (int g = nq; g < nq + ng; ++g) {
            if (seen[static_cast<std::size_t>(g)]) continue;
            std::vector<int> cyc;
            for (int node = g; !seen[static_cast<std::size_t>(node)]; node = s(node)) {
                seen[static_cast<std::size_t>(node)] = true;
                cyc.push_back(glus[static_cast<std::size_t>(node - nq)]);
            }
            if (cyc.size() == 2) {
                w.pairs.emplace_back(std::min(cyc[0], cyc[1]), std::max(cyc[0], cyc[1]));
            } else {
                std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
                w.traces.push_back(std::move(cyc));
            }
        }
        std::sort(w.strings.begin(), w.strings.end());
        std::sort(w.traces.begin(), w.traces.end());
        std::sort(w.pairs.begin(), w.pairs.end());
        NormalForm nf(sig);
        nf.add(w, RationalFunction(1));
        out.push_back(nf.to_expr());
    }
    return out;
}

std::vector<BasisVector> trace_basis(int n_q, int n_g) {
    std::vector<BasisVector> vs;
    int k = 0;
    for (const auto& e : trace_basis(trace_basis_signature(n_q, n_g)))
        vs.push_back(make_vector("c" + std::to_string(++k), BasisKind::Trace, e));
    return vs;
}

// ---- quarks ---------------------------------------------------------------

Permutation quark_transition_connector() {
    const auto target = hermitian_young(YoungTableau::parse("[12/3]")).element;
    const auto source = hermitian_young(YoungTableau::parse("[13/2]")).element;
    for (const auto& s : all_permutations(3))
        if (!(target * AlgebraElement(s) * source).is_zero()) return s;
    throw DomainError("no permutation connects [13/2] to [12/3]");
}

std::vector<BasisVector> quark_multiplet_basis(int n) {
    if (n != 3) throw DomainError("quark multiplet bases are implemented for three quark lines only");
    std::vector<BasisVector> vs;
    std::map<std::string, AlgebraElement> proj;
    for (const auto& t : standard_tableaux(3)) {
        const auto p = hermitian_young(t);
        proj.emplace(t.to_string(), p.element);
        BasisVector v = make_vector(t.to_string(), BasisKind::Projector, p.tensor());
        v.dimension = operator_trace_dimension(p);
        vs.push_back(std::move(v));
    }
    auto transition = [&](const std::string& label, const std::string& src, const std::string& dst) {
        const auto& ps = proj.at(src);
        const auto& pt = proj.at(dst);
        for (const auto& s : all_permutations(3)) {
            AlgebraElement t = pt * AlgebraElement(s) * ps;
            if (t.is_zero()) continue;
            BasisVector v = make_vector(label, BasisKind::Transition, from_permutation(t));
            v.source = src;
            v.target = dst;
            return v;
        }
        throw DomainError("no permutation connects " + src + " to " + dst);
    };
    vs.push_back(transition("T1", "[13/2]", "[12/3]"));
    vs.push_back(transition("T2", "[12/3]", "[13/2]"));
    return vs;
}

// ---- gluons ---------------------------------------------------------------

std::vector<BasisVector> quark_pair_projectors() {
    auto singlet = normal_form(parse_with(kVVHeader, "1/N*delta(l,lb)*delta(rb,r)"));
    auto adjoint = normal_form(parse_with(kVVHeader, "1/T_R*t(e;l,lb)*t(e;rb,r)"));
    return {projector("1", singlet), projector("8", adjoint)};
}

std::vector<BasisVector> gluon_projectors_AA() {
    const RationalFunction one(1);
    auto singlet = normal_form(parse_with(kAAHeader, "1/(N^2-1)*gd(a1,a2)*gd(b1,b2)"));
    auto xa = normal_form(parse_with(kAAHeader, "f(a1,a2,e)*f(e,b2,b1)"));
    auto xs = normal_form(parse_with(kAAHeader, "dv(a1,a2,e)*dv(e,b2,b1)"));
    auto pa = (one / square_ratio(xa, "f bridge")) * xa;
    auto ps = (one / square_ratio(xs, "d bridge")) * xs;

    std::vector<BasisVector> vs{projector("1", singlet), projector("8a", pa), projector("8s", ps)};

    NormalForm q = normal_form(identity_like(singlet.signature()));
    q += RationalFunction(-1) * singlet;
    q += RationalFunction(-1) * pa;
    q += RationalFunction(-1) * ps;
    struct NewRule {
        const char* label;
        const char* quarks;
        const char* antiquarks;
    };
    for (const NewRule& r : {NewRule{"27", "sym", "sym"}, NewRule{"10", "sym", "asym"}, NewRule{"10bar", "asym", "sym"},
                             NewRule{"0", "asym", "asym"}}) {
        const std::string body = std::string("t(a1;u1,v1)*t(a2;u2,v2)*") + r.quarks + "(x1,x2;u1,u2)*" + r.antiquarks +
                                 "(v1,v2;y1,y2)*t(b1;y1,x1)*t(b2;y2,x2)";
        auto x = normal_form(parse_with(kAAHeader, body));
        auto t = nf_compose(nf_compose(q, x), q);
        auto p = (one / square_ratio(t, std::string("new multiplet ") + r.label)) * t;
        vs.push_back(projector(r.label, p));
    }
    return vs;
}

BasisVector transition_operator(const BasisVector& source, const BasisVector& target) {
    const auto& ss = source.expr.signature();
    const auto& ts = target.expr.signature();
    std::vector<Port> ports;
    for (int k = 0; k < ts.split(); ++k) ports.push_back({"l" + std::to_string(k + 1), ts.port(k).kind});
    for (int k = ss.split(); k < ss.size(); ++k) ports.push_back({"r" + std::to_string(k - ss.split() + 1), ss.port(k).kind});
    const ExternalSignature hom(ports, ts.split());

    std::vector<TensorExpr> candidates;
    const auto tk = ts.kinds(), sk = ss.kinds();
    if (std::vector<PortKind>(tk.begin(), tk.begin() + ts.split()) == std::vector<PortKind>(sk.begin(), sk.begin() + ss.split()))
        candidates.push_back(identity_like(hom));
    for (auto& c : trace_basis(hom)) candidates.push_back(std::move(c));

    const NormalForm pt = normal_form(target.expr), ps = normal_form(source.expr);
    for (const auto& x : candidates) {
        NormalForm t = nf_compose(nf_compose(pt, normal_form(x)), ps);
        if (t.is_zero()) continue;
        BasisVector v = make_vector(source.label + "->" + target.label, BasisKind::Transition, t.to_expr());
        v.source = source.label;
        v.target = target.label;
        return v;
    }
    throw DomainError("no non-vanishing connector from " + source.label + " to " + target.label);
}

std::vector<BasisVector> gluon_multiplet_basis_AA() {
    auto vs = gluon_projectors_AA();
    const BasisVector pa = vs[1], ps = vs[2];
    vs.push_back(transition_operator(pa, ps));
    vs.push_back(transition_operator(ps, pa));
    return vs;
}

std::vector<BasisVector> quark_pair_gluon_pair_basis() {
    const auto aa = gluon_projectors_AA();
    const auto vv = quark_pair_projectors();
    return {transition_operator(aa[0], vv[0]), transition_operator(aa[1], vv[1]), transition_operator(aa[2], vv[1])};
}

// ---- verification ---------------------------------------------------------

FunctionMatrix gram_matrix(const std::vector<BasisVector>& vs) {
    for (const auto& v : vs)
        if (!v.expr.signature().compatible(vs.front().expr.signature()))
            throw DomainError("basis vectors have different signatures");
    std::vector<NormalForm> nfs;
    for (const auto& v : vs) nfs.push_back(normal_form(v.expr));
    FunctionMatrix g(vs.size(), std::vector<RationalFunction>(vs.size()));
    // Coefficients are real, so the matrix is symmetric.
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i; j < vs.size(); ++j) g[i][j] = g[j][i] = inner_product(nfs[i], nfs[j]);
    return g;
}

RationalMatrix evaluate(const FunctionMatrix& m, const Rational& n, const Rational& tr) {
    RationalMatrix r;
    for (const auto& row : m) {
        r.emplace_back();
        for (const auto& x : row) r.back().push_back(x.evaluate(n, tr));
    }
    return r;
}

int exact_rank(RationalMatrix m) {
    int rank = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
        std::size_t piv = static_cast<std::size_t>(rank);
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
        const auto& p = m[static_cast<std::size_t>(rank)];
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == static_cast<std::size_t>(rank) || m[r][c] == 0) continue;
            const Rational f = m[r][c] / p[c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * p[k];
        }
        ++rank;
    }
    return rank;
}

BasisReport verify_basis(const std::vector<BasisVector>& vs, bool check_completeness) {
    BasisReport rep;
    if (vs.empty()) return rep;
    rep.gram = gram_matrix(vs);
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < vs.size(); ++j)
            if (i != j && !rep.gram[i][j].is_zero()) {
                rep.gram_diagonal = false;
                rep.failures.push_back("<" + vs[i].label + "," + vs[j].label + "> = " + rep.gram[i][j].to_string());
            }
    std::map<std::string, NormalForm> projectors;
    std::vector<std::string> order;
    for (const auto& v : vs) {
        if (v.kind != BasisKind::Projector) continue;
        const NormalForm p = normal_form(v.expr);
        projectors.emplace(v.label, p);
        order.push_back(v.label);
        if (!(nf_compose(p, p) == p)) {
            rep.projectors_idempotent = false;
            rep.failures.push_back(v.label + " is not idempotent");
        }
        if (!(normal_form(dagger(v.expr)) == p)) {
            rep.projectors_hermitian = false;
            rep.failures.push_back(v.label + " is not Hermitian");
        }
        const RationalFunction dim = v.dimension ? *v.dimension : operator_trace(v.expr);
        rep.dimensions.emplace_back(v.label, dim, dim.evaluate(Rational(3), Rational(1, 2)));
    }
    for (const auto& a : order)
        for (const auto& b : order)
            if (a != b && !nf_compose(projectors.at(a), projectors.at(b)).is_zero()) {
                rep.projectors_transverse = false;
                rep.failures.push_back(a + " * " + b + " != 0");
            }
    if (check_completeness) {
        NormalForm sum(vs.front().expr.signature());
        for (const auto& l : order) sum += projectors.at(l);
        rep.complete = sum == normal_form(identity_like(vs.front().expr.signature()));
        if (!*rep.complete) rep.failures.push_back("projectors do not sum to the identity");
    }
    for (const auto& v : vs) {
        if (v.kind != BasisKind::Transition) continue;
        auto s = projectors.find(v.source);
        auto t = projectors.find(v.target);
        if (s == projectors.end() || t == projectors.end()) continue;
        const NormalForm x = normal_form(v.expr);
        if (!(nf_compose(nf_compose(t->second, x), s->second) == x)) {
            rep.transitions_sandwiched = false;
            rep.failures.push_back(v.label + " is not fixed by its projectors");
        }
    }
    return rep;
}

// ---- JSON -----------------------------------------------------------------

std::string basis_to_json(const std::vector<BasisVector>& vs) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& v : vs) {
        nlohmann::ordered_json j;
        j["label"] = v.label;
        j["kind"] = to_string(v.kind);
        j["dsl_text"] = v.expr.to_dsl();
        j["norm_sq"] = v.norm_sq.to_string();
        j["dimension"] = v.dimension ? nlohmann::ordered_json(v.dimension->to_string()) : nlohmann::ordered_json(nullptr);
        if (!v.source.empty()) {
            j["source"] = v.source;
            j["target"] = v.target;
        }
        arr.push_back(j);
    }
    return arr.dump(2);
}

std::vector<BasisVector> basis_from_json(const std::string& text) {
    nlohmann::json arr;
    try {
        arr = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("basis JSON: ") + e.what());
    }
    if (!arr.is_array()) throw ParseError("basis JSON must be an array");
    std::vector<BasisVector> vs;
    for (const auto& j : arr) {
        if (!j.is_object() || !j.contains("label") || !j.contains("kind") || !j.contains("dsl_text"))
            throw ParseError("basis entry needs label, kind and dsl_text");
        const std::string kind = j.at("kind").get<std::string>();
        BasisKind k;
        if (kind == "projector") k = BasisKind::Projector;
        else if (kind == "transition") k = BasisKind::Transition;
        else if (kind == "trace") k = BasisKind::Trace;
        else throw ParseError("unknown basis kind '" + kind + "'");
        BasisVector v = make_vector(j.at("label").get<std::string>(), k, TensorExpr::parse(j.at("dsl_text").get<std::string>()));
        if (j.contains("norm_sq") && j.at("norm_sq").is_string()) {
            const auto stored = RationalFunction::parse(j.at("norm_sq").get<std::string>());
            if (!(stored == v.norm_sq))
                throw VerificationError("stored norm_sq of " + v.label + " is " + stored.to_string() + ", computed " +
                                        v.norm_sq.to_string());
        }
        if (j.contains("dimension") && j.at("dimension").is_string())
            v.dimension = RationalFunction::parse(j.at("dimension").get<std::string>());
        if (j.contains("source")) v.source = j.at("source").get<std::string>();
        if (j.contains("target")) v.target = j.at("target").get<std::string>();
        vs.push_back(std::move(v));
    }
    return vs;
}

}  // namespace birdtrack
