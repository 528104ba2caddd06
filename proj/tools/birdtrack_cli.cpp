// Command-line front end: simplify, inner, gram, basis, dims, tableaux, oracle, vec3.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "birdtrack/error.hpp"
#include "birdtrack/limits.hpp"
#include "birdtrack/multiplet.hpp"
#include "birdtrack/rewrite.hpp"
#include "birdtrack/tableaux.hpp"
#include "birdtrack/vec3.hpp"

using namespace birdtrack;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitResource = 3;
constexpr int kExitVerification = 4;

struct Options {
    std::string format = "text";
    std::optional<std::string> n_text;
    std::string tr_text = "1/2";
    std::optional<std::size_t> cap_terms;
    std::optional<int> cap_degree;

    bool json() const { return format == "json"; }
};

Rational parse_rational(const std::string& text, const char* what) {
    const auto f = RationalFunction::parse(text);
    if (!f.is_constant()) throw ParseError(std::string(what) + " must be a number, got '" + text + "'");
    return f.constant();
}

std::optional<Rational> n_value(const Options& o) {
    if (!o.n_text) return std::nullopt;
    return parse_rational(*o.n_text, "--N");
}

Rational tr_value(const Options& o) { return parse_rational(o.tr_text, "--TR"); }

/// Argument text, or the contents of a file when written as @path.
std::string read_input(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    std::ifstream in(arg.substr(1));
    if (!in) throw ParseError("cannot read " + arg.substr(1));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string rational_text(const Rational& q) { return q.get_str(); }

// ---- subcommands ----------------------------------------------------------

int run_simplify(const Options& o, const std::string& input) {
    const auto nf = normal_form(TensorExpr::parse(read_input(input)));
    const auto n = n_value(o);
    if (o.json()) {
        Json j = Json::parse(nf.to_json());
        if (n && nf.signature().size() == 0) j["value"] = rational_text(nf.scalar().evaluate(*n, tr_value(o)));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << nf.to_dsl() << "\n";
        if (n && nf.signature().size() == 0) std::cout << "value: " << nf.scalar().evaluate(*n, tr_value(o)) << "\n";
    }
    return 0;
}

int run_inner(const Options& o, const std::string& a, const std::string& b) {
    const auto value = inner_product(TensorExpr::parse(read_input(a)), TensorExpr::parse(read_input(b)));
    const auto n = n_value(o);
    if (o.json()) {
        Json j;
        j["inner_product"] = value.to_string();
        if (n) j["value"] = rational_text(value.evaluate(*n, tr_value(o)));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << value.to_string() << "\n";
        if (n) std::cout << "value: " << value.evaluate(*n, tr_value(o)) << "\n";
    }
    return 0;
}

int print_report(const Options& o, const std::vector<BasisVector>& vs, const BasisReport& rep, Json& j) {
    if (o.json()) {
        Json checks;
        checks["gram_diagonal"] = rep.gram_diagonal;
        checks["projectors_idempotent"] = rep.projectors_idempotent;
        checks["projectors_hermitian"] = rep.projectors_hermitian;
        checks["projectors_transverse"] = rep.projectors_transverse;
        if (rep.complete) checks["complete"] = *rep.complete;
        checks["transitions_sandwiched"] = rep.transitions_sandwiched;
        checks["failures"] = rep.failures;
        j["verification"] = checks;
    } else {
        std::cout << "verification: " << (rep.ok() ? "ok" : "FAILED") << " (" << vs.size() << " vectors)\n";
        for (const auto& f : rep.failures) std::cout << "  " << f << "\n";
    }
    return rep.ok() ? 0 : kExitVerification;
}

int run_gram(const Options& o, const std::string& file, bool verify, bool complete) {
    const std::string text = read_input(file.empty() || file[0] == '@' ? file : "@" + file);
    const auto vs = basis_from_json(text);
    const auto n = n_value(o);
    const auto g = gram_matrix(vs);
    Json j;
    if (o.json()) {
        j["labels"] = Json::array();
        for (const auto& v : vs) j["labels"].push_back(v.label);
        j["gram"] = Json::array();
        for (const auto& row : g) {
            Json r = Json::array();
            for (const auto& x : row) r.push_back(x.to_string());
            j["gram"].push_back(r);
        }
        if (n) {
            const auto m = evaluate(g, *n, tr_value(o));
            j["gram_value"] = Json::array();
            for (const auto& row : m) {
                Json r = Json::array();
                for (const auto& x : row) r.push_back(rational_text(x));
                j["gram_value"].push_back(r);
            }
            j["rank"] = exact_rank(m);
        }
    } else {
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t k = 0; k < vs.size(); ++k)
                std::cout << "<" << vs[i].label << "," << vs[k].label << "> = " << g[i][k].to_string() << "\n";
        if (n) std::cout << "rank at N=" << *n << ", T_R=" << tr_value(o) << ": " << exact_rank(evaluate(g, *n, tr_value(o))) << "\n";
    }
    int status = 0;
    if (verify) status = print_report(o, vs, verify_basis(vs, complete), j);
    if (o.json()) std::cout << j.dump(2) << "\n";
    return status;
}

int run_basis(const Options& o, const std::string& kind, int nq, int ng, bool verify) {
    std::vector<BasisVector> vs;
    bool complete = false;
    if (kind == "trace") vs = trace_basis(nq, ng);
    else if (kind == "quark") vs = quark_multiplet_basis(3), complete = true;
    else if (kind == "gluon-aa") vs = gluon_multiplet_basis_AA(), complete = true;
    else if (kind == "quark-gluon") vs = quark_pair_gluon_pair_basis();
    else throw ParseError("unknown basis kind '" + kind + "' (trace, quark, gluon-aa, quark-gluon)");

    if (o.json() && !verify) {
        std::cout << basis_to_json(vs) << "\n";
        return 0;
    }
    Json j;
    if (o.json()) {
        j["basis"] = Json::parse(basis_to_json(vs));
    } else {
        for (const auto& v : vs) {
            std::cout << v.label << " [" << to_string(v.kind) << "] norm_sq = " << v.norm_sq.to_string();
            if (v.dimension) std::cout << ", dimension = " << v.dimension->to_string();
            std::cout << "\n  " << v.expr.to_dsl() << "\n";
        }
    }
    int status = 0;
    if (verify) status = print_report(o, vs, verify_basis(vs, complete), j);
    if (o.json()) std::cout << j.dump(2) << "\n";
    return status;
}

int run_dims(const Options& o, int k) {
    const auto n = n_value(o);
    long group_n = 0;
    if (n) {
        if (n->get_den() != 1 || *n < 2) throw DomainError("--N must be an integer >= 2");
        group_n = n->get_num().get_si();
    }
    const auto d = n ? decompose_adjoint_power(k, group_n) : decompose_adjoint_power_large_n(k);
    if (o.json()) {
        Json j;
        j["n"] = k;
        j["N"] = n ? Json(group_n) : Json("large");
        j["multiplets"] = d.multiplet_count;
        j["colour_space_dim"] = d.colour_space_dim;
        j["decomposition"] = Json::parse(multiplet_count_to_json(d.multiplets, n ? std::optional<long>(group_n) : std::nullopt));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "multiplets: " << d.multiplet_count << ", colour-space dim: " << d.colour_space_dim << "\n";
    }
    return 0;
}

int run_tableaux(const Options& o, const std::string& shape_text) {
    const auto shape = YoungDiagram::parse(shape_text);
    const auto ts = standard_tableaux(shape);
    const auto dim = sun_dimension(shape);
    const auto n = n_value(o);
    if (o.json()) {
        Json j;
        j["shape"] = shape.to_string();
        j["hook_product"] = hook_product(shape).get_str();
        j["dimension"] = dim.to_string();
        if (n) j["dimension_value"] = rational_text(dim.evaluate(*n, tr_value(o)));
        j["tableaux"] = Json::array();
        for (const auto& t : ts) j["tableaux"].push_back(t.to_string());
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "shape " << shape.to_string() << ": " << ts.size() << " standard tableaux, hook product "
                  << hook_product(shape).get_str() << ", dimension " << dim.to_string();
        if (n) std::cout << " = " << dim.evaluate(*n, tr_value(o));
        std::cout << "\n";
        for (const auto& t : ts) std::cout << "  " << t.to_string() << "\n";
    }
    return 0;
}

int run_oracle(const Options& o, const std::string& input) {
    const auto n = n_value(o).value_or(Rational(3));
    if (n.get_den() != 1) throw DomainError("--N must be an integer");
    const auto rep = oracle_check(TensorExpr::parse(read_input(input)), static_cast<int>(n.get_num().get_si()), tr_value(o));
    if (o.json()) {
        Json j;
        j["N"] = n.get_num().get_si();
        j["TR"] = rational_text(tr_value(o));
        j["max_abs_deviation"] = static_cast<double>(rep.max_abs_deviation);
        j["max_reference"] = static_cast<double>(rep.max_reference);
        j["agree"] = rep.agree;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (rep.agree ? "agree" : "DISAGREE") << ": max deviation " << static_cast<double>(rep.max_abs_deviation)
                  << ", max |value| " << static_cast<double>(rep.max_reference) << "\n";
    }
    return rep.agree ? 0 : kExitVerification;
}

int run_vec3(const Options& o, const std::string& input) {
    const auto reduced = reduce_eps(Eps3Expr::parse(read_input(input)));
    if (o.json()) {
        Json j;
        j["ports"] = reduced.ports();
        j["dsl"] = reduced.to_dsl();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << reduced.to_dsl() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact SU(N) birdtrack colour algebra"};
    app.require_subcommand(1, 1);
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--N", o.n_text, "Evaluate at this N");
    app.add_option("--TR", o.tr_text, "Value of T_R for evaluation (default 1/2)");
    app.add_option("--cap-terms", o.cap_terms, "Maximum intermediate terms in one reduction");
    app.add_option("--cap-degree", o.cap_degree, "Maximum permutation degree for S_n expansions");
    app.fallthrough();

    std::string a, b, kind = "trace", shape;
    int nq = 1, ng = 2, power = 2;
    bool verify = false, complete = false;
    std::function<int()> action;

    auto* simplify = app.add_subcommand("simplify", "Normal form of a DSL expression");
    simplify->add_option("expr", a, "DSL text or @file")->required();
    simplify->callback([&] { action = [&] { return run_simplify(o, a); }; });

    auto* inner = app.add_subcommand("inner", "Scalar product <a,b>");
    inner->add_option("a", a, "DSL text or @file")->required();
    inner->add_option("b", b, "DSL text or @file")->required();
    inner->callback([&] { action = [&] { return run_inner(o, a, b); }; });

    auto* gram = app.add_subcommand("gram", "Gram matrix of a basis JSON file");
    gram->add_option("file", a, "Basis JSON file")->required();
    gram->add_flag("--verify", verify, "Also run the projector and transition checks");
    gram->add_flag("--complete", complete, "Require the projectors to sum to the identity");
    gram->callback([&] { action = [&] { return run_gram(o, a, verify, complete); }; });

    auto* basis = app.add_subcommand("basis", "Emit a trace or multiplet basis");
    basis->add_option("kind", kind, "trace, quark, gluon-aa or quark-gluon");
    basis->add_option("--nq", nq, "Quark pairs (trace basis)");
    basis->add_option("--ng", ng, "Gluons (trace basis)");
    basis->add_flag("--verify", verify, "Verify the basis exactly");
    basis->callback([&] { action = [&] { return run_basis(o, kind, nq, ng, verify); }; });

    auto* dims = app.add_subcommand("dims", "Multiplets in the k-th adjoint power (large N unless --N)");
    dims->add_option("--n", power, "Number of gluons")->required();
    dims->callback([&] { action = [&] { return run_dims(o, power); }; });

    auto* tableaux = app.add_subcommand("tableaux", "Standard Young tableaux of a shape");
    tableaux->add_option("shape", shape, "Row lengths, e.g. [2,1]")->required();
    tableaux->callback([&] { action = [&] { return run_tableaux(o, shape); }; });

    auto* oracle = app.add_subcommand("oracle", "Numeric cross-check of an expression (default N=3)");
    oracle->add_option("expr", a, "DSL text or @file")->required();
    oracle->callback([&] { action = [&] { return run_oracle(o, a); }; });

    auto* vec3 = app.add_subcommand("vec3", "Reduce an eps/d3l expression");
    vec3->add_option("expr", a, "eps/d3l text or @file")->required();
    vec3->callback([&] { action = [&] { return run_vec3(o, a); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (o.cap_terms) limits().max_terms = *o.cap_terms;
        if (o.cap_degree) limits().max_degree = *o.cap_degree;
        return action();
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const VerificationError& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kExitVerification;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
