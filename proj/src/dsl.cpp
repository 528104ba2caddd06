// Text and JSON front end for TensorExpr.

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "json.hpp"

#include "birdtrack/error.hpp"
#include "birdtrack/limits.hpp"
#include "birdtrack/tensor.hpp"
#include "lexer.hpp"

namespace birdtrack {

namespace {

struct NamedAtom {
    AtomKind kind;
    std::vector<std::string> names;
};

struct NamedTerm {
    RationalFunction c;
    std::vector<NamedAtom> atoms;
};

using NamedExpr = std::vector<NamedTerm>;

const std::map<std::string, AtomKind>& atom_names() {
    static const std::map<std::string, AtomKind> m{
        {"delta", AtomKind::Delta}, {"gd", AtomKind::GluonDelta}, {"t", AtomKind::Gen}, {"f", AtomKind::F},
        {"dv", AtomKind::D},        {"sym", AtomKind::Sym},       {"asym", AtomKind::Asym}};
    return m;
}

std::string atom_name(AtomKind k) {
    for (const auto& [n, kk] : atom_names())
        if (kk == k) return n;
    return "?";
}

bool is_scalar(const NamedExpr& e) {
    return std::all_of(e.begin(), e.end(), [](const NamedTerm& t) { return t.atoms.empty(); });
}

RationalFunction scalar_value(const NamedExpr& e) {
    RationalFunction s;
    for (const auto& t : e) s += t.c;
    return s;
}

NamedExpr multiply(const NamedExpr& a, const NamedExpr& b) {
    NamedExpr r;
    if (a.size() * b.size() > limits().max_terms) throw ResourceError("parsed expression exceeds the term cap");
    for (const auto& x : a)
        for (const auto& y : b) {
            NamedTerm t{x.c * y.c, x.atoms};
            t.atoms.insert(t.atoms.end(), y.atoms.begin(), y.atoms.end());
            r.push_back(std::move(t));
        }
    return r;
}

class Parser {
public:
    explicit Parser(std::string_view text) : ts_(text) {}

    struct Header {
        std::vector<Port> ports;
        std::set<std::string> unkinded;  // names whose kind is inferred from usage
        std::optional<int> split;
    };

    std::optional<Header> header() {
        if (!ts_.accept("[")) return std::nullopt;
        Header h;
        bool ports_form = false, groups_form = false;
        for (;;) {
            std::string key = ts_.ident();
            ts_.expect(":");
            if (key == "split") {
                if (ts_.peek().kind != detail::Token::Number) ts_.fail("expected split count");
                h.split = std::stoi(ts_.next().text);
            } else if (key == "ports") {
                ports_form = true;
                if (ts_.peek().kind == detail::Token::Ident) {
                    do {
                        std::string name = ts_.ident();
                        if (ts_.accept(":")) {
                            std::string kind = ts_.ident();
                            if (kind == "out") h.ports.push_back({name, PortKind::QuarkOut});
                            else if (kind == "in") h.ports.push_back({name, PortKind::QuarkIn});
                            else if (kind == "glu") h.ports.push_back({name, PortKind::Gluon});
                            else ts_.fail("unknown port kind '" + kind + "'");
                        } else {
                            h.ports.push_back({name, PortKind::Gluon});
                            h.unkinded.insert(name);
                        }
                    } while (ts_.accept(","));
                }
            } else if (key == "out" || key == "in" || key == "glu") {
                groups_form = true;
                const PortKind kind = key == "out" ? PortKind::QuarkOut : key == "in" ? PortKind::QuarkIn : PortKind::Gluon;
                if (ts_.peek().kind == detail::Token::Ident) {
                    do h.ports.push_back({ts_.ident(), kind});
                    while (ts_.accept(","));
                }
            } else {
                ts_.fail("unknown header field '" + key + "'");
            }
            if (ts_.accept("]")) break;
            ts_.expect(";");
        }
        if (ports_form && groups_form) ts_.fail("header mixes 'ports' with 'out/in/glu'");
        std::set<std::string> seen;
        for (const auto& p : h.ports)
            if (!seen.insert(p.name).second) throw ParseError("port '" + p.name + "' listed twice in header");
        return h;
    }

    NamedExpr expr() {
        NamedExpr r;
        int sign = 1;
        if (ts_.accept("-")) sign = -1;
        else ts_.accept("+");
        for (;;) {
            for (auto& x : term()) {
                x.c = RationalFunction(sign) * x.c;
                r.push_back(std::move(x));
            }
            if (ts_.accept("+")) sign = 1;
            else if (ts_.accept("-")) sign = -1;
            else break;
        }
        return r;
    }

    void finish() {
        if (!ts_.at_end()) ts_.fail("unexpected trailing input");
    }

private:
    NamedExpr term() {
        NamedExpr r = unary();
        for (;;) {
            if (ts_.accept("*")) {
                r = multiply(r, unary());
            } else if (ts_.accept("/")) {
                NamedExpr d = unary();
                if (!is_scalar(d)) ts_.fail("division by a tensor");
                RationalFunction v = scalar_value(d);
                if (v.is_zero()) ts_.fail("division by zero");
                for (auto& t : r) t.c = t.c / v;
            } else {
                break;
            }
        }
        return r;
    }

    NamedExpr unary() {
        if (ts_.accept("-")) {
            NamedExpr r = unary();
            for (auto& t : r) t.c = -t.c;
            return r;
        }
        NamedExpr base = primary();
        if (ts_.accept("^")) {
            int sign = ts_.accept("-") ? -1 : 1;
            if (ts_.peek().kind != detail::Token::Number) ts_.fail("expected an integer exponent");
            const int e = sign * std::stoi(ts_.next().text);
            if (!is_scalar(base)) ts_.fail("only scalars can be raised to a power");
            RationalFunction v = scalar_value(base);
            if (e < 0 && v.is_zero()) ts_.fail("zero raised to a negative power");
            return {NamedTerm{v.pow(e), {}}};
        }
        return base;
    }

    NamedExpr primary() {
        const detail::Token& t = ts_.peek();
        if (t.kind == detail::Token::Number) {
            return {NamedTerm{RationalFunction(Rational(ts_.next().text)), {}}};
        }
        if (ts_.accept("(")) {
            NamedExpr r = expr();
            ts_.expect(")");
            return r;
        }
        if (t.kind != detail::Token::Ident) ts_.fail("expected a factor");
        if (t.text == "N") {
            ts_.next();
            return {NamedTerm{RationalFunction::N(), {}}};
        }
        if (t.text == "TR" || t.text == "T_R") {
            ts_.next();
            return {NamedTerm{RationalFunction::TR(), {}}};
        }
        auto it = atom_names().find(t.text);
        if (it == atom_names().end()) ts_.fail("unknown atom '" + t.text + "'");
        ts_.next();
        ts_.expect("(");
        NamedAtom a{it->second, {}};
        auto list = [&] {
            std::vector<std::string> v{ts_.ident()};
            while (ts_.accept(",")) v.push_back(ts_.ident());
            return v;
        };
        switch (a.kind) {
            case AtomKind::Delta:
            case AtomKind::GluonDelta: {
                a.names.push_back(ts_.ident());
                ts_.expect(",");
                a.names.push_back(ts_.ident());
                break;
            }
            case AtomKind::Gen: {
                a.names.push_back(ts_.ident());
                ts_.expect(";");
                a.names.push_back(ts_.ident());
                ts_.expect(",");
                a.names.push_back(ts_.ident());
                break;
            }
            case AtomKind::F:
            case AtomKind::D: {
                a.names = list();
                if (a.names.size() != 3) ts_.fail("three-gluon vertex needs three indices");
                break;
            }
            default: {
                auto up = list();
                ts_.expect(";");
                auto low = list();
                if (up.size() != low.size()) ts_.fail("bar needs as many upper as lower indices");
                if (static_cast<int>(up.size()) > limits().max_bar_width) throw ResourceError("bar wider than the cap");
                a.names = up;
                a.names.insert(a.names.end(), low.begin(), low.end());
                break;
            }
        }
        ts_.expect(")");
        return {NamedTerm{RationalFunction(1), {std::move(a)}}};
    }

    detail::TokenStream ts_;
};

struct Usage {
    int count = 0;
    SlotKind first;
    SlotKind second;
};

PortKind kind_of(SlotKind s) {
    switch (s) {
        case SlotKind::Upper: return PortKind::QuarkOut;
        case SlotKind::Lower: return PortKind::QuarkIn;
        default: return PortKind::Gluon;
    }
}

std::map<std::string, Usage> usage_of(const NamedTerm& t) {
    std::map<std::string, Usage> u;
    for (const auto& a : t.atoms) {
        Atom probe{a.kind, std::vector<int>(a.names.size(), 0)};
        for (std::size_t s = 0; s < a.names.size(); ++s) {
            Usage& x = u[a.names[s]];
            const SlotKind k = slot_kind(probe, s);
            if (x.count == 0) x.first = k;
            else x.second = k;
            if (++x.count > 2) throw ParseError("index '" + a.names[s] + "' used more than twice");
        }
    }
    for (const auto& [n, x] : u) {
        if (x.count != 2) continue;
        const bool ok = (x.first == SlotKind::Gluon && x.second == SlotKind::Gluon) ||
                        (x.first == SlotKind::Upper && x.second == SlotKind::Lower) ||
                        (x.first == SlotKind::Lower && x.second == SlotKind::Upper);
        if (!ok) throw ParseError("orientation clash on index '" + n + "'");
    }
    return u;
}

}  // namespace

TensorExpr TensorExpr::parse(std::string_view text) {
    Parser p(text);
    auto header = p.header();
    NamedExpr e = p.expr();
    p.finish();

    // External names and kinds, consistent across terms.
    std::optional<std::map<std::string, PortKind>> ext;
    std::vector<std::map<std::string, Usage>> usages;
    for (const auto& t : e) {
        usages.push_back(usage_of(t));
        std::map<std::string, PortKind> mine;
        for (const auto& [n, u] : usages.back())
            if (u.count == 1) mine[n] = kind_of(u.first);
        if (!ext) ext = mine;
        else if (*ext != mine) throw ParseError("terms have different external indices");
    }
    std::map<std::string, PortKind> externals = ext.value_or(std::map<std::string, PortKind>{});

    std::vector<Port> ports;
    int split;
    if (header) {
        for (auto& port : header->ports) {
            auto it = externals.find(port.name);
            if (it == externals.end()) {
                if (!e.empty()) throw ParseError("header port '" + port.name + "' is not a free index");
                if (header->unkinded.count(port.name)) throw ParseError("port '" + port.name + "' needs a kind");
            } else if (header->unkinded.count(port.name)) {
                port.kind = it->second;
            } else if (it->second != port.kind) {
                throw ParseError("port '" + port.name + "' is declared " + to_string(port.kind) + " but used as " +
                                 to_string(it->second));
            }
        }
        if (!e.empty() && header->ports.size() != externals.size()) throw ParseError("header does not list every free index");
        ports = header->ports;
        split = header->split.value_or(static_cast<int>(ports.size()));
        if (split < 0 || split > static_cast<int>(ports.size())) throw ParseError("split out of range");
    } else {
        for (const auto& [n, k] : externals) ports.push_back({n, k});
        split = static_cast<int>(ports.size());
    }

    std::map<std::string, int> port_label;
    for (std::size_t i = 0; i < ports.size(); ++i) port_label[ports[i].name] = static_cast<int>(i);
    TensorExpr r(ExternalSignature(ports, split));
    for (std::size_t ti = 0; ti < e.size(); ++ti) {
        const NamedTerm& t = e[ti];
        std::map<std::string, int> labels = port_label;
        int next = static_cast<int>(ports.size());
        std::vector<Atom> atoms;
        for (const auto& a : t.atoms) {
            Atom at{a.kind, {}};
            for (const auto& n : a.names) {
                auto it = labels.find(n);
                if (it == labels.end()) it = labels.emplace(n, next++).first;
                at.idx.push_back(it->second);
            }
            atoms.push_back(std::move(at));
        }
        r.add_term(std::move(atoms), t.c);
    }
    return r;
}

namespace {

std::string coefficient_prefix(const RationalFunction& c, bool bare) {
    if (c.is_constant()) {
        const Rational& q = c.constant();
        if (!bare && q == 1) return "";
        if (!bare && q == -1) return "-";
        return q.get_str() + (bare ? "" : "*");
    }
    return "(" + c.to_string() + ")" + (bare ? "" : "*");
}

}  // namespace

std::string TensorExpr::to_dsl() const {
    std::string s = "[ports: ";
    std::set<std::string> taken;
    for (int i = 0; i < sig_.size(); ++i) {
        if (i) s += ", ";
        s += sig_.port(i).name + ":" + to_string(sig_.port(i).kind);
        taken.insert(sig_.port(i).name);
    }
    s += "; split: " + std::to_string(sig_.split()) + "] ";
    if (terms_.empty()) return s + "0";
    bool first = true;
    for (const auto& [d, c] : terms_) {
        std::map<int, std::string> names;
        int counter = 0;
        auto name = [&](int l) {
            if (l < sig_.size()) return sig_.port(l).name;
            auto it = names.find(l);
            if (it != names.end()) return it->second;
            std::string n;
            do n = "x" + std::to_string(++counter);
            while (taken.count(n));
            names[l] = n;
            return n;
        };
        std::string atoms;
        for (std::size_t k = 0; k < d.atoms.size(); ++k) {
            const Atom& a = d.atoms[k];
            if (k) atoms += "*";
            atoms += atom_name(a.kind) + "(";
            for (std::size_t i = 0; i < a.idx.size(); ++i) {
                if (i) {
                    const bool semi = (a.kind == AtomKind::Gen && i == 1) ||
                                      ((a.kind == AtomKind::Sym || a.kind == AtomKind::Asym) && static_cast<int>(i) == a.width());
                    atoms += semi ? ";" : ",";
                }
                atoms += name(a.idx[i]);
            }
            atoms += ")";
        }
        std::string term = d.atoms.empty() ? coefficient_prefix(c, true) : coefficient_prefix(c, false) + atoms;
        if (first) {
            s += term;
        } else if (term[0] == '-') {
            s += " - " + term.substr(1);
        } else {
            s += " + " + term;
        }
        first = false;
    }
    return s;
}

std::string TensorExpr::to_json() const {
    nlohmann::ordered_json j;
    auto ports = nlohmann::ordered_json::array();
    for (const auto& p : sig_.ports()) ports.push_back({{"name", p.name}, {"kind", to_string(p.kind)}});
    j["signature"] = {{"ports", ports}, {"split", sig_.split()}};
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [d, c] : terms_) {
        auto atoms = nlohmann::ordered_json::array();
        for (const auto& a : d.atoms) atoms.push_back({{"kind", atom_name(a.kind)}, {"labels", a.idx}});
        terms.push_back({{"coefficient", c.to_string()}, {"atoms", atoms}});
    }
    j["terms"] = terms;
    j["dsl"] = to_dsl();
    return j.dump(2);
}

}  // namespace birdtrack
