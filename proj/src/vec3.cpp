#include "birdtrack/vec3.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "birdtrack/error.hpp"
#include "birdtrack/perm.hpp"
#include "lexer.hpp"

namespace birdtrack {

namespace {

bool is_eps(const Atom& a) { return a.kind == AtomKind::F; }

// d3l lines touching a summed index are absorbed; closed loops give 3.
void contract_lines(std::vector<Atom>& atoms, int E, Rational& c) {
    for (std::size_t i = 0; i < atoms.size();) {
        if (atoms[i].kind != AtomKind::GluonDelta || (atoms[i].idx[0] < E && atoms[i].idx[1] < E)) {
            ++i;
            continue;
        }
        const int x = atoms[i].idx[0], y = atoms[i].idx[1];
        if (x == y) {
            c *= 3;
        } else {
            const int dead = x >= E ? x : y;
            const int keep = dead == x ? y : x;
            for (std::size_t j = 0; j < atoms.size(); ++j)
                if (j != i)
                    for (auto& l : atoms[j].idx)
                        if (l == dead) l = keep;
        }
        atoms.erase(atoms.begin() + static_cast<std::ptrdiff_t>(i));
        i = 0;
    }
}

int eps_value(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0;
    return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

}  // namespace

void Eps3Expr::add_term(std::vector<Atom> atoms, const Rational& c) {
    for (const auto& a : atoms)
        if (a.kind != AtomKind::F && a.kind != AtomKind::GluonDelta) throw DomainError("vec3 terms hold eps and d3l only");
    const int E = static_cast<int>(ports_.size());
    Rational coeff = c;
    contract_lines(atoms, E, coeff);
    if (coeff == 0) return;
    auto [d, factor] = canonicalise(std::move(atoms), std::vector<PortKind>(ports_.size(), PortKind::Gluon));
    if (factor.is_zero()) return;
    coeff *= factor.constant();
    auto [it, inserted] = terms_.try_emplace(std::move(d), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Eps3Expr& Eps3Expr::operator+=(const Eps3Expr& o) {
    if (terms_.empty() && ports_.empty()) ports_ = o.ports_;
    if (ports_.size() != o.ports_.size()) throw DomainError("vec3 expressions with different port counts");
    for (const auto& [d, c] : o.terms_) add_term(d.atoms, c);
    return *this;
}

Eps3Expr operator*(const Rational& c, const Eps3Expr& e) {
    Eps3Expr r(e.ports_);
    if (c == 0) return r;
    for (const auto& [d, v] : e.terms_) r.terms_.emplace(d, c * v);
    return r;
}

// ---- DSL ------------------------------------------------------------------

Eps3Expr Eps3Expr::parse(std::string_view text) {
    detail::TokenStream ts(text);
    std::vector<std::string> header;
    bool has_header = false;
    if (ts.accept("[")) {
        has_header = true;
        if (ts.ident() != "ports") ts.fail("expected 'ports'");
        ts.expect(":");
        if (!ts.accept("]")) {
            do header.push_back(ts.ident());
            while (ts.accept(","));
            ts.expect("]");
        }
    }
    struct Term {
        Rational c{1};
        std::vector<std::pair<AtomKind, std::vector<std::string>>> atoms;
    };
    std::vector<Term> terms;
    auto number = [&]() {
        if (ts.peek().kind != detail::Token::Number) ts.fail("expected a number");
        Rational q(ts.next().text);
        if (ts.accept("/")) {
            if (ts.peek().kind != detail::Token::Number) ts.fail("expected a denominator");
            Rational d(ts.next().text);
            if (d == 0) ts.fail("division by zero");
            q /= d;
        }
        return q;
    };
    auto term = [&](Rational sign) {
        Term t;
        t.c = sign;
        if (ts.peek().kind == detail::Token::Number) {
            t.c *= number();
            if (!ts.accept("*")) {
                terms.push_back(t);
                return;
            }
        }
        do {
            const std::string name = ts.ident();
            AtomKind k;
            std::size_t arity;
            if (name == "eps") {
                k = AtomKind::F;
                arity = 3;
            } else if (name == "d3l") {
                k = AtomKind::GluonDelta;
                arity = 2;
            } else {
                ts.fail("unknown atom '" + name + "'");
            }
            ts.expect("(");
            std::vector<std::string> args;
            for (std::size_t i = 0; i < arity; ++i) {
                if (i) ts.expect(",");
                args.push_back(ts.ident());
            }
            ts.expect(")");
            t.atoms.emplace_back(k, std::move(args));
        } while (ts.accept("*"));
        terms.push_back(std::move(t));
    };
    term(ts.accept("-") ? Rational(-1) : Rational(1));
    for (;;) {
        if (ts.accept("+")) term(Rational(1));
        else if (ts.accept("-")) term(Rational(-1));
        else break;
    }
    if (!ts.at_end()) ts.fail("unexpected trailing input");

    std::set<std::string> externals;
    bool first = true;
    for (const auto& t : terms) {
        std::map<std::string, int> uses;
        for (const auto& a : t.atoms)
            for (const auto& n : a.second) ++uses[n];
        std::set<std::string> ext;
        for (const auto& [n, k] : uses) {
            if (k > 2) throw ParseError("index '" + n + "' used more than twice");
            if (k == 1) ext.insert(n);
        }
        if (first) externals = ext;
        else if (ext != externals) throw ParseError("terms have different external indices");
        first = false;
    }
    std::vector<std::string> ports = header;
    if (has_header) {
        if (std::set<std::string>(header.begin(), header.end()) != externals || header.size() != externals.size())
            throw ParseError("header ports do not match the external indices");
    } else {
        ports.assign(externals.begin(), externals.end());
    }
    Eps3Expr r(ports);
    for (const auto& t : terms) {
        std::map<std::string, int> label;
        for (std::size_t i = 0; i < ports.size(); ++i) label[ports[i]] = static_cast<int>(i);
        int next = static_cast<int>(ports.size());
        std::vector<Atom> atoms;
        for (const auto& [k, names] : t.atoms) {
            Atom a{k, {}};
            for (const auto& n : names) {
                auto it = label.find(n);
                if (it == label.end()) it = label.emplace(n, next++).first;
                a.idx.push_back(it->second);
            }
            atoms.push_back(std::move(a));
        }
        r.add_term(std::move(atoms), t.c);
    }
    return r;
}

std::string Eps3Expr::to_dsl() const {
    std::string s = "[ports: ";
    for (std::size_t i = 0; i < ports_.size(); ++i) s += (i ? ", " : "") + ports_[i];
    s += "] ";
    if (terms_.empty()) return s + "0";
    std::set<std::string> taken(ports_.begin(), ports_.end());
    bool first = true;
    for (const auto& [d, c] : terms_) {
        Rational mag = abs(c);
        s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        first = false;
        if (d.atoms.empty()) {
            s += mag.get_str();
            continue;
        }
        if (mag != 1) s += mag.get_str() + "*";
        std::map<int, std::string> names;
        int counter = 0;
        auto name = [&](int l) {
            if (l < static_cast<int>(ports_.size())) return ports_[static_cast<std::size_t>(l)];
            auto it = names.find(l);
            if (it != names.end()) return it->second;
            std::string n;
            do n = "x" + std::to_string(++counter);
            while (taken.count(n));
            return names[l] = n;
        };
        for (std::size_t k = 0; k < d.atoms.size(); ++k) {
            const Atom& a = d.atoms[k];
            if (k) s += "*";
            s += is_eps(a) ? "eps(" : "d3l(";
            for (std::size_t i = 0; i < a.idx.size(); ++i) s += (i ? "," : "") + name(a.idx[i]);
            s += ")";
        }
    }
    return s;
}

// ---- reduction ------------------------------------------------------------

namespace {

using Emit = std::function<void(std::vector<Atom>, Rational)>;

void reduce_term(std::vector<Atom> atoms, Rational c, int E, const Emit& emit) {
    contract_lines(atoms, E, c);
    for (std::size_t p = 0; p < atoms.size(); ++p) {
        if (!is_eps(atoms[p])) continue;
        for (std::size_t q = p + 1; q < atoms.size(); ++q) {
            if (!is_eps(atoms[q])) continue;
            Atom a = atoms[p], b = atoms[q];
            int shared = -1;
            for (int l : a.idx)
                if (l >= E && std::find(b.idx.begin(), b.idx.end(), l) != b.idx.end()) shared = l;
            if (shared < 0) continue;
            // Rotate the shared index to the last slot of both (cyclic, no sign).
            while (a.idx[2] != shared) std::rotate(a.idx.begin(), a.idx.begin() + 1, a.idx.end());
            while (b.idx[2] != shared) std::rotate(b.idx.begin(), b.idx.begin() + 1, b.idx.end());
            std::vector<Atom> rest;
            for (std::size_t k = 0; k < atoms.size(); ++k)
                if (k != p && k != q) rest.push_back(atoms[k]);
            // eps_{a b m} eps_{c d m} = d_{ac} d_{bd} - d_{ad} d_{bc}
            auto direct = rest;
            direct.push_back({AtomKind::GluonDelta, {a.idx[0], b.idx[0]}});
            direct.push_back({AtomKind::GluonDelta, {a.idx[1], b.idx[1]}});
            auto crossed = std::move(rest);
            crossed.push_back({AtomKind::GluonDelta, {a.idx[0], b.idx[1]}});
            crossed.push_back({AtomKind::GluonDelta, {a.idx[1], b.idx[0]}});
            reduce_term(std::move(direct), c, E, emit);
            reduce_term(std::move(crossed), -c, E, emit);
            return;
        }
    }
    emit(std::move(atoms), c);
}

}  // namespace

Eps3Expr reduce_eps(const Eps3Expr& e) {
    Eps3Expr r(e.ports());
    const int E = static_cast<int>(e.ports().size());
    for (const auto& [d, c] : e.terms())
        reduce_term(d.atoms, c, E, [&](std::vector<Atom> a, Rational v) { r.add_term(std::move(a), v); });
    return r;
}

Eps3Expr expand_eps_pairs(const Eps3Expr& e) {
    Eps3Expr reduced = reduce_eps(e);
    Eps3Expr r(e.ports());
    const auto perms = all_permutations(3);
    std::function<void(std::vector<Atom>, Rational)> expand = [&](std::vector<Atom> atoms, Rational c) {
        std::vector<std::size_t> eps;
        for (std::size_t k = 0; k < atoms.size(); ++k)
            if (is_eps(atoms[k])) eps.push_back(k);
        if (eps.size() < 2) {
            r.add_term(std::move(atoms), c);
            return;
        }
        const Atom a = atoms[eps[0]], b = atoms[eps[1]];
        atoms.erase(atoms.begin() + static_cast<std::ptrdiff_t>(eps[1]));
        atoms.erase(atoms.begin() + static_cast<std::ptrdiff_t>(eps[0]));
        // eps_{abc} eps_{def} = det of the 3x3 matrix of deltas
        for (const auto& p : perms) {
            auto t = atoms;
            for (int m = 0; m < 3; ++m)
                t.push_back({AtomKind::GluonDelta, {a.idx[static_cast<std::size_t>(m)], b.idx[static_cast<std::size_t>(p(m))]}});
            expand(std::move(t), p.sign() > 0 ? c : -c);
        }
    };
    for (const auto& [d, c] : reduced.terms()) expand(d.atoms, c);
    return r;
}

std::vector<Rational> eval3(const Eps3Expr& e) {
    const int E = static_cast<int>(e.ports().size());
    std::size_t total = 1;
    for (int i = 0; i < E; ++i) total *= 3;
    std::vector<Rational> out(total);
    for (const auto& [d, c] : e.terms()) {
        const int L = std::max(d.label_count, E);
        std::vector<int> v(static_cast<std::size_t>(L), 0);
        for (;;) {
            long long prod = 1;
            for (const auto& a : d.atoms) {
                const auto& x = a.idx;
                if (is_eps(a)) prod *= eps_value(v[static_cast<std::size_t>(x[0])], v[static_cast<std::size_t>(x[1])], v[static_cast<std::size_t>(x[2])]);
                else prod *= v[static_cast<std::size_t>(x[0])] == v[static_cast<std::size_t>(x[1])] ? 1 : 0;
                if (prod == 0) break;
            }
            if (prod != 0) {
                std::size_t flat = 0;
                for (int i = 0; i < E; ++i) flat = flat * 3 + static_cast<std::size_t>(v[static_cast<std::size_t>(i)]);
                out[flat] += c * Rational(static_cast<long>(prod));
            }
            int k = L - 1;
            while (k >= 0 && ++v[static_cast<std::size_t>(k)] == 3) v[static_cast<std::size_t>(k--)] = 0;
            if (k < 0) break;
        }
    }
    return out;
}

}  // namespace birdtrack
