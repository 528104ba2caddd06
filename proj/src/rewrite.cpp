#include "birdtrack/rewrite.hpp"

#include <algorithm>
#include <functional>

#include "json.hpp"

#include "birdtrack/error.hpp"
#include "birdtrack/limits.hpp"
#include "birdtrack/perm.hpp"

namespace birdtrack {

namespace {

// Monomial weight c * N^n * T_R^tr * (N^2-1)^adj.
struct Weight {
    Rational c{1};
    int n = 0;
    int tr = 0;
    int adj = 0;
};

struct Work {
    std::vector<Atom> atoms;
    Weight w;
    int next_label;
};

using Sink = std::function<void(Work&&)>;

std::vector<int> fresh(Work& w, int k) {
    std::vector<int> v;
    for (int i = 0; i < k; ++i) v.push_back(w.next_label++);
    return v;
}

// ---- stage 1: f/d vertices and bars --------------------------------------

// Replace the first f/d atom; returns false if there is none.
bool expand_one_fd(Work&& w, const Sink& out) {
    auto it = std::find_if(w.atoms.begin(), w.atoms.end(),
                           [](const Atom& a) { return a.kind == AtomKind::F || a.kind == AtomKind::D; });
    if (it == w.atoms.end()) return false;
    const Atom v = *it;
    w.atoms.erase(it);
    auto xyz = fresh(w, 3);
    const int a = v.idx[0], b = v.idx[1], c = v.idx[2];
    const int x = xyz[0], y = xyz[1], z = xyz[2];
    Work first = w;
    first.w.tr -= 1;
    first.atoms.push_back({AtomKind::Gen, {a, x, y}});
    first.atoms.push_back({AtomKind::Gen, {b, y, z}});
    first.atoms.push_back({AtomKind::Gen, {c, z, x}});
    Work second = std::move(w);
    second.w.tr -= 1;
    if (v.kind == AtomKind::F) second.w.c = -second.w.c;
    second.atoms.push_back({AtomKind::Gen, {a, x, y}});
    second.atoms.push_back({AtomKind::Gen, {c, y, z}});
    second.atoms.push_back({AtomKind::Gen, {b, z, x}});
    out(std::move(first));
    out(std::move(second));
    return true;
}

bool expand_one_bar(Work&& w, const Sink& out) {
    auto it = std::find_if(w.atoms.begin(), w.atoms.end(),
                           [](const Atom& a) { return a.kind == AtomKind::Sym || a.kind == AtomKind::Asym; });
    if (it == w.atoms.end()) return false;
    const Atom bar = *it;
    w.atoms.erase(it);
    const int k = bar.width();
    if (k > limits().max_bar_width) throw ResourceError("bar of width " + std::to_string(k) + " exceeds the cap");
    Integer fact(1);
    for (int i = 2; i <= k; ++i) fact *= i;
    for (const auto& p : all_permutations(k)) {
        Work t = w;
        t.w.c /= Rational(fact);
        if (bar.kind == AtomKind::Asym && p.sign() < 0) t.w.c = -t.w.c;
        for (int m = 0; m < k; ++m)
            t.atoms.push_back({AtomKind::Delta, {bar.idx[static_cast<std::size_t>(p(m))], bar.idx[static_cast<std::size_t>(k + m)]}});
        out(std::move(t));
    }
    return true;
}

// ---- stage 2: deltas and Fierz --------------------------------------------

void contract_deltas(Work& w, int E) {
    for (std::size_t i = 0; i < w.atoms.size();) {
        Atom& a = w.atoms[i];
        if (a.kind != AtomKind::Delta && a.kind != AtomKind::GluonDelta) {
            ++i;
            continue;
        }
        const int x = a.idx[0], y = a.idx[1];
        if (x < E && y < E) {
            ++i;
            continue;
        }
        if (x == y) {
            if (a.kind == AtomKind::Delta) ++w.w.n;
            else ++w.w.adj;
        } else {
            const int dead = x >= E ? x : y;
            const int keep = dead == x ? y : x;
            for (std::size_t j = 0; j < w.atoms.size(); ++j) {
                if (j == i) continue;
                for (auto& l : w.atoms[j].idx)
                    if (l == dead) l = keep;
            }
        }
        w.atoms.erase(w.atoms.begin() + static_cast<std::ptrdiff_t>(i));
        i = 0;
    }
}

// Smallest contracted gluon label carried by a generator, or -1.
int internal_gluon(const Work& w, int E) {
    int best = -1;
    for (const auto& a : w.atoms)
        if (a.kind == AtomKind::Gen && a.idx[0] >= E && (best < 0 || a.idx[0] < best)) best = a.idx[0];
    return best;
}

void fierz_step(Work&& w, int g, const Sink& out) {
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < w.atoms.size(); ++i)
        if (w.atoms[i].kind == AtomKind::Gen && w.atoms[i].idx[0] == g) pos.push_back(i);
    if (pos.size() != 2) throw DomainError("internal gluon is not joined to two generators");
    const int i = w.atoms[pos[0]].idx[1], j = w.atoms[pos[0]].idx[2];
    const int k = w.atoms[pos[1]].idx[1], l = w.atoms[pos[1]].idx[2];
    w.atoms.erase(w.atoms.begin() + static_cast<std::ptrdiff_t>(pos[1]));
    w.atoms.erase(w.atoms.begin() + static_cast<std::ptrdiff_t>(pos[0]));
    // t(g;i,j) t(g;k,l) = T_R [delta(i,l) delta(k,j) - (1/N) delta(i,j) delta(k,l)]
    Work cross = w;
    cross.w.tr += 1;
    cross.atoms.push_back({AtomKind::Delta, {i, l}});
    cross.atoms.push_back({AtomKind::Delta, {k, j}});
    Work split = std::move(w);
    split.w.tr += 1;
    split.w.n -= 1;
    split.w.c = -split.w.c;
    split.atoms.push_back({AtomKind::Delta, {i, j}});
    split.atoms.push_back({AtomKind::Delta, {k, l}});
    out(std::move(cross));
    out(std::move(split));
}

// ---- stage 3: read off the wiring ----------------------------------------

std::vector<int> min_rotation(const std::vector<int>& v) {
    std::vector<int> best = v;
    for (std::size_t r = 1; r < v.size(); ++r) {
        std::vector<int> c(v.begin() + static_cast<std::ptrdiff_t>(r), v.end());
        c.insert(c.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(r));
        if (c < best) best = std::move(c);
    }
    return best;
}

// Returns false when a single-generator trace kills the term.
bool read_wiring(Work& w, const std::vector<PortKind>& ext, Wiring& out) {
    const int E = static_cast<int>(ext.size());
    std::map<int, std::size_t> by_upper;
    std::vector<bool> used(w.atoms.size(), false);
    for (std::size_t i = 0; i < w.atoms.size(); ++i) {
        const Atom& a = w.atoms[i];
        if (a.kind == AtomKind::Gen) by_upper[a.idx[1]] = i;
        else if (a.kind == AtomKind::Delta) by_upper[a.idx[0]] = i;
        else if (a.kind == AtomKind::GluonDelta) {
            out.pairs.emplace_back(std::min(a.idx[0], a.idx[1]), std::max(a.idx[0], a.idx[1]));
            used[i] = true;
        } else {
            throw DomainError("unexpected atom while reading a wiring");
        }
    }
    for (int p = 0; p < E; ++p) {
        if (ext[static_cast<std::size_t>(p)] != PortKind::QuarkOut) continue;
        std::vector<int> s{p};
        int cur = p;
        for (;;) {
            auto it = by_upper.find(cur);
            if (it == by_upper.end()) throw DomainError("open quark line without an end");
            const Atom& a = w.atoms[it->second];
            used[it->second] = true;
            if (a.kind == AtomKind::Delta) {
                s.push_back(a.idx[1]);
                break;
            }
            s.push_back(a.idx[0]);
            cur = a.idx[2];
            if (cur < E) {
                s.push_back(cur);
                break;
            }
        }
        out.strings.push_back(std::move(s));
    }
    for (std::size_t i = 0; i < w.atoms.size(); ++i) {
        if (used[i]) continue;
        std::vector<int> t;
        std::size_t cur = i;
        while (!used[cur]) {
            used[cur] = true;
            const Atom& a = w.atoms[cur];
            if (a.kind != AtomKind::Gen) throw DomainError("closed loop through a non-generator");
            t.push_back(a.idx[0]);
            cur = by_upper.at(a.idx[2]);
        }
        if (t.size() == 1) return false;
        if (t.size() == 2) {
            w.w.tr += 1;
            out.pairs.emplace_back(std::min(t[0], t[1]), std::max(t[0], t[1]));
        } else {
            out.traces.push_back(min_rotation(t));
        }
    }
    std::sort(out.strings.begin(), out.strings.end());
    std::sort(out.traces.begin(), out.traces.end());
    std::sort(out.pairs.begin(), out.pairs.end());
    return true;
}

LaurentPoly weight_poly(const Weight& w) {
    static const LaurentPoly adj = [] {
        LaurentPoly p = LaurentPoly::monomial(Rational(1), 2, 0);
        p += LaurentPoly::constant(Rational(-1));
        return p;
    }();
    LaurentPoly r = LaurentPoly::monomial(w.c, w.n, w.tr);
    for (int k = 0; k < w.adj; ++k) r = r * adj;
    return r;
}

class Reducer {
public:
    explicit Reducer(const std::vector<PortKind>& ext) : ext_(ext), E_(static_cast<int>(ext.size())) {}

    std::map<Wiring, LaurentPoly> run(const Diagram& d) {
        out_.clear();
        produced_ = 0;
        stage1(Work{d.atoms, Weight{}, d.label_count});
        return std::move(out_);
    }

private:
    void bump() {
        if (++produced_ > limits().max_terms) throw ResourceError("reduction exceeds the term cap");
    }

    void stage1(Work&& w) {
        bump();
        Sink again = [this](Work&& t) { stage1(std::move(t)); };
        if (expand_one_fd(std::move(w), again)) return;
        if (expand_one_bar(std::move(w), again)) return;
        stage2(std::move(w));
    }

    void stage2(Work&& w) {
        bump();
        contract_deltas(w, E_);
        const int g = internal_gluon(w, E_);
        if (g < 0) {
            Wiring wiring;
            if (!read_wiring(w, ext_, wiring)) return;
            auto [it, inserted] = out_.try_emplace(std::move(wiring), weight_poly(w.w));
            if (!inserted) it->second += weight_poly(w.w);
            return;
        }
        fierz_step(std::move(w), g, [this](Work&& t) { stage2(std::move(t)); });
    }

    std::vector<PortKind> ext_;
    int E_;
    std::map<Wiring, LaurentPoly> out_;
    std::size_t produced_ = 0;
};

}  // namespace

// ---- NormalForm -----------------------------------------------------------

RationalFunction NormalForm::scalar() const {
    auto it = terms_.find(Wiring{});
    return it == terms_.end() ? RationalFunction() : it->second;
}

void NormalForm::add(const Wiring& w, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::optional<RationalFunction> NormalForm::ratio_to(const NormalForm& other) const {
    if (other.is_zero() || !sig_.compatible(other.sig_) || terms_.size() != other.terms_.size()) return std::nullopt;
    if (terms_.empty()) return std::nullopt;
    const auto& [w0, c0] = *other.terms_.begin();
    auto it = terms_.find(w0);
    if (it == terms_.end()) return std::nullopt;
    const RationalFunction lambda = it->second / c0;
    for (const auto& [w, c] : other.terms_) {
        auto jt = terms_.find(w);
        if (jt == terms_.end() || jt->second != lambda * c) return std::nullopt;
    }
    return lambda;
}

NormalForm& NormalForm::operator+=(const NormalForm& o) {
    if (terms_.empty() && sig_.size() == 0) sig_ = o.sig_;
    if (!sig_.compatible(o.sig_)) throw DomainError("cannot add normal forms with different signatures");
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

NormalForm operator*(const RationalFunction& c, const NormalForm& f) {
    NormalForm r(f.sig_);
    if (c.is_zero()) return r;
    for (const auto& [w, v] : f.terms_) r.terms_.emplace(w, c * v);
    return r;
}

TensorExpr NormalForm::to_expr() const {
    TensorExpr e(sig_);
    const int E = sig_.size();
    for (const auto& [w, c] : terms_) {
        int next = E;
        std::vector<Atom> atoms;
        for (const auto& s : w.strings) {
            const int k = static_cast<int>(s.size()) - 2;
            if (k == 0) {
                atoms.push_back({AtomKind::Delta, {s[0], s[1]}});
                continue;
            }
            int up = s[0];
            for (int m = 0; m < k; ++m) {
                const int low = m + 1 == k ? s.back() : next++;
                atoms.push_back({AtomKind::Gen, {s[static_cast<std::size_t>(m + 1)], up, low}});
                up = low;
            }
        }
        for (const auto& t : w.traces) {
            const int first = next;
            const int k = static_cast<int>(t.size());
            next += k;
            for (int m = 0; m < k; ++m)
                atoms.push_back({AtomKind::Gen, {t[static_cast<std::size_t>(m)], first + m, first + (m + 1) % k}});
        }
        for (const auto& [a, b] : w.pairs) atoms.push_back({AtomKind::GluonDelta, {a, b}});
        e.add_term(std::move(atoms), c);
    }
    return e;
}

std::string NormalForm::to_json() const {
    nlohmann::ordered_json j;
    auto name = [&](int p) { return sig_.port(p).name; };
    auto ports = nlohmann::ordered_json::array();
    for (const auto& p : sig_.ports()) ports.push_back({{"name", p.name}, {"kind", to_string(p.kind)}});
    j["signature"] = {{"ports", ports}, {"split", sig_.split()}};
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [w, c] : terms_) {
        nlohmann::ordered_json wj;
        auto strings = nlohmann::ordered_json::array();
        for (const auto& s : w.strings) {
            nlohmann::ordered_json sj;
            sj["out"] = name(s.front());
            auto g = nlohmann::ordered_json::array();
            for (std::size_t k = 1; k + 1 < s.size(); ++k) g.push_back(name(s[k]));
            sj["gluons"] = g;
            sj["in"] = name(s.back());
            strings.push_back(sj);
        }
        auto traces = nlohmann::ordered_json::array();
        for (const auto& t : w.traces) {
            auto g = nlohmann::ordered_json::array();
            for (int p : t) g.push_back(name(p));
            traces.push_back(g);
        }
        auto pairs = nlohmann::ordered_json::array();
        for (const auto& [a, b] : w.pairs) pairs.push_back({name(a), name(b)});
        wj["strings"] = strings;
        wj["traces"] = traces;
        wj["pairs"] = pairs;
        terms.push_back({{"wiring", wj}, {"coefficient", c.to_string()}});
    }
    j["terms"] = terms;
    j["dsl"] = to_dsl();
    return j.dump(2);
}

// ---- staged rewrites ------------------------------------------------------

namespace {

template <class Stage>
TensorExpr apply_stage(const TensorExpr& e, Stage stage) {
    TensorExpr r(e.signature());
    for (const auto& [d, c] : e.terms()) {
        std::vector<Work> done;
        std::function<void(Work&&)> sink = [&](Work&& w) {
            if (!stage(std::move(w), sink)) done.push_back(std::move(w));
            if (done.size() > limits().max_terms) throw ResourceError("rewrite exceeds the term cap");
        };
        sink(Work{d.atoms, Weight{}, d.label_count});
        for (auto& w : done) {
            contract_deltas(w, e.signature().size());
            r.add_term(std::move(w.atoms), c * weight_poly(w.w).to_rational_function());
        }
    }
    return r;
}

}  // namespace

TensorExpr eliminate_fd(const TensorExpr& e) {
    return apply_stage(e, [](Work&& w, const Sink& s) { return expand_one_fd(std::move(w), s); });
}

TensorExpr expand_bars(const TensorExpr& e) {
    return apply_stage(e, [](Work&& w, const Sink& s) { return expand_one_bar(std::move(w), s); });
}

TensorExpr fierz_reduce(const TensorExpr& e) {
    const int E = e.signature().size();
    for (const auto& [d, c] : e.terms())
        for (const auto& a : d.atoms)
            if (a.kind != AtomKind::Delta && a.kind != AtomKind::GluonDelta && a.kind != AtomKind::Gen)
                throw DomainError("fierz_reduce needs f, d and bars eliminated first");
    return apply_stage(e, [E](Work&& w, const Sink& s) {
        contract_deltas(w, E);
        const int g = internal_gluon(w, E);
        if (g < 0) return false;
        fierz_step(std::move(w), g, s);
        return true;
    });
}

NormalForm normal_form(const TensorExpr& e) {
    NormalForm nf(e.signature());
    Reducer red(e.signature().kinds());
    for (const auto& [d, c] : e.terms())
        for (const auto& [w, lp] : red.run(d)) nf.add(w, c * lp.to_rational_function());
    return nf;
}

NormalForm compose(const NormalForm& a, const NormalForm& b) { return normal_form(compose(a.to_expr(), b.to_expr())); }

RationalFunction inner_product(const TensorExpr& c1, const TensorExpr& c2) {
    return normal_form(scalar_pairing(c1, c2)).scalar();
}

RationalFunction inner_product(const NormalForm& c1, const NormalForm& c2) {
    return inner_product(c1.to_expr(), c2.to_expr());
}

}  // namespace birdtrack
