#include "birdtrack/tensor.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "birdtrack/error.hpp"
#include "birdtrack/limits.hpp"

namespace birdtrack {

PortKind conjugate(PortKind k) {
    switch (k) {
        case PortKind::QuarkOut: return PortKind::QuarkIn;
        case PortKind::QuarkIn: return PortKind::QuarkOut;
        default: return PortKind::Gluon;
    }
}

std::string to_string(PortKind k) {
    switch (k) {
        case PortKind::QuarkOut: return "out";
        case PortKind::QuarkIn: return "in";
        default: return "glu";
    }
}

// ---- signature ------------------------------------------------------------

ExternalSignature::ExternalSignature(std::vector<Port> ports, int split) : ports_(std::move(ports)), split_(split) {
    if (split_ < 0 || split_ > size()) throw DomainError("signature split out of range");
}

std::vector<PortKind> ExternalSignature::kinds() const {
    std::vector<PortKind> k;
    for (const auto& p : ports_) k.push_back(p.kind);
    return k;
}

std::vector<int> ExternalSignature::left() const {
    std::vector<int> v;
    for (int i = 0; i < split_; ++i) v.push_back(i);
    return v;
}

std::vector<int> ExternalSignature::right() const {
    std::vector<int> v;
    for (int i = split_; i < size(); ++i) v.push_back(i);
    return v;
}

std::string ExternalSignature::to_string() const {
    std::string s = "(";
    for (int i = 0; i < size(); ++i) {
        if (i == split_) s += "| ";
        s += ports_[static_cast<std::size_t>(i)].name + ":" + birdtrack::to_string(ports_[static_cast<std::size_t>(i)].kind);
        if (i + 1 < size()) s += " ";
    }
    if (split_ == size()) s += " |";
    return s + ")";
}

namespace {

std::vector<Port> uniquified(std::vector<Port> ports) {
    std::set<std::string> used;
    for (auto& p : ports) {
        std::string base = p.name.empty() ? std::string("p") : p.name;
        std::string name = base;
        for (int k = 2; used.count(name); ++k) name = base + "_" + std::to_string(k);
        p.name = name;
        used.insert(name);
    }
    return ports;
}

}  // namespace

// ---- atoms ----------------------------------------------------------------

SlotKind slot_kind(const Atom& a, std::size_t slot) {
    switch (a.kind) {
        case AtomKind::Delta: return slot == 0 ? SlotKind::Upper : SlotKind::Lower;
        case AtomKind::Gen: return slot == 0 ? SlotKind::Gluon : (slot == 1 ? SlotKind::Upper : SlotKind::Lower);
        case AtomKind::Sym:
        case AtomKind::Asym: return slot < a.idx.size() / 2 ? SlotKind::Upper : SlotKind::Lower;
        default: return SlotKind::Gluon;
    }
}

namespace {

std::size_t arity(AtomKind k) {
    switch (k) {
        case AtomKind::Delta:
        case AtomKind::GluonDelta: return 2;
        case AtomKind::Gen:
        case AtomKind::F:
        case AtomKind::D: return 3;
        default: return 0;
    }
}

SlotKind port_slot(PortKind k) {
    switch (k) {
        case PortKind::QuarkOut: return SlotKind::Upper;
        case PortKind::QuarkIn: return SlotKind::Lower;
        default: return SlotKind::Gluon;
    }
}

struct Occ {
    int atom;
    int slot;
};

// Label occurrences; throws on malformed products.
std::map<int, std::vector<Occ>> occurrences(const std::vector<Atom>& atoms, const std::vector<PortKind>& ext) {
    std::map<int, std::vector<Occ>> occ;
    const int E = static_cast<int>(ext.size());
    for (std::size_t a = 0; a < atoms.size(); ++a) {
        const Atom& at = atoms[a];
        const std::size_t n = arity(at.kind);
        if (n ? at.idx.size() != n : (at.idx.size() < 2 || at.idx.size() % 2))
            throw DomainError("atom has the wrong number of indices");
        for (std::size_t s = 0; s < at.idx.size(); ++s) {
            if (at.idx[s] < 0) throw DomainError("negative index label");
            occ[at.idx[s]].push_back({static_cast<int>(a), static_cast<int>(s)});
        }
    }
    for (int e = 0; e < E; ++e) {
        auto it = occ.find(e);
        if (it == occ.end() || it->second.size() != 1)
            throw DomainError("external port " + std::to_string(e) + " must occur exactly once");
        const Occ& o = it->second[0];
        if (slot_kind(atoms[static_cast<std::size_t>(o.atom)], static_cast<std::size_t>(o.slot)) != port_slot(ext[static_cast<std::size_t>(e)]))
            throw DomainError("external port " + std::to_string(e) + " used with the wrong orientation");
    }
    for (const auto& [l, os] : occ) {
        if (l < E) continue;
        if (os.size() != 2) throw DomainError("contracted index must occur exactly twice");
        SlotKind k0 = slot_kind(atoms[static_cast<std::size_t>(os[0].atom)], static_cast<std::size_t>(os[0].slot));
        SlotKind k1 = slot_kind(atoms[static_cast<std::size_t>(os[1].atom)], static_cast<std::size_t>(os[1].slot));
        const bool ok = (k0 == SlotKind::Gluon && k1 == SlotKind::Gluon) ||
                        (k0 == SlotKind::Upper && k1 == SlotKind::Lower) || (k0 == SlotKind::Lower && k1 == SlotKind::Upper);
        if (!ok) throw DomainError("contracted index joins incompatible slots");
    }
    return occ;
}

// Sort in place, returning the permutation sign, or 0 on a repeated entry.
int sort_with_sign(std::vector<int>::iterator first, std::vector<int>::iterator last) {
    int sign = 1;
    const auto n = last - first;
    for (std::ptrdiff_t i = 0; i < n; ++i)
        for (std::ptrdiff_t j = 0; j + 1 < n - i; ++j)
            if (first[j] > first[j + 1]) {
                std::swap(first[j], first[j + 1]);
                sign = -sign;
            }
    for (std::ptrdiff_t j = 0; j + 1 < n; ++j)
        if (first[j] == first[j + 1]) return 0;
    return sign;
}

// Remove deltas and gluon deltas that touch a contracted label.
RationalFunction contract_deltas(std::vector<Atom>& atoms, int E) {
    RationalFunction factor(1);
    for (auto& a : atoms)
        if ((a.kind == AtomKind::Sym || a.kind == AtomKind::Asym) && a.idx.size() == 2) a.kind = AtomKind::Delta;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            Atom& a = atoms[i];
            if (a.kind != AtomKind::Delta && a.kind != AtomKind::GluonDelta) continue;
            int x = a.idx[0], y = a.idx[1];
            if (x < E && y < E) continue;
            if (x == y) {
                factor *= a.kind == AtomKind::Delta ? RationalFunction::N()
                                                    : RationalFunction::N() * RationalFunction::N() - RationalFunction(1);
            } else {
                const int dead = x >= E ? x : y;
                const int keep = dead == x ? y : x;
                for (std::size_t j = 0; j < atoms.size(); ++j) {
                    if (j == i) continue;
                    for (auto& l : atoms[j].idx)
                        if (l == dead) l = keep;
                }
            }
            atoms.erase(atoms.begin() + static_cast<std::ptrdiff_t>(i));
            changed = true;
            break;
        }
    }
    return factor;
}

class Labeller {
public:
    Labeller(const std::vector<Atom>& atoms, int E) : atoms_(atoms), E_(E), visited_(atoms.size(), false) {
        for (std::size_t a = 0; a < atoms.size(); ++a)
            for (std::size_t s = 0; s < atoms[a].idx.size(); ++s) occ_[atoms[a].idx[s]].push_back({static_cast<int>(a), static_cast<int>(s)});
        next_ = E;
    }

    void run() {
        for (int e = 0; e < E_; ++e) {
            const Occ& o = occ_.at(e)[0];
            if (!visited_[static_cast<std::size_t>(o.atom)]) traverse(o.atom, o.slot, labels_, visited_, next_, order_, nullptr);
        }
        for (;;) {
            std::vector<int> best_enc;
            int best_atom = -1, best_slot = 0;
            for (std::size_t a = 0; a < atoms_.size(); ++a) {
                if (visited_[a]) continue;
                const int starts = (atoms_[a].kind == AtomKind::F || atoms_[a].kind == AtomKind::D) ? 3 : 1;
                for (int s = 0; s < starts; ++s) {
                    auto labels = labels_;
                    auto visited = visited_;
                    int next = next_;
                    std::vector<int> order, enc;
                    traverse(static_cast<int>(a), s, labels, visited, next, order, &enc);
                    if (best_atom < 0 || enc < best_enc) {
                        best_enc = std::move(enc);
                        best_atom = static_cast<int>(a);
                        best_slot = s;
                    }
                }
            }
            if (best_atom < 0) break;
            traverse(best_atom, best_slot, labels_, visited_, next_, order_, nullptr);
        }
    }

    std::vector<Atom> relabelled() const {
        std::vector<Atom> out;
        for (int a : order_) {
            Atom at = atoms_[static_cast<std::size_t>(a)];
            for (auto& l : at.idx) l = l < E_ ? l : labels_.at(l);
            out.push_back(std::move(at));
        }
        return out;
    }
    int label_count() const { return next_; }

private:
    std::vector<int> slot_order(int atom, int entry) const {
        const Atom& a = atoms_[static_cast<std::size_t>(atom)];
        std::vector<int> s;
        if (a.kind == AtomKind::F || a.kind == AtomKind::D) {
            for (int k = 0; k < 3; ++k) s.push_back((entry + k) % 3);
        } else {
            for (std::size_t k = 0; k < a.idx.size(); ++k) s.push_back(static_cast<int>(k));
        }
        return s;
    }

    void traverse(int start, int entry, std::map<int, int>& labels, std::vector<bool>& visited, int& next,
                  std::vector<int>& order, std::vector<int>* enc) const {
        std::deque<std::pair<int, int>> queue{{start, entry}};
        visited[static_cast<std::size_t>(start)] = true;
        while (!queue.empty()) {
            auto [a, s0] = queue.front();
            queue.pop_front();
            order.push_back(a);
            const Atom& at = atoms_[static_cast<std::size_t>(a)];
            if (enc) enc->push_back(static_cast<int>(at.kind));
            for (int s : slot_order(a, s0)) {
                const int l = at.idx[static_cast<std::size_t>(s)];
                if (l < E_) {
                    if (enc) enc->push_back(l);
                    continue;
                }
                auto it = labels.find(l);
                if (it == labels.end()) it = labels.emplace(l, next++).first;
                if (enc) enc->push_back(it->second);
                for (const Occ& o : occ_.at(l)) {
                    if (o.atom == a && o.slot == s) continue;
                    if (!visited[static_cast<std::size_t>(o.atom)]) {
                        visited[static_cast<std::size_t>(o.atom)] = true;
                        queue.emplace_back(o.atom, o.slot);
                    }
                }
            }
        }
    }

    const std::vector<Atom>& atoms_;
    int E_;
    int next_ = 0;
    std::map<int, std::vector<Occ>> occ_;
    std::map<int, int> labels_;
    std::vector<bool> visited_;
    std::vector<int> order_;
};

}  // namespace

std::pair<Diagram, RationalFunction> canonicalise(std::vector<Atom> atoms, const std::vector<PortKind>& externals) {
    const int E = static_cast<int>(externals.size());
    occurrences(atoms, externals);
    RationalFunction factor = contract_deltas(atoms, E);
    Labeller lab(atoms, E);
    lab.run();
    Diagram d;
    d.atoms = lab.relabelled();
    d.label_count = lab.label_count();
    int sign = 1;
    for (auto& a : d.atoms) {
        switch (a.kind) {
            case AtomKind::F: sign *= sort_with_sign(a.idx.begin(), a.idx.end()); break;
            case AtomKind::D:
            case AtomKind::GluonDelta: std::sort(a.idx.begin(), a.idx.end()); break;
            case AtomKind::Sym: {
                const auto mid = a.idx.begin() + a.width();
                std::sort(a.idx.begin(), mid);
                std::sort(mid, a.idx.end());
                break;
            }
            case AtomKind::Asym: {
                const auto mid = a.idx.begin() + a.width();
                sign *= sort_with_sign(a.idx.begin(), mid);
                sign *= sort_with_sign(mid, a.idx.end());
                break;
            }
            default: break;
        }
        if (sign == 0) break;
    }
    if (sign == 0) return {Diagram{}, RationalFunction()};
    std::sort(d.atoms.begin(), d.atoms.end());
    return {std::move(d), factor * RationalFunction(sign)};
}

// ---- TensorExpr -----------------------------------------------------------

TensorExpr TensorExpr::scalar(const RationalFunction& c) {
    TensorExpr e;
    e.add_term({}, c);
    return e;
}

void TensorExpr::add_term(std::vector<Atom> atoms, const RationalFunction& coefficient) {
    if (coefficient.is_zero()) return;
    auto [d, f] = canonicalise(std::move(atoms), sig_.kinds());
    if (f.is_zero()) return;
    RationalFunction c = coefficient * f;
    auto [it, inserted] = terms_.try_emplace(std::move(d), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    if (terms_.size() > limits().max_terms) throw ResourceError("expression exceeds the term cap");
}

TensorExpr& TensorExpr::operator+=(const TensorExpr& o) {
    if (terms_.empty() && sig_.size() == 0 && o.sig_.size() > 0) sig_ = o.sig_;
    if (!sig_.compatible(o.sig_))
        throw DomainError("cannot add expressions with signatures " + sig_.to_string() + " and " + o.sig_.to_string());
    for (const auto& [d, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(d, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

TensorExpr& TensorExpr::operator-=(const TensorExpr& o) { return *this += RationalFunction(-1) * o; }

TensorExpr operator*(const RationalFunction& c, const TensorExpr& e) {
    TensorExpr r(e.sig_);
    if (c.is_zero()) return r;
    for (const auto& [d, v] : e.terms_) r.terms_.emplace(d, c * v);
    return r;
}

bool operator==(const TensorExpr& a, const TensorExpr& b) { return a.sig_.compatible(b.sig_) && a.terms_ == b.terms_; }

TensorExpr TensorExpr::with_split(int split) const {
    TensorExpr r(ExternalSignature(sig_.ports(), split));
    r.terms_ = terms_;
    return r;
}

TensorExpr TensorExpr::with_port_names(const std::vector<std::string>& names) const {
    if (static_cast<int>(names.size()) != sig_.size()) throw DomainError("wrong number of port names");
    std::vector<Port> ports = sig_.ports();
    for (std::size_t i = 0; i < ports.size(); ++i) ports[i].name = names[i];
    TensorExpr r(ExternalSignature(uniquified(std::move(ports)), sig_.split()));
    r.terms_ = terms_;
    return r;
}

TensorExpr TensorExpr::reordered(const std::vector<int>& order, int split) const {
    const int E = sig_.size();
    if (static_cast<int>(order.size()) != E) throw DomainError("reorder: wrong length");
    std::vector<int> newpos(static_cast<std::size_t>(E), -1);
    std::vector<Port> ports;
    for (int k = 0; k < E; ++k) {
        const int old = order[static_cast<std::size_t>(k)];
        if (old < 0 || old >= E || newpos[static_cast<std::size_t>(old)] >= 0) throw DomainError("reorder: not a permutation");
        newpos[static_cast<std::size_t>(old)] = k;
        ports.push_back(sig_.port(old));
    }
    TensorExpr r(ExternalSignature(std::move(ports), split));
    for (const auto& [d, c] : terms_) {
        std::vector<Atom> atoms = d.atoms;
        for (auto& a : atoms)
            for (auto& l : a.idx)
                if (l < E) l = newpos[static_cast<std::size_t>(l)];
        r.add_term(std::move(atoms), c);
    }
    return r;
}

// ---- operations -----------------------------------------------------------

namespace {

// Complex conjugate of the atoms, ports unchanged.
std::vector<Atom> conjugate_atoms(std::vector<Atom> atoms) {
    for (auto& a : atoms) {
        switch (a.kind) {
            case AtomKind::Delta: std::swap(a.idx[0], a.idx[1]); break;
            case AtomKind::Gen: std::swap(a.idx[1], a.idx[2]); break;
            case AtomKind::F: std::swap(a.idx[1], a.idx[2]); break;
            case AtomKind::Sym:
            case AtomKind::Asym: {
                const int k = a.width();
                std::rotate(a.idx.begin(), a.idx.begin() + k, a.idx.end());
                break;
            }
            default: break;
        }
    }
    return atoms;
}

TensorExpr conjugate_expr(const TensorExpr& e) {
    std::vector<Port> ports = e.signature().ports();
    for (auto& p : ports) p.kind = conjugate(p.kind);
    TensorExpr r(ExternalSignature(std::move(ports), e.signature().split()));
    for (const auto& [d, c] : e.terms()) r.add_term(conjugate_atoms(d.atoms), c);
    return r;
}

bool joinable(PortKind a, PortKind b) { return conjugate(a) == b; }

}  // namespace

TensorExpr dagger(const TensorExpr& e) {
    TensorExpr c = conjugate_expr(e);
    const auto& sig = e.signature();
    std::vector<int> order = sig.right();
    for (int l : sig.left()) order.push_back(l);
    return c.reordered(order, sig.size() - sig.split());
}

TensorExpr contract(const TensorExpr& a, const TensorExpr& b, const std::vector<std::pair<int, int>>& pairs, int split) {
    const int Ea = a.signature().size(), Eb = b.signature().size();
    std::vector<int> pa(static_cast<std::size_t>(Ea), -1), pb(static_cast<std::size_t>(Eb), -1);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        auto [x, y] = pairs[k];
        if (x < 0 || x >= Ea || y < 0 || y >= Eb) throw DomainError("contract: port out of range");
        if (pa[static_cast<std::size_t>(x)] >= 0 || pb[static_cast<std::size_t>(y)] >= 0) throw DomainError("contract: port used twice");
        if (!joinable(a.signature().port(x).kind, b.signature().port(y).kind))
            throw DomainError("contract: cannot join " + to_string(a.signature().port(x).kind) + " port '" +
                              a.signature().port(x).name + "' with " + to_string(b.signature().port(y).kind) + " port '" +
                              b.signature().port(y).name + "'");
        pa[static_cast<std::size_t>(x)] = static_cast<int>(k);
        pb[static_cast<std::size_t>(y)] = static_cast<int>(k);
    }
    std::vector<Port> ports;
    std::vector<int> map_a(static_cast<std::size_t>(Ea)), map_b(static_cast<std::size_t>(Eb));
    for (int i = 0; i < Ea; ++i)
        if (pa[static_cast<std::size_t>(i)] < 0) {
            map_a[static_cast<std::size_t>(i)] = static_cast<int>(ports.size());
            ports.push_back(a.signature().port(i));
        }
    for (int i = 0; i < Eb; ++i)
        if (pb[static_cast<std::size_t>(i)] < 0) {
            map_b[static_cast<std::size_t>(i)] = static_cast<int>(ports.size());
            ports.push_back(b.signature().port(i));
        }
    const int E = static_cast<int>(ports.size());
    for (int i = 0; i < Ea; ++i)
        if (pa[static_cast<std::size_t>(i)] >= 0) map_a[static_cast<std::size_t>(i)] = E + pa[static_cast<std::size_t>(i)];
    for (int i = 0; i < Eb; ++i)
        if (pb[static_cast<std::size_t>(i)] >= 0) map_b[static_cast<std::size_t>(i)] = E + pb[static_cast<std::size_t>(i)];
    const int base_a = E + static_cast<int>(pairs.size());
    TensorExpr r(ExternalSignature(uniquified(std::move(ports)), split));
    for (const auto& [da, ca] : a.terms()) {
        const int base_b = base_a + da.label_count;
        for (const auto& [db, cb] : b.terms()) {
            std::vector<Atom> atoms;
            atoms.reserve(da.atoms.size() + db.atoms.size());
            for (Atom at : da.atoms) {
                for (auto& l : at.idx) l = l < Ea ? map_a[static_cast<std::size_t>(l)] : base_a + l;
                atoms.push_back(std::move(at));
            }
            for (Atom at : db.atoms) {
                for (auto& l : at.idx) l = l < Eb ? map_b[static_cast<std::size_t>(l)] : base_b + l;
                atoms.push_back(std::move(at));
            }
            r.add_term(std::move(atoms), ca * cb);
        }
    }
    return r;
}

TensorExpr compose(const TensorExpr& a, const TensorExpr& b) {
    const auto ra = a.signature().right();
    const auto lb = b.signature().left();
    if (ra.size() != lb.size())
        throw DomainError("compose: " + std::to_string(ra.size()) + " input ports against " + std::to_string(lb.size()) +
                          " output ports");
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t k = 0; k < ra.size(); ++k) pairs.emplace_back(ra[k], lb[k]);
    return contract(a, b, pairs, a.signature().split());
}

TensorExpr tensor_product(const TensorExpr& a, const TensorExpr& b) {
    TensorExpr joined = contract(a, b, {}, a.signature().size() + b.signature().size());
    const int Ea = a.signature().size();
    std::vector<int> order;
    for (int l : a.signature().left()) order.push_back(l);
    for (int l : b.signature().left()) order.push_back(Ea + l);
    for (int r : a.signature().right()) order.push_back(r);
    for (int r : b.signature().right()) order.push_back(Ea + r);
    return joined.reordered(order, a.signature().split() + b.signature().split());
}

TensorExpr partial_trace(const TensorExpr& e, const std::vector<std::pair<int, int>>& pairs) {
    const auto& sig = e.signature();
    const int E = sig.size();
    std::vector<int> dummy(static_cast<std::size_t>(E), -1);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        auto [x, y] = pairs[k];
        if (x < 0 || y < 0 || x >= E || y >= E || x == y) throw DomainError("partial_trace: bad port pair");
        if (dummy[static_cast<std::size_t>(x)] >= 0 || dummy[static_cast<std::size_t>(y)] >= 0)
            throw DomainError("partial_trace: port used twice");
        if (!joinable(sig.port(x).kind, sig.port(y).kind))
            throw DomainError("partial_trace: cannot join " + to_string(sig.port(x).kind) + " with " + to_string(sig.port(y).kind));
        dummy[static_cast<std::size_t>(x)] = dummy[static_cast<std::size_t>(y)] = static_cast<int>(k);
    }
    std::vector<Port> ports;
    std::vector<int> map(static_cast<std::size_t>(E));
    int split = 0;
    for (int i = 0; i < E; ++i)
        if (dummy[static_cast<std::size_t>(i)] < 0) {
            if (i < sig.split()) ++split;
            map[static_cast<std::size_t>(i)] = static_cast<int>(ports.size());
            ports.push_back(sig.port(i));
        }
    const int En = static_cast<int>(ports.size());
    for (int i = 0; i < E; ++i)
        if (dummy[static_cast<std::size_t>(i)] >= 0) map[static_cast<std::size_t>(i)] = En + dummy[static_cast<std::size_t>(i)];
    const int base = En + static_cast<int>(pairs.size());
    TensorExpr r(ExternalSignature(std::move(ports), split));
    for (const auto& [d, c] : e.terms()) {
        std::vector<Atom> atoms = d.atoms;
        for (auto& a : atoms)
            for (auto& l : a.idx) l = l < E ? map[static_cast<std::size_t>(l)] : base + l;
        r.add_term(std::move(atoms), c);
    }
    return r;
}

TensorExpr scalar_pairing(const TensorExpr& a, const TensorExpr& b) {
    if (!a.signature().compatible(b.signature()))
        throw DomainError("inner product needs equal signatures: " + a.signature().to_string() + " vs " +
                          b.signature().to_string());
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < a.signature().size(); ++i) pairs.emplace_back(i, i);
    return contract(conjugate_expr(a), b, pairs, 0);
}

ExternalSignature quark_lines_signature(int n) {
    std::vector<Port> ports;
    for (int k = 1; k <= n; ++k) ports.push_back({"i" + std::to_string(k), PortKind::QuarkOut});
    for (int k = 1; k <= n; ++k) ports.push_back({"j" + std::to_string(k), PortKind::QuarkIn});
    return ExternalSignature(std::move(ports), n);
}

TensorExpr from_permutation(const Permutation& p) { return from_permutation(AlgebraElement(p)); }

TensorExpr from_permutation(const AlgebraElement& a) {
    const int n = a.degree();
    TensorExpr r(quark_lines_signature(n));
    for (const auto& [p, c] : a.terms()) {
        std::vector<Atom> atoms;
        for (int k = 0; k < n; ++k) atoms.push_back({AtomKind::Delta, {p(k), n + k}});
        r.add_term(std::move(atoms), c);
    }
    return r;
}

TensorExpr identity_operator(const std::vector<PortKind>& left_kinds) {
    const int n = static_cast<int>(left_kinds.size());
    std::vector<Port> ports;
    for (int k = 0; k < n; ++k) ports.push_back({"l" + std::to_string(k + 1), left_kinds[static_cast<std::size_t>(k)]});
    for (int k = 0; k < n; ++k) ports.push_back({"r" + std::to_string(k + 1), conjugate(left_kinds[static_cast<std::size_t>(k)])});
    TensorExpr r(ExternalSignature(std::move(ports), n));
    std::vector<Atom> atoms;
    for (int k = 0; k < n; ++k) {
        switch (left_kinds[static_cast<std::size_t>(k)]) {
            case PortKind::QuarkOut: atoms.push_back({AtomKind::Delta, {k, n + k}}); break;
            case PortKind::QuarkIn: atoms.push_back({AtomKind::Delta, {n + k, k}}); break;
            default: atoms.push_back({AtomKind::GluonDelta, {k, n + k}}); break;
        }
    }
    r.add_term(std::move(atoms), RationalFunction(1));
    return r;
}

}  // namespace birdtrack
