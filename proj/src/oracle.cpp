#include <algorithm>
#include <cmath>
#include <map>

#include "birdtrack/error.hpp"
#include "birdtrack/perm.hpp"
#include "birdtrack/rewrite.hpp"

namespace birdtrack {

namespace {

using Matrix = std::vector<std::vector<Complex>>;

struct Dense {
    std::vector<int> labels;
    std::vector<int> dims;
    std::vector<Complex> data;

    std::size_t size() const {
        std::size_t s = 1;
        for (int d : dims) s *= static_cast<std::size_t>(d);
        return s;
    }
};

// Strides for row-major layout.
std::vector<std::size_t> strides(const std::vector<int>& dims) {
    std::vector<std::size_t> s(dims.size(), 1);
    for (std::size_t i = dims.size(); i-- > 1;) s[i - 1] = s[i] * static_cast<std::size_t>(dims[i]);
    return s;
}

// Advance a multi-index; false when it wraps around.
bool advance(std::vector<int>& idx, const std::vector<int>& dims) {
    for (std::size_t i = idx.size(); i-- > 0;) {
        if (++idx[i] < dims[i]) return true;
        idx[i] = 0;
    }
    return false;
}

class Group {
public:
    Group(int n, long double tr) : n_(n) {
        const long double scale = std::sqrt(tr / 2.0L);
        auto zero = [&] { return Matrix(static_cast<std::size_t>(n), std::vector<Complex>(static_cast<std::size_t>(n))); };
        for (int j = 0; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Matrix s = zero(), a = zero();
                s[j][k] = s[k][j] = scale;
                a[j][k] = Complex(0, -scale);
                a[k][j] = Complex(0, scale);
                gens_.push_back(s);
                gens_.push_back(a);
            }
        for (int l = 1; l < n; ++l) {
            Matrix d = zero();
            const long double f = scale * std::sqrt(2.0L / (l * (l + 1.0L)));
            for (int j = 0; j < l; ++j) d[j][j] = f;
            d[l][l] = -f * l;
            gens_.push_back(d);
        }
        const int a = adjoint();
        fd_.resize(static_cast<std::size_t>(a * a * a));
        dd_.resize(fd_.size());
        for (int x = 0; x < a; ++x)
            for (int y = 0; y < a; ++y)
                for (int z = 0; z < a; ++z) {
                    const Complex xyz = trace3(x, y, z), xzy = trace3(x, z, y);
                    const std::size_t i = static_cast<std::size_t>((x * a + y) * a + z);
                    fd_[i] = (xyz - xzy) / tr;
                    dd_[i] = (xyz + xzy) / tr;
                }
    }

    int n() const { return n_; }
    int adjoint() const { return static_cast<int>(gens_.size()); }
    Complex gen(int g, int u, int l) const { return gens_[g][u][l]; }
    Complex f(int a, int b, int c) const { return fd_[static_cast<std::size_t>((a * adjoint() + b) * adjoint() + c)]; }
    Complex d(int a, int b, int c) const { return dd_[static_cast<std::size_t>((a * adjoint() + b) * adjoint() + c)]; }

private:
    Complex trace3(int a, int b, int c) const {
        Complex s = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                for (int k = 0; k < n_; ++k) s += gens_[a][i][j] * gens_[b][j][k] * gens_[c][k][i];
        return s;
    }

    int n_;
    std::vector<Matrix> gens_;
    std::vector<Complex> fd_, dd_;
};

Dense atom_tensor(const Atom& atom, const Group& g) {
    Dense t;
    t.labels = atom.idx;
    const int n = g.n(), a = g.adjoint();
    for (std::size_t s = 0; s < atom.idx.size(); ++s)
        t.dims.push_back(slot_kind(atom, s) == SlotKind::Gluon ? a : n);
    t.data.assign(t.size(), Complex(0));
    std::vector<int> idx(t.dims.size(), 0);
    std::size_t flat = 0;
    std::vector<Permutation> perms;
    long double inv_fact = 1;
    if (atom.kind == AtomKind::Sym || atom.kind == AtomKind::Asym) {
        perms = all_permutations(atom.width());
        inv_fact = 1.0L / static_cast<long double>(perms.size());
    }
    do {
        Complex v = 0;
        switch (atom.kind) {
        case AtomKind::Delta:
        case AtomKind::GluonDelta:
            v = idx[0] == idx[1] ? 1 : 0;
            break;
        case AtomKind::Gen:
            v = g.gen(idx[0], idx[1], idx[2]);
            break;
        case AtomKind::F:
            v = g.f(idx[0], idx[1], idx[2]);
            break;
        case AtomKind::D:
            v = g.d(idx[0], idx[1], idx[2]);
            break;
        case AtomKind::Sym:
        case AtomKind::Asym: {
            const int k = atom.width();
            long double s = 0;
            for (const auto& p : perms) {
                bool hit = true;
                for (int m = 0; m < k && hit; ++m) hit = idx[static_cast<std::size_t>(p(m))] == idx[static_cast<std::size_t>(k + m)];
                if (hit) s += atom.kind == AtomKind::Asym ? p.sign() : 1;
            }
            v = s * inv_fact;
            break;
        }
        }
        t.data[flat++] = v;
    } while (advance(idx, t.dims));
    return t;
}

// Sum over the diagonal of labels repeated inside one tensor.
Dense self_trace(Dense t) {
    for (;;) {
        std::size_t i = 0, j = 0;
        bool found = false;
        for (i = 0; i < t.labels.size() && !found; ++i)
            for (j = i + 1; j < t.labels.size(); ++j)
                if (t.labels[i] == t.labels[j]) {
                    found = true;
                    break;
                }
        if (!found) return t;
        --i;
        Dense r;
        for (std::size_t k = 0; k < t.labels.size(); ++k)
            if (k != i && k != j) {
                r.labels.push_back(t.labels[k]);
                r.dims.push_back(t.dims[k]);
            }
        r.data.assign(r.size(), Complex(0));
        const auto st = strides(t.dims);
        std::vector<int> idx(r.dims.size(), 0);
        std::size_t flat = 0;
        do {
            std::size_t base = 0, ri = 0;
            for (std::size_t k = 0; k < t.labels.size(); ++k)
                if (k != i && k != j) base += st[k] * static_cast<std::size_t>(idx[ri++]);
            Complex s = 0;
            for (int d = 0; d < t.dims[i]; ++d) s += t.data[base + (st[i] + st[j]) * static_cast<std::size_t>(d)];
            r.data[flat++] = s;
        } while (!r.dims.empty() && advance(idx, r.dims));
        t = std::move(r);
    }
}

Dense contract_pair(const Dense& a, const Dense& b) {
    std::vector<int> shared;
    for (int l : a.labels)
        if (std::find(b.labels.begin(), b.labels.end(), l) != b.labels.end()) shared.push_back(l);
    Dense r;
    for (std::size_t k = 0; k < a.labels.size(); ++k)
        if (std::find(shared.begin(), shared.end(), a.labels[k]) == shared.end()) {
            r.labels.push_back(a.labels[k]);
            r.dims.push_back(a.dims[k]);
        }
    for (std::size_t k = 0; k < b.labels.size(); ++k)
        if (std::find(shared.begin(), shared.end(), b.labels[k]) == shared.end()) {
            r.labels.push_back(b.labels[k]);
            r.dims.push_back(b.dims[k]);
        }
    std::vector<int> sdims;
    for (int l : shared) {
        auto it = std::find(a.labels.begin(), a.labels.end(), l);
        sdims.push_back(a.dims[static_cast<std::size_t>(it - a.labels.begin())]);
    }
    const auto sa = strides(a.dims), sb = strides(b.dims);
    // Offsets of each free and shared axis inside a and b.
    std::vector<std::size_t> ra(r.labels.size(), 0), rb(r.labels.size(), 0), ha(shared.size()), hb(shared.size());
    for (std::size_t k = 0; k < r.labels.size(); ++k) {
        auto ia = std::find(a.labels.begin(), a.labels.end(), r.labels[k]);
        if (ia != a.labels.end()) ra[k] = sa[static_cast<std::size_t>(ia - a.labels.begin())];
        auto ib = std::find(b.labels.begin(), b.labels.end(), r.labels[k]);
        if (ib != b.labels.end()) rb[k] = sb[static_cast<std::size_t>(ib - b.labels.begin())];
    }
    for (std::size_t k = 0; k < shared.size(); ++k) {
        ha[k] = sa[static_cast<std::size_t>(std::find(a.labels.begin(), a.labels.end(), shared[k]) - a.labels.begin())];
        hb[k] = sb[static_cast<std::size_t>(std::find(b.labels.begin(), b.labels.end(), shared[k]) - b.labels.begin())];
    }
    // Pre-enumerate the shared offsets.
    std::vector<std::pair<std::size_t, std::size_t>> inner;
    {
        std::vector<int> idx(shared.size(), 0);
        do {
            std::size_t oa = 0, ob = 0;
            for (std::size_t k = 0; k < shared.size(); ++k) {
                oa += ha[k] * static_cast<std::size_t>(idx[k]);
                ob += hb[k] * static_cast<std::size_t>(idx[k]);
            }
            inner.emplace_back(oa, ob);
        } while (!sdims.empty() && advance(idx, sdims));
    }
    r.data.assign(r.size(), Complex(0));
    std::vector<int> idx(r.dims.size(), 0);
    std::size_t flat = 0;
    do {
        std::size_t oa = 0, ob = 0;
        for (std::size_t k = 0; k < r.dims.size(); ++k) {
            oa += ra[k] * static_cast<std::size_t>(idx[k]);
            ob += rb[k] * static_cast<std::size_t>(idx[k]);
        }
        Complex s = 0;
        for (const auto& [ia, ib] : inner) s += a.data[oa + ia] * b.data[ob + ib];
        r.data[flat++] = s;
    } while (!r.dims.empty() && advance(idx, r.dims));
    return r;
}

Dense evaluate_diagram(const Diagram& d, const Group& g) {
    std::vector<Dense> fs;
    for (const auto& a : d.atoms) fs.push_back(self_trace(atom_tensor(a, g)));
    if (fs.empty()) return Dense{{}, {}, {Complex(1)}};
    while (fs.size() > 1) {
        // Cheapest connected pair first, otherwise an outer product of the two smallest.
        std::size_t bi = 0, bj = 1;
        long double best = -1;
        bool connected = false;
        for (std::size_t i = 0; i < fs.size(); ++i)
            for (std::size_t j = i + 1; j < fs.size(); ++j) {
                long double cost = 1;
                bool share = false;
                for (std::size_t k = 0; k < fs[i].labels.size(); ++k) {
                    cost *= fs[i].dims[k];
                    if (std::find(fs[j].labels.begin(), fs[j].labels.end(), fs[i].labels[k]) != fs[j].labels.end())
                        share = true;
                }
                for (int dj : fs[j].dims) cost *= dj;
                if (share > connected || (share == connected && (best < 0 || cost < best))) {
                    best = cost;
                    bi = i;
                    bj = j;
                    connected = share;
                }
            }
        Dense m = self_trace(contract_pair(fs[bi], fs[bj]));
        fs.erase(fs.begin() + static_cast<std::ptrdiff_t>(bj));
        fs[bi] = std::move(m);
    }
    return fs.front();
}

long double to_ld(const Rational& q) { return static_cast<long double>(q.get_d()); }

}  // namespace

NumericTensor numeric_eval(const TensorExpr& e, int n, const Rational& tr) {
    if (n < 2 || n > 6) throw DomainError("numeric oracle supports 2 <= N <= 6");
    const Group g(n, to_ld(tr));
    const auto& sig = e.signature();
    NumericTensor out;
    for (const auto& p : sig.ports()) out.dims.push_back(p.kind == PortKind::Gluon ? g.adjoint() : n);
    std::size_t total = 1;
    for (int d : out.dims) total *= static_cast<std::size_t>(d);
    out.data.assign(total, Complex(0));
    const auto st = strides(out.dims);
    for (const auto& [d, c] : e.terms()) {
        const long double coeff = to_ld(c.evaluate(Rational(n), tr));
        const Dense t = evaluate_diagram(d, g);
        // Map the result axes (labelled by port number) onto output strides.
        std::vector<std::size_t> map;
        for (int l : t.labels) map.push_back(st[static_cast<std::size_t>(l)]);
        std::vector<int> idx(t.dims.size(), 0);
        std::size_t flat = 0;
        do {
            std::size_t o = 0;
            for (std::size_t k = 0; k < idx.size(); ++k) o += map[k] * static_cast<std::size_t>(idx[k]);
            out.data[o] += coeff * t.data[flat++];
        } while (!t.dims.empty() && advance(idx, t.dims));
    }
    return out;
}

OracleReport compare(const NumericTensor& a, const NumericTensor& b) {
    if (a.dims != b.dims) throw DomainError("numeric tensors have different shapes");
    OracleReport r;
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        r.max_abs_deviation = std::max(r.max_abs_deviation, std::abs(a.data[i] - b.data[i]));
        r.max_reference = std::max({r.max_reference, std::abs(a.data[i]), std::abs(b.data[i])});
    }
    r.agree = r.max_abs_deviation <= 1e-12L || r.max_abs_deviation <= 1e-9L * r.max_reference;
    return r;
}

OracleReport oracle_check(const TensorExpr& e, int n, const Rational& tr) {
    return compare(numeric_eval(e, n, tr), numeric_eval(normal_form(e).to_expr(), n, tr));
}

}  // namespace birdtrack
