#pragma once

// Birdtrack diagrams over quark (oriented) and gluon lines.
//
// A diagram is a product of atoms whose slots carry integer index labels.
// Labels 0..E-1 are the external ports of the signature (in port order);
// labels >= E are contracted and occur exactly twice. A quark label occurs
// once in an upper slot and once in a lower slot.

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "birdtrack/coeff.hpp"
#include "birdtrack/perm.hpp"

namespace birdtrack {

enum class PortKind {
    QuarkOut,  ///< upper index, V
    QuarkIn,   ///< lower index, V-bar
    Gluon,     ///< adjoint index, A
};

PortKind conjugate(PortKind k);
std::string to_string(PortKind k);

struct Port {
    std::string name;
    PortKind kind;
};

/// Ordered external ports. The first `split` ports form the output (left)
/// side when the tensor is read as a map, the rest the input (right) side.
class ExternalSignature {
public:
    ExternalSignature() = default;
    ExternalSignature(std::vector<Port> ports, int split);

    const std::vector<Port>& ports() const { return ports_; }
    int size() const { return static_cast<int>(ports_.size()); }
    int split() const { return split_; }
    const Port& port(int i) const { return ports_[static_cast<std::size_t>(i)]; }
    std::vector<PortKind> kinds() const;
    std::vector<int> left() const;
    std::vector<int> right() const;
    /// Same kinds in the same order (names and split are ignored).
    bool compatible(const ExternalSignature& o) const { return kinds() == o.kinds(); }
    std::string to_string() const;

private:
    std::vector<Port> ports_;
    int split_ = 0;
};

enum class AtomKind {
    Delta,       ///< delta(up, low)
    GluonDelta,  ///< gd(a, b)
    Gen,         ///< t(g; up, low)
    F,           ///< i f^{abc}, read anticlockwise
    D,           ///< d-vertex
    Sym,         ///< sym(up_1..up_k; low_1..low_k), normalised by 1/k!
    Asym,        ///< asym(up_1..up_k; low_1..low_k), normalised by 1/k!
};

struct Atom {
    AtomKind kind;
    std::vector<int> idx;  ///< bars: k upper labels followed by k lower labels

    int width() const { return static_cast<int>(idx.size()) / 2; }
    friend bool operator==(const Atom&, const Atom&) = default;
    friend auto operator<=>(const Atom&, const Atom&) = default;
};

enum class SlotKind { Upper, Lower, Gluon };
SlotKind slot_kind(const Atom& a, std::size_t slot);

/// Canonically labelled product of atoms.
struct Diagram {
    std::vector<Atom> atoms;
    int label_count = 0;  ///< externals plus contracted labels

    friend bool operator==(const Diagram&, const Diagram&) = default;
    friend auto operator<=>(const Diagram&, const Diagram&) = default;
};

/// Formal linear combination of diagrams sharing one signature.
class TensorExpr {
public:
    TensorExpr() = default;
    explicit TensorExpr(ExternalSignature sig) : sig_(std::move(sig)) {}
    /// Scalar (no ports).
    static TensorExpr scalar(const RationalFunction& c);

    const ExternalSignature& signature() const { return sig_; }
    const std::map<Diagram, RationalFunction>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Add coefficient * atoms; the atoms are validated and canonicalised.
    void add_term(std::vector<Atom> atoms, const RationalFunction& coefficient);

    TensorExpr& operator+=(const TensorExpr& o);
    TensorExpr& operator-=(const TensorExpr& o);
    friend TensorExpr operator+(TensorExpr a, const TensorExpr& b) { return a += b; }
    friend TensorExpr operator-(TensorExpr a, const TensorExpr& b) { return a -= b; }
    friend TensorExpr operator*(const RationalFunction& c, const TensorExpr& e);
    /// Term-wise equality; equal signatures kinds required.
    friend bool operator==(const TensorExpr& a, const TensorExpr& b);

    /// Same tensor with a different left/right split.
    TensorExpr with_split(int split) const;
    /// Same tensor with renamed ports.
    TensorExpr with_port_names(const std::vector<std::string>& names) const;
    /// Reorder ports: new port k is old port order[k].
    TensorExpr reordered(const std::vector<int>& order, int split) const;

    std::string to_dsl() const;
    std::string to_json() const;
    /// Inverse of to_dsl (also accepts hand-written DSL).
    static TensorExpr parse(std::string_view text);

private:
    ExternalSignature sig_;
    std::map<Diagram, RationalFunction> terms_;
};

/// Hermitian conjugate: arrows reversed, f(a,b,c) -> f(a,c,b), left and right swapped.
TensorExpr dagger(const TensorExpr& e);
/// Contract port pairs (port of a, port of b); remaining ports: a's then b's,
/// with the given split.
TensorExpr contract(const TensorExpr& a, const TensorExpr& b, const std::vector<std::pair<int, int>>& pairs,
                    int split);
/// a o b: a's right ports glued to b's left ports in order.
TensorExpr compose(const TensorExpr& a, const TensorExpr& b);
/// Ports [a.left, b.left, a.right, b.right].
TensorExpr tensor_product(const TensorExpr& a, const TensorExpr& b);
/// Join pairs of ports of one expression.
TensorExpr partial_trace(const TensorExpr& e, const std::vector<std::pair<int, int>>& pairs);
/// Full contraction of conj(a) with b, port by port (no normal form yet).
TensorExpr scalar_pairing(const TensorExpr& a, const TensorExpr& b);

/// Signature of n quark lines: outputs i1..in, inputs j1..jn, split n.
ExternalSignature quark_lines_signature(int n);
/// prod_k delta(i_{p(k)}, j_k).
TensorExpr from_permutation(const Permutation& p);
TensorExpr from_permutation(const AlgebraElement& a);
/// Identity map whose left ports have the given kinds (right ports conjugate).
TensorExpr identity_operator(const std::vector<PortKind>& left_kinds);

/// Canonical relabelling of a product of atoms. Returns the scalar factor
/// produced by closed delta loops and by sign-sorting f and asym arguments
/// (zero when the product vanishes by antisymmetry).
std::pair<Diagram, RationalFunction> canonicalise(std::vector<Atom> atoms, const std::vector<PortKind>& externals);

}  // namespace birdtrack
