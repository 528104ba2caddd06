#pragma once

// Epsilon-delta calculus for three-dimensional real vectors.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "birdtrack/coeff.hpp"
#include "birdtrack/tensor.hpp"

namespace birdtrack {

/// Rational combination of products of eps(i,j,k) and d3l(i,j) over
/// unoriented 3-valued indices. Diagrams reuse the tensor canonicaliser:
/// eps is stored as a fully antisymmetric three-vertex, d3l as an unoriented line.
class Eps3Expr {
public:
    Eps3Expr() = default;
    explicit Eps3Expr(std::vector<std::string> ports) : ports_(std::move(ports)) {}

    const std::vector<std::string>& ports() const { return ports_; }
    const std::map<Diagram, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Atoms use AtomKind::F for eps and AtomKind::GluonDelta for d3l.
    void add_term(std::vector<Atom> atoms, const Rational& c);

    Eps3Expr& operator+=(const Eps3Expr& o);
    friend Eps3Expr operator+(Eps3Expr a, const Eps3Expr& b) { return a += b; }
    friend Eps3Expr operator*(const Rational& c, const Eps3Expr& e);
    friend Eps3Expr operator-(Eps3Expr a, const Eps3Expr& b) { return a += Rational(-1) * b; }
    friend bool operator==(const Eps3Expr& a, const Eps3Expr& b) {
        return a.ports_.size() == b.ports_.size() && a.terms_ == b.terms_;
    }

    /// Grammar: term (('+'|'-') term)*, term := [rational '*'] atom ('*' atom)*,
    /// optional header "[ports: a, b, ...]". Without a header the external
    /// indices are ordered by name.
    static Eps3Expr parse(std::string_view text);
    std::string to_dsl() const;

private:
    std::vector<std::string> ports_;
    std::map<Diagram, Rational> terms_;
};

/// Eliminate every pair of eps sharing an index with eps*eps = dd - dd.
Eps3Expr reduce_eps(const Eps3Expr& e);
/// Additionally expand products of eps with only external indices by the determinant rule.
Eps3Expr expand_eps_pairs(const Eps3Expr& e);
/// Brute-force components over {0,1,2}^ports, row-major in port order.
std::vector<Rational> eval3(const Eps3Expr& e);

}  // namespace birdtrack
