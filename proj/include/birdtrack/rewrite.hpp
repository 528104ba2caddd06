#pragma once

// Reduction to trace-basis normal form, scalar products and the numeric oracle.

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "birdtrack/coeff.hpp"
#include "birdtrack/tensor.hpp"

namespace birdtrack {

/// One trace-basis wiring over external port numbers.
struct Wiring {
    /// Open quark strings: quark-out port, gluon ports along the line, quark-in port.
    std::vector<std::vector<int>> strings;
    /// Closed generator traces (length >= 3) at lexicographically minimal rotation.
    std::vector<std::vector<int>> traces;
    /// Gluon ports joined by gd (length-2 traces carry their T_R in the coefficient).
    std::vector<std::pair<int, int>> pairs;

    friend bool operator==(const Wiring&, const Wiring&) = default;
    friend auto operator<=>(const Wiring&, const Wiring&) = default;
};

class NormalForm {
public:
    NormalForm() = default;
    explicit NormalForm(ExternalSignature sig) : sig_(std::move(sig)) {}

    const ExternalSignature& signature() const { return sig_; }
    const std::map<Wiring, RationalFunction>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Coefficient of the empty wiring (the value of a closed diagram).
    RationalFunction scalar() const;
    void add(const Wiring& w, const RationalFunction& c);

    /// lambda with this = lambda * other, if such a scalar exists (other nonzero).
    std::optional<RationalFunction> ratio_to(const NormalForm& other) const;

    NormalForm& operator+=(const NormalForm& o);
    friend NormalForm operator*(const RationalFunction& c, const NormalForm& f);
    friend bool operator==(const NormalForm& a, const NormalForm& b) {
        return a.sig_.compatible(b.sig_) && a.terms_ == b.terms_;
    }

    TensorExpr to_expr() const;
    std::string to_dsl() const { return to_expr().to_dsl(); }
    std::string to_json() const;

private:
    ExternalSignature sig_;
    std::map<Wiring, RationalFunction> terms_;
};

/// f and d vertices replaced by generator loops:
/// i f^{abc} = (1/T_R)(tr(t^a t^b t^c) - tr(t^a t^c t^b)), d^{abc} = (1/T_R)(... + ...).
TensorExpr eliminate_fd(const TensorExpr& e);
/// sym/asym bars replaced by their signed permutation sums.
TensorExpr expand_bars(const TensorExpr& e);
/// Every internal gluon removed with the Fierz identity (input: no f, d or bars).
TensorExpr fierz_reduce(const TensorExpr& e);

NormalForm normal_form(const TensorExpr& e);
/// normal_form(compose(a, b)) from already reduced operands.
NormalForm compose(const NormalForm& a, const NormalForm& b);
/// <c1, c2>: conj(c1) contracted port by port with c2, fully reduced.
RationalFunction inner_product(const TensorExpr& c1, const TensorExpr& c2);
RationalFunction inner_product(const NormalForm& c1, const NormalForm& c2);

// ---- numeric oracle -------------------------------------------------------

using Complex = std::complex<long double>;

/// Dense tensor over external ports (quark ports run over N values, gluon ports over N^2-1).
struct NumericTensor {
    std::vector<int> dims;
    std::vector<Complex> data;  ///< row-major in port order
};

/// Explicit index contraction with generalised Gell-Mann generators normalised
/// to tr(t^a t^b) = T_R delta^{ab}. Requires 2 <= N <= 6.
NumericTensor numeric_eval(const TensorExpr& e, int n, const Rational& tr);

struct OracleReport {
    long double max_abs_deviation = 0;
    long double max_reference = 0;
    bool agree = true;
};

/// Compare the numeric value of e with its normal form evaluated at (N, T_R).
/// Agreement: |diff| <= 1e-12 or |diff| <= 1e-9 * max|value|.
OracleReport oracle_check(const TensorExpr& e, int n, const Rational& tr);
OracleReport compare(const NumericTensor& a, const NumericTensor& b);

}  // namespace birdtrack
