#pragma once

// Exact coefficients: the field Q(N, T_R) of rational functions.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "birdtrack/upoly.hpp"

namespace birdtrack {

using Integer = mpz_class;
using Rational = mpq_class;

/// Polynomial in T_R with integer coefficients.
using PolyT = poly::UPoly<Integer>;
/// Polynomial in N whose coefficients are polynomials in T_R.
using Poly2 = poly::UPoly<PolyT>;

/// Element of Q(N, T_R) held in canonical form.
///
/// Constants are kept as a reduced mpq; anything else as num/den in Z[T_R][N]
/// with gcd(num, den) = 1 and the graded-lex leading coefficient of den > 0.
/// Two equal values therefore always have identical representations.
class RationalFunction {
public:
    RationalFunction() = default;
    RationalFunction(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(Rational v) : q_(std::move(v)) { q_.canonicalize(); }  // NOLINT
    RationalFunction(const Poly2& num, const Poly2& den);

    static RationalFunction N();
    static RationalFunction TR();
    static RationalFunction from_poly(const Poly2& p) { return {p, Poly2(PolyT(Integer(1)))}; }

    bool is_zero() const { return !poly_ && sgn(q_) == 0; }
    bool is_one() const { return !poly_ && q_ == 1; }
    bool is_constant() const { return !poly_; }
    /// Rational value when the function is a constant.
    const Rational& constant() const;

    Poly2 numerator() const;
    Poly2 denominator() const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    /// Throws DomainError when b is zero.
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
    RationalFunction pow(int e) const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b);

    /// Exact value at (N, T_R) = (n, tr); throws DomainError at a pole.
    Rational evaluate(const Rational& n, const Rational& tr) const;
    /// Value at N = n with T_R left symbolic.
    RationalFunction substitute_n(const Rational& n) const;

    /// Fully parenthesised text, e.g. "(T_R*(N^2-1))/N".
    std::string to_string() const;
    /// Inverse of to_string; also accepts "TR" for T_R. Throws ParseError.
    static RationalFunction parse(std::string_view text);

    /// Total order on representations; used for deterministic sorting only.
    friend bool representation_less(const RationalFunction& a, const RationalFunction& b);

private:
    struct Frac {
        Poly2 num;
        Poly2 den;
    };
    void normalise();

    Rational q_{0};
    std::optional<Frac> poly_;
};

inline std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

/// Graded-lex (N before T_R) leading coefficient of a polynomial.
Integer graded_lead_coefficient(const Poly2& p);
/// Text of a polynomial in N and T_R, terms in graded-lex descending order.
std::string poly_to_string(const Poly2& p);

/// Sparse Laurent polynomial in N (any integer exponent) and T_R (any integer
/// exponent) with rational coefficients. Accumulator for reductions where
/// every step multiplies by monomials such as T_R, 1/N or N^2 - 1.
class LaurentPoly {
public:
    using Key = std::pair<int, int>;  // (exponent of N, exponent of T_R)

    LaurentPoly() = default;
    static LaurentPoly constant(Rational c);
    static LaurentPoly monomial(Rational c, int n_exp, int tr_exp);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Rational>& terms() const { return terms_; }

    LaurentPoly& operator+=(const LaurentPoly& o);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly scaled(const Rational& c, int n_exp, int tr_exp) const;

    RationalFunction to_rational_function() const;

private:
    std::map<Key, Rational> terms_;
};

}  // namespace birdtrack
