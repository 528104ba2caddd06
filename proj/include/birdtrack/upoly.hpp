#pragma once

// Dense univariate polynomials over an integral domain with gcd.
//
// UPoly<mpz_class> is Z[x]; nesting gives Z[y][x]. The gcd is the classical
// content / primitive pseudo-remainder sequence, which only needs exact
// division and gcd in the coefficient ring.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

#include "birdtrack/error.hpp"

namespace birdtrack::poly {

// ---- integer ring primitives -------------------------------------------

inline bool ring_is_zero(const mpz_class& a) { return sgn(a) == 0; }
inline int ring_sign(const mpz_class& a) { return sgn(a); }
inline mpz_class ring_gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}
inline mpz_class ring_exact_div(const mpz_class& a, const mpz_class& b) {
    if (sgn(b) == 0) throw DomainError("integer division by zero");
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw DomainError("inexact integer division");
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}
inline bool ring_divides(const mpz_class& b, const mpz_class& a) {
    return sgn(b) != 0 && mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t());
}
inline bool ring_is_one(const mpz_class& a) { return a == 1; }

template <class R>
class UPoly;

template <class R> bool ring_is_zero(const UPoly<R>& a);
template <class R> int ring_sign(const UPoly<R>& a);
template <class R> UPoly<R> ring_gcd(const UPoly<R>& a, const UPoly<R>& b);
template <class R> UPoly<R> ring_exact_div(const UPoly<R>& a, const UPoly<R>& b);
template <class R> bool ring_divides(const UPoly<R>& b, const UPoly<R>& a);
template <class R> bool ring_is_one(const UPoly<R>& a);

/// Polynomial sum_i coeffs[i] x^i with no trailing zero coefficients.
template <class R>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(R c) {
        if (!ring_is_zero(c)) coeffs_.push_back(std::move(c));
    }
    explicit UPoly(std::vector<R> c) : coeffs_(std::move(c)) { trim(); }

    /// c * x^k
    static UPoly monomial(R c, std::size_t k) {
        if (ring_is_zero(c)) return {};
        std::vector<R> v(k + 1, R{});
        v[k] = std::move(c);
        return UPoly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const R& lead() const { return coeffs_.back(); }
    const std::vector<R>& coeffs() const { return coeffs_; }
    R coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : R{}; }
    /// Constant term (zero for the zero polynomial).
    R constant() const { return coeffs_.empty() ? R{} : coeffs_[0]; }

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

    UPoly operator-() const {
        UPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    UPoly& operator+=(const UPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R{});
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
        trim();
        return *this;
    }
    UPoly& operator-=(const UPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R{});
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
        trim();
        return *this;
    }
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<R> v(a.coeffs_.size() + b.coeffs_.size() - 1, R{});
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (ring_is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
        return UPoly(std::move(v));
    }
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

    /// Multiply every coefficient by a scalar of the coefficient ring.
    UPoly scaled(const R& s) const {
        if (ring_is_zero(s)) return {};
        UPoly r = *this;
        for (auto& c : r.coeffs_) c = c * s;
        r.trim();
        return r;
    }
    /// Divide every coefficient exactly by a scalar.
    UPoly divided(const R& s) const {
        UPoly r = *this;
        for (auto& c : r.coeffs_) c = ring_exact_div(c, s);
        return r;
    }

    /// gcd of all coefficients, normalised to positive sign.
    R content() const {
        R g{};
        for (const auto& c : coeffs_) {
            g = ring_gcd(g, c);
            if (ring_is_one(g)) break;
        }
        return g;
    }
    /// Divide out the content; leading coefficient made positive.
    UPoly primitive() const {
        if (is_zero()) return {};
        UPoly r = divided(content());
        if (ring_sign(r.lead()) < 0) r = -r;
        return r;
    }

    /// lead(b)^k * a mod b, computed without leaving the coefficient ring.
    static UPoly pseudo_remainder(UPoly a, const UPoly& b) {
        if (b.is_zero()) throw DomainError("pseudo-remainder by zero polynomial");
        const R& lc = b.lead();
        while (!a.is_zero() && a.degree() >= b.degree()) {
            const std::size_t shift = static_cast<std::size_t>(a.degree() - b.degree());
            R la = a.lead();
            UPoly sub = monomial(std::move(la), shift) * b;
            a = a.scaled(lc) - sub;
        }
        return a;
    }

    /// Exact quotient a / b; throws DomainError if b does not divide a.
    static UPoly exact_quotient(UPoly a, const UPoly& b) {
        if (b.is_zero()) throw DomainError("polynomial division by zero");
        if (a.is_zero()) return {};
        if (a.degree() < b.degree()) throw DomainError("inexact polynomial division");
        std::vector<R> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), R{});
        while (!a.is_zero() && a.degree() >= b.degree()) {
            const std::size_t shift = static_cast<std::size_t>(a.degree() - b.degree());
            R t = ring_exact_div(a.lead(), b.lead());
            a -= monomial(t, shift) * b;
            q[shift] = std::move(t);
        }
        if (!a.is_zero()) throw DomainError("inexact polynomial division");
        return UPoly(std::move(q));
    }

    /// Non-throwing divisibility test: does b divide a?
    static bool divides(const UPoly& b, UPoly a) {
        if (b.is_zero()) return false;
        while (!a.is_zero() && a.degree() >= b.degree()) {
            if (!ring_divides(b.lead(), a.lead())) return false;
            const std::size_t shift = static_cast<std::size_t>(a.degree() - b.degree());
            a -= monomial(ring_exact_div(a.lead(), b.lead()), shift) * b;
        }
        return a.is_zero();
    }

    static UPoly gcd(const UPoly& a, const UPoly& b) {
        if (a.is_zero()) return b.primitive_with_content();
        if (b.is_zero()) return a.primitive_with_content();
        R c = ring_gcd(a.content(), b.content());
        UPoly p = a.primitive();
        UPoly q = b.primitive();
        if (p.degree() < q.degree()) std::swap(p, q);
        while (!q.is_zero()) {
            if (q.degree() == 0) {
                p = UPoly(ring_one());
                break;
            }
            UPoly r = pseudo_remainder(p, q);
            p = std::move(q);
            q = r.primitive();
        }
        return p.primitive().scaled(c);
    }

private:
    static R ring_one() {
        if constexpr (std::is_same_v<R, mpz_class>) {
            return mpz_class(1);
        } else {
            return R(R::ring_one());
        }
    }

    template <class> friend class UPoly;
    UPoly primitive_with_content() const {
        if (is_zero()) return {};
        return ring_sign(lead()) < 0 ? -*this : *this;
    }
    void trim() {
        while (!coeffs_.empty() && ring_is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<R> coeffs_;
};

template <class R> bool ring_is_zero(const UPoly<R>& a) { return a.is_zero(); }
template <class R> int ring_sign(const UPoly<R>& a) { return a.is_zero() ? 0 : ring_sign(a.lead()); }
template <class R> UPoly<R> ring_gcd(const UPoly<R>& a, const UPoly<R>& b) { return UPoly<R>::gcd(a, b); }
template <class R> UPoly<R> ring_exact_div(const UPoly<R>& a, const UPoly<R>& b) {
    if (b.is_constant()) return a.divided(b.constant());
    return UPoly<R>::exact_quotient(a, b);
}
template <class R> bool ring_divides(const UPoly<R>& b, const UPoly<R>& a) { return UPoly<R>::divides(b, a); }
template <class R> bool ring_is_one(const UPoly<R>& a) { return a.degree() == 0 && ring_is_one(a.lead()); }

}  // namespace birdtrack::poly
