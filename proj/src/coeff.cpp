#include "birdtrack/coeff.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "birdtrack/error.hpp"

namespace birdtrack {

namespace {

Poly2 constant_poly(const Integer& c) { return Poly2(PolyT(c)); }

bool is_constant_poly(const Poly2& p) { return p.is_constant() && p.constant().is_constant(); }

Integer constant_value(const Poly2& p) { return p.constant().constant(); }

/// Dense builder: coefficient grid indexed [N exponent][T_R exponent].
Poly2 from_grid(const std::vector<std::vector<Integer>>& grid) {
    std::vector<PolyT> outer;
    outer.reserve(grid.size());
    for (const auto& row : grid) outer.emplace_back(row);
    return Poly2(std::move(outer));
}

void grid_add(std::vector<std::vector<Integer>>& grid, std::size_t i, std::size_t j, const Integer& c) {
    if (grid.size() <= i) grid.resize(i + 1);
    if (grid[i].size() <= j) grid[i].resize(j + 1, Integer(0));
    grid[i][j] += c;
}

struct Term {
    int n_exp;
    int t_exp;
    Integer coeff;
};

/// Terms in graded-lex descending order (total degree, then N exponent).
std::vector<Term> sorted_terms(const Poly2& p) {
    std::vector<Term> out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const auto& inner = p.coeffs()[i].coeffs();
        for (std::size_t j = 0; j < inner.size(); ++j)
            if (sgn(inner[j]) != 0) out.push_back({static_cast<int>(i), static_cast<int>(j), inner[j]});
    }
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
        if (a.n_exp + a.t_exp != b.n_exp + b.t_exp) return a.n_exp + a.t_exp > b.n_exp + b.t_exp;
        return a.n_exp > b.n_exp;
    });
    return out;
}

std::string monomial_text(int n_exp, int t_exp) {
    std::string s;
    auto append = [&s](const char* var, int e) {
        if (e == 0) return;
        if (!s.empty()) s += "*";
        s += var;
        if (e != 1) s += "^" + std::to_string(e);
    };
    append("N", n_exp);
    append("T_R", t_exp);
    return s;
}

std::string terms_text(const std::vector<Term>& terms, int n_shift, int t_shift) {
    std::string s;
    bool first = true;
    for (const auto& t : terms) {
        Integer c = t.coeff;
        const std::string mono = monomial_text(t.n_exp - n_shift, t.t_exp - t_shift);
        if (first) {
            if (sgn(c) < 0) {
                s += "-";
                c = -c;
            }
        } else {
            s += sgn(c) < 0 ? "-" : "+";
            if (sgn(c) < 0) c = -c;
        }
        first = false;
        if (mono.empty()) {
            s += c.get_str();
        } else if (c == 1) {
            s += mono;
        } else {
            s += c.get_str() + "*" + mono;
        }
    }
    return s;
}

Rational eval_poly(const Poly2& p, const Rational& n, const Rational& tr) {
    Rational acc(0);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        Rational inner(0);
        for (auto jt = it->coeffs().rbegin(); jt != it->coeffs().rend(); ++jt) inner = inner * tr + Rational(*jt);
        acc = acc * n + inner;
    }
    return acc;
}

// ---- coefficient text parser -------------------------------------------

class CoeffParser {
public:
    explicit CoeffParser(std::string_view s) : s_(s) {}

    RationalFunction parse_all() {
        RationalFunction r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("coefficient: " + what + " at offset " + std::to_string(pos_) + " in '" +
                         std::string(s_) + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    RationalFunction expr() {
        RationalFunction acc = term();
        for (;;) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else return acc;
        }
    }
    RationalFunction term() {
        RationalFunction acc = unary();
        for (;;) {
            if (eat('*')) {
                acc *= unary();
            } else if (eat('/')) {
                RationalFunction d = unary();
                if (d.is_zero()) fail("division by zero");
                acc /= d;
            } else {
                return acc;
            }
        }
    }
    RationalFunction unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    RationalFunction power() {
        RationalFunction base = primary();
        if (eat('^')) {
            bool neg = eat('-');
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected integer exponent");
            int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
            if (neg && base.is_zero()) fail("zero to a negative power");
            return base.pow(neg ? -e : e);
        }
        return base;
    }
    RationalFunction primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RationalFunction r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return RationalFunction(Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
        }
        if (s_.substr(pos_, 3) == "T_R") {
            pos_ += 3;
            return RationalFunction::TR();
        }
        if (s_.substr(pos_, 2) == "TR") {
            pos_ += 2;
            return RationalFunction::TR();
        }
        if (c == 'N') {
            ++pos_;
            return RationalFunction::N();
        }
        fail("unexpected character");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Integer graded_lead_coefficient(const Poly2& p) {
    auto terms = sorted_terms(p);
    return terms.empty() ? Integer(0) : terms.front().coeff;
}

std::string poly_to_string(const Poly2& p) {
    auto terms = sorted_terms(p);
    if (terms.empty()) return "0";
    if (terms.size() == 1) return terms_text(terms, 0, 0);
    int n_min = terms.front().n_exp;
    int t_min = terms.front().t_exp;
    for (const auto& t : terms) {
        n_min = std::min(n_min, t.n_exp);
        t_min = std::min(t_min, t.t_exp);
    }
    if (n_min == 0 && t_min == 0) return terms_text(terms, 0, 0);
    return monomial_text(n_min, t_min) + "*(" + terms_text(terms, n_min, t_min) + ")";
}

RationalFunction::RationalFunction(const Poly2& num, const Poly2& den) : poly_(Frac{num, den}) { normalise(); }

void RationalFunction::normalise() {
    if (!poly_) {
        q_.canonicalize();
        return;
    }
    auto& [num, den] = *poly_;
    if (den.is_zero()) throw DomainError("rational function with zero denominator");
    if (num.is_zero()) {
        poly_.reset();
        q_ = 0;
        return;
    }
    if (!is_constant_poly(den) || !is_constant_poly(num)) {
        Poly2 g = Poly2::gcd(num, den);
        if (!(g.degree() == 0 && g.constant().degree() == 0 && g.constant().constant() == 1)) {
            num = poly::ring_exact_div(num, g);
            den = poly::ring_exact_div(den, g);
        }
    }
    if (sgn(graded_lead_coefficient(den)) < 0) {
        num = -num;
        den = -den;
    }
    if (is_constant_poly(num) && is_constant_poly(den)) {
        q_ = Rational(constant_value(num), constant_value(den));
        q_.canonicalize();
        poly_.reset();
    }
}

RationalFunction RationalFunction::N() { return from_poly(Poly2::monomial(PolyT(Integer(1)), 1)); }

RationalFunction RationalFunction::TR() { return from_poly(Poly2(PolyT::monomial(Integer(1), 1))); }

const Rational& RationalFunction::constant() const {
    if (poly_) throw DomainError("rational function is not a constant: " + to_string());
    return q_;
}

Poly2 RationalFunction::numerator() const { return poly_ ? poly_->num : constant_poly(q_.get_num()); }

Poly2 RationalFunction::denominator() const { return poly_ ? poly_->den : constant_poly(q_.get_den()); }

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    if (r.poly_) r.poly_->num = -r.poly_->num;
    else r.q_ = -r.q_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (!a.poly_ && !b.poly_) return RationalFunction(Rational(a.q_ + b.q_));
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Poly2 an = a.numerator(), ad = a.denominator(), bn = b.numerator(), bd = b.denominator();
    if (ad == bd) return {an + bn, ad};
    return {an * bd + bn * ad, ad * bd};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (!a.poly_ && !b.poly_) return RationalFunction(Rational(a.q_ * b.q_));
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    Poly2 an = a.numerator(), ad = a.denominator(), bn = b.numerator(), bd = b.denominator();
    // Cross-cancel before multiplying; both inputs are already reduced.
    Poly2 g1 = Poly2::gcd(an, bd);
    Poly2 g2 = Poly2::gcd(bn, ad);
    an = poly::ring_exact_div(an, g1);
    bd = poly::ring_exact_div(bd, g1);
    bn = poly::ring_exact_div(bn, g2);
    ad = poly::ring_exact_div(ad, g2);
    return {an * bn, ad * bd};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DomainError("division by the zero rational function");
    if (!b.poly_) return a * RationalFunction(Rational(1 / b.q_));
    return a * RationalFunction(b.denominator(), b.numerator());
}

RationalFunction RationalFunction::pow(int e) const {
    if (e < 0) return (RationalFunction(1) / *this).pow(-e);
    RationalFunction result(1), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
    if (a.poly_.has_value() != b.poly_.has_value()) return false;
    if (!a.poly_) return a.q_ == b.q_;
    return a.poly_->num == b.poly_->num && a.poly_->den == b.poly_->den;
}

Rational RationalFunction::evaluate(const Rational& n, const Rational& tr) const {
    if (!poly_) return q_;
    Rational d = eval_poly(poly_->den, n, tr);
    if (sgn(d) == 0) throw DomainError("pole of " + to_string() + " at N=" + n.get_str() + ", T_R=" + tr.get_str());
    Rational r = eval_poly(poly_->num, n, tr) / d;
    r.canonicalize();
    return r;
}

RationalFunction RationalFunction::substitute_n(const Rational& n) const {
    if (!poly_) return *this;
    auto eval_n = [&n](const Poly2& p) {
        RationalFunction acc;
        for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
            acc = acc * RationalFunction(n) + RationalFunction::from_poly(Poly2(*it));
        return acc;
    };
    RationalFunction d = eval_n(poly_->den);
    if (d.is_zero()) throw DomainError("pole of " + to_string() + " at N=" + n.get_str());
    return eval_n(poly_->num) / d;
}

std::string RationalFunction::to_string() const {
    if (!poly_) return q_.get_str();
    const std::string num = poly_to_string(poly_->num);
    if (is_constant_poly(poly_->den) && constant_value(poly_->den) == 1) return num;
    const std::string den = poly_to_string(poly_->den);
    const bool den_atomic = sorted_terms(poly_->den).size() == 1 && den.find('*') == std::string::npos;
    return "(" + num + ")/" + (den_atomic ? den : "(" + den + ")");
}

RationalFunction RationalFunction::parse(std::string_view text) { return CoeffParser(text).parse_all(); }

bool representation_less(const RationalFunction& a, const RationalFunction& b) {
    return a.to_string() < b.to_string();
}

// ---- LaurentPoly --------------------------------------------------------

LaurentPoly LaurentPoly::constant(Rational c) { return monomial(std::move(c), 0, 0); }

LaurentPoly LaurentPoly::monomial(Rational c, int n_exp, int tr_exp) {
    LaurentPoly p;
    if (sgn(c) != 0) p.terms_.emplace(Key{n_exp, tr_exp}, std::move(c));
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [k, v] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(k, v);
        if (!inserted) {
            it->second += v;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ka, va] : a.terms_)
        for (const auto& [kb, vb] : b.terms_)
            r += LaurentPoly::monomial(va * vb, ka.first + kb.first, ka.second + kb.second);
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c, int n_exp, int tr_exp) const {
    LaurentPoly r;
    if (sgn(c) == 0) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(Key{k.first + n_exp, k.second + tr_exp}, v * c);
    return r;
}

RationalFunction LaurentPoly::to_rational_function() const {
    if (terms_.empty()) return {};
    int n_min = 0, t_min = 0;
    Integer lcm_den(1);
    for (const auto& [k, v] : terms_) {
        n_min = std::min(n_min, k.first);
        t_min = std::min(t_min, k.second);
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v.get_den_mpz_t());
    }
    if (n_min == 0 && t_min == 0 && terms_.size() == 1 && terms_.begin()->first == Key{0, 0})
        return RationalFunction(terms_.begin()->second);
    std::vector<std::vector<Integer>> num_grid;
    for (const auto& [k, v] : terms_) {
        Integer c = v.get_num() * (lcm_den / v.get_den());
        grid_add(num_grid, static_cast<std::size_t>(k.first - n_min), static_cast<std::size_t>(k.second - t_min), c);
    }
    std::vector<std::vector<Integer>> den_grid;
    grid_add(den_grid, static_cast<std::size_t>(-n_min), static_cast<std::size_t>(-t_min), lcm_den);
    return {from_grid(num_grid), from_grid(den_grid)};
}

}  // namespace birdtrack
