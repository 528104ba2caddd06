#include "birdtrack/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "birdtrack/error.hpp"
#include "birdtrack/limits.hpp"

namespace birdtrack {

Permutation Permutation::identity(int n) {
    if (n < 0) throw DomainError("negative permutation degree");
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
}

Permutation Permutation::from_images(const std::vector<int>& one_based) {
    const int n = static_cast<int>(one_based.size());
    std::vector<int> v(one_based.size());
    std::vector<bool> seen(one_based.size(), false);
    for (std::size_t k = 0; k < one_based.size(); ++k) {
        int img = one_based[k] - 1;
        if (img < 0 || img >= n || seen[static_cast<std::size_t>(img)])
            throw DomainError("images do not form a bijection of {1.." + std::to_string(n) + "}");
        seen[static_cast<std::size_t>(img)] = true;
        v[k] = img;
    }
    return Permutation(std::move(v));
}

Permutation Permutation::transposition(int n, int a, int b) {
    if (a < 1 || b < 1 || a > n || b > n) throw DomainError("transposition point out of range");
    Permutation p = identity(n);
    std::swap(p.images_[static_cast<std::size_t>(a - 1)], p.images_[static_cast<std::size_t>(b - 1)]);
    return p;
}

Permutation Permutation::parse_cycles(std::string_view text, int degree) {
    Permutation p = identity(degree);
    std::vector<bool> used(static_cast<std::size_t>(degree), false);
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& what) -> void {
        throw ParseError("cycle notation: " + what + " in '" + std::string(text) + "'");
    };
    // Single-digit elements may be run together ("(132)") when degree < 10.
    skip();
    while (pos < text.size()) {
        if (text[pos] != '(') fail("expected '('");
        ++pos;
        std::vector<int> cycle;
        for (;;) {
            skip();
            if (pos >= text.size()) fail("unterminated cycle");
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            if (text[pos] == ',') {
                ++pos;
                continue;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[pos]))) fail("unexpected character");
            std::size_t start = pos;
            if (degree < 10) {
                ++pos;
            } else {
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            }
            int v = std::stoi(std::string(text.substr(start, pos - start)));
            if (v < 1 || v > degree) fail("element " + std::to_string(v) + " exceeds degree " + std::to_string(degree));
            if (used[static_cast<std::size_t>(v - 1)]) fail("element " + std::to_string(v) + " repeated");
            used[static_cast<std::size_t>(v - 1)] = true;
            cycle.push_back(v - 1);
        }
        for (std::size_t k = 0; k < cycle.size(); ++k)
            p.images_[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
        skip();
    }
    return p;
}

std::vector<int> Permutation::one_based_images() const {
    std::vector<int> v(images_);
    for (auto& x : v) ++x;
    return v;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i)) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> v(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) v[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    return Permutation(std::move(v));
}

int Permutation::sign() const {
    // (-1)^(n - #cycles)
    return ((degree() - cycle_count()) % 2 == 0) ? 1 : -1;
}

int Permutation::cycle_count() const {
    std::vector<bool> seen(images_.size(), false);
    int count = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) continue;
        ++count;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) seen[j] = true;
    }
    return count;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i] || images_[i] == static_cast<int>(i)) continue;
        std::vector<int> c;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
            seen[j] = true;
            c.push_back(static_cast<int>(j) + 1);
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::string Permutation::to_string() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::string s;
    const bool commas = degree() >= 10;
    for (const auto& c : cs) {
        s += "(";
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (commas && k) s += ",";
            s += std::to_string(c[k]);
        }
        s += ")";
    }
    return s;
}

Permutation Permutation::extended(int m) const {
    if (m < degree()) throw DomainError("cannot shrink a permutation");
    std::vector<int> v(images_);
    for (int i = degree(); i < m; ++i) v.push_back(i);
    return Permutation(std::move(v));
}

Permutation compose(const Permutation& pi, const Permutation& sigma) {
    if (pi.degree() != sigma.degree())
        throw DomainError("compose: degree mismatch " + std::to_string(pi.degree()) + " vs " +
                          std::to_string(sigma.degree()));
    std::vector<int> v(static_cast<std::size_t>(pi.degree()));
    for (int x = 0; x < pi.degree(); ++x) v[static_cast<std::size_t>(x)] = pi(sigma(x));
    std::vector<int> one(v);
    for (auto& y : one) ++y;
    return Permutation::from_images(one);
}

std::vector<Permutation> all_permutations(int n) {
    if (n > limits().max_degree)
        throw ResourceError("S_" + std::to_string(n) + " exceeds the degree cap " +
                            std::to_string(limits().max_degree));
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_images(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

// ---- AlgebraElement -------------------------------------------------------

AlgebraElement::AlgebraElement(const Permutation& p, RationalFunction c) : degree_(p.degree()) {
    add_term(p, c);
}

RationalFunction AlgebraElement::coefficient(const Permutation& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? RationalFunction() : it->second;
}

void AlgebraElement::add_term(const Permutation& p, const RationalFunction& c) {
    if (p.degree() != degree_) throw DomainError("algebra element: degree mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    if (o.degree_ != degree_) throw DomainError("algebra element: degree mismatch");
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    if (o.degree_ != degree_) throw DomainError("algebra element: degree mismatch");
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
}

AlgebraElement operator*(const RationalFunction& c, const AlgebraElement& a) {
    AlgebraElement r(a.degree_);
    if (c.is_zero()) return r;
    for (const auto& [p, v] : a.terms_) r.terms_.emplace(p, c * v);
    return r;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return algebra_mul(a, b); }

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

AlgebraElement algebra_mul(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.degree() != b.degree())
        throw DomainError("algebra_mul: degree mismatch " + std::to_string(a.degree()) + " vs " +
                          std::to_string(b.degree()));
    AlgebraElement r(a.degree());
    const int n = a.degree();
    std::vector<int> buf(static_cast<std::size_t>(n));
    for (const auto& [pa, ca] : a.terms()) {
        for (const auto& [pb, cb] : b.terms()) {
            for (int x = 0; x < n; ++x) buf[static_cast<std::size_t>(x)] = pa(pb(x)) + 1;
            r.add_term(Permutation::from_images(buf), ca * cb);
        }
    }
    return r;
}

AlgebraElement AlgebraElement::dagger() const {
    AlgebraElement r(degree_);
    for (const auto& [p, c] : terms_) r.terms_.emplace(p.inverse(), c);
    return r;
}

AlgebraElement AlgebraElement::extended(int m) const {
    AlgebraElement r(m);
    for (const auto& [p, c] : terms_) r.terms_.emplace(p.extended(m), c);
    return r;
}

AlgebraElement AlgebraElement::conjugated(const Permutation& sigma) const {
    AlgebraElement r(degree_);
    const Permutation inv = sigma.inverse();
    for (const auto& [p, c] : terms_) r.add_term(compose(compose(sigma, p), inv), c);
    return r;
}

RationalFunction AlgebraElement::trace() const {
    // Group by cycle count so each power of N is built once.
    std::map<int, RationalFunction> by_cycles;
    for (const auto& [p, c] : terms_) by_cycles[p.cycle_count()] += c;
    RationalFunction t;
    for (const auto& [k, c] : by_cycles) t += c * RationalFunction::N().pow(k);
    return t;
}

std::optional<RationalFunction> AlgebraElement::ratio_to(const AlgebraElement& other) const {
    if (other.is_zero()) return is_zero() ? std::optional<RationalFunction>(RationalFunction()) : std::nullopt;
    if (terms_.size() != other.terms_.size() && !is_zero()) return std::nullopt;
    const auto& [p0, c0] = *other.terms_.begin();
    RationalFunction lambda = coefficient(p0) / c0;
    if (!(lambda * other == *this)) return std::nullopt;
    return lambda;
}

std::string AlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        if (!first) s += " + ";
        first = false;
        s += "(" + c.to_string() + ")*" + p.to_string();
    }
    return s;
}

AlgebraElement line_sum(int degree, const std::vector<int>& lines, bool signed_sum) {
    const int k = static_cast<int>(lines.size());
    if (k > limits().max_degree)
        throw ResourceError("(anti)symmetriser over " + std::to_string(k) + " lines exceeds the degree cap");
    for (int l : lines)
        if (l < 1 || l > degree) throw DomainError("line index out of range");
    AlgebraElement r(degree);
    for (const auto& sub : all_permutations(k)) {
        std::vector<int> img(static_cast<std::size_t>(degree));
        std::iota(img.begin(), img.end(), 1);
        for (int j = 0; j < k; ++j) img[static_cast<std::size_t>(lines[static_cast<std::size_t>(j)] - 1)] = lines[static_cast<std::size_t>(sub(j))];
        r.add_term(Permutation::from_images(img), RationalFunction(signed_sum ? sub.sign() : 1));
    }
    return r;
}

namespace {
Rational inverse_factorial(int k) {
    Integer f(1);
    for (int i = 2; i <= k; ++i) f *= i;
    return Rational(Integer(1), f);
}
std::vector<int> first_lines(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return v;
}
}  // namespace

AlgebraElement symmetriser_on(int degree, const std::vector<int>& lines) {
    return RationalFunction(inverse_factorial(static_cast<int>(lines.size()))) * line_sum(degree, lines, false);
}

AlgebraElement antisymmetriser_on(int degree, const std::vector<int>& lines) {
    return RationalFunction(inverse_factorial(static_cast<int>(lines.size()))) * line_sum(degree, lines, true);
}

AlgebraElement symmetriser(int n) {
    if (n < 1) throw DomainError("symmetriser needs n >= 1");
    return symmetriser_on(n, first_lines(n));
}

AlgebraElement antisymmetriser(int n) {
    if (n < 1) throw DomainError("antisymmetriser needs n >= 1");
    return antisymmetriser_on(n, first_lines(n));
}

namespace {
AlgebraElement bar_recursive(int n, bool anti) {
    if (n < 1) throw DomainError("recursion needs n >= 1");
    if (n == 1) return AlgebraElement::identity(1);
    AlgebraElement prev = bar_recursive(n - 1, anti).extended(n);
    AlgebraElement swap(Permutation::transposition(n, n - 1, n));
    AlgebraElement sandwich = prev * swap * prev;
    RationalFunction k(n - 1);
    AlgebraElement sum = anti ? prev - k * sandwich : prev + k * sandwich;
    return RationalFunction(Rational(1, n)) * sum;
}
}  // namespace

AlgebraElement symmetriser_recursive(int n) { return bar_recursive(n, false); }

AlgebraElement antisymmetriser_recursive(int n) { return bar_recursive(n, true); }

}  // namespace birdtrack
