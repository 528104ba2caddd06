#pragma once

// Symmetric group S_n and its group algebra over Q(N, T_R).

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "birdtrack/coeff.hpp"

namespace birdtrack {

/// Bijection of {1..n}, stored as its image sequence (0-based internally).
class Permutation {
public:
    Permutation() = default;
    static Permutation identity(int n);
    /// One-based images: images[k-1] = pi(k). Throws DomainError if not a bijection.
    static Permutation from_images(const std::vector<int>& one_based);
    /// Transposition of the one-based points a and b.
    static Permutation transposition(int n, int a, int b);
    /// Disjoint-cycle text such as "(132)", "(1,10)(2,3)" or "()"; ParseError on
    /// repeated or out-of-range elements.
    static Permutation parse_cycles(std::string_view text, int degree);

    int degree() const { return static_cast<int>(images_.size()); }
    /// Zero-based image of zero-based point i.
    int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return images_; }
    std::vector<int> one_based_images() const;

    bool is_identity() const;
    Permutation inverse() const;
    int sign() const;
    /// Number of cycles including fixed points; a closed birdtrack of this
    /// permutation has N^cycle_count as its value.
    int cycle_count() const;
    /// Disjoint cycles, one-based, each starting at its smallest element,
    /// ordered by that element, fixed points omitted.
    std::vector<std::vector<int>> cycles() const;
    std::string to_string() const;

    /// Embed into S_m (m >= n) acting trivially on the extra points.
    Permutation extended(int m) const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

private:
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}
    std::vector<int> images_;
};

/// (pi o sigma)(x) = pi(sigma(x)). Throws DomainError on degree mismatch.
Permutation compose(const Permutation& pi, const Permutation& sigma);

/// All permutations of degree n in lexicographic order of their images.
std::vector<Permutation> all_permutations(int n);

/// Element of the group algebra of S_n with coefficients in Q(N, T_R).
class AlgebraElement {
public:
    explicit AlgebraElement(int degree = 0) : degree_(degree) {}
    AlgebraElement(const Permutation& p, RationalFunction c = RationalFunction(1));
    static AlgebraElement identity(int n) { return AlgebraElement(Permutation::identity(n)); }

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<Permutation, RationalFunction>& terms() const { return terms_; }
    /// Coefficient of p (zero when absent).
    RationalFunction coefficient(const Permutation& p) const;

    void add_term(const Permutation& p, const RationalFunction& c);
    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(const RationalFunction& c, const AlgebraElement& a);
    /// Group-algebra product, bilinear extension of compose.
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

    /// pi -> pi^{-1} on every term; the Hermitian conjugate of the tensor.
    AlgebraElement dagger() const;
    /// Embed into S_m acting trivially on the extra lines (X -> X (x) 1).
    AlgebraElement extended(int m) const;
    /// sigma X sigma^{-1}.
    AlgebraElement conjugated(const Permutation& sigma) const;
    /// Closed-loop value: sum_pi c_pi N^{cycles(pi)}.
    RationalFunction trace() const;
    /// If this = lambda * other for a scalar lambda, return lambda.
    std::optional<RationalFunction> ratio_to(const AlgebraElement& other) const;

    std::string to_string() const;

private:
    int degree_;
    std::map<Permutation, RationalFunction> terms_;
};

AlgebraElement algebra_mul(const AlgebraElement& a, const AlgebraElement& b);

/// (1/n!) sum of all permutations. Throws ResourceError above limits().max_degree.
AlgebraElement symmetriser(int n);
/// (1/n!) sum of sign(pi) pi.
AlgebraElement antisymmetriser(int n);
/// (Anti)symmetriser over a subset of the one-based lines of S_degree.
AlgebraElement symmetriser_on(int degree, const std::vector<int>& lines);
AlgebraElement antisymmetriser_on(int degree, const std::vector<int>& lines);
/// Unnormalised row-sum / signed column-sum over a subset (no 1/k!).
AlgebraElement line_sum(int degree, const std::vector<int>& lines, bool signed_sum);

/// S_n = (1/n) (S_{n-1} + (n-1) S_{n-1} (n-1 n) S_{n-1}), with S_{n-1} on the first n-1 lines.
AlgebraElement symmetriser_recursive(int n);
/// A_n = (1/n) (A_{n-1} - (n-1) A_{n-1} (n-1 n) A_{n-1}).
AlgebraElement antisymmetriser_recursive(int n);

}  // namespace birdtrack
