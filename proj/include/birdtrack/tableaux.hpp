#pragma once

// Young diagrams, tableaux and SU(N) multiplet bookkeeping.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "birdtrack/coeff.hpp"

namespace birdtrack {

/// Partition shape: non-increasing positive row lengths. Empty = trivial diagram.
class YoungDiagram {
public:
    YoungDiagram() = default;
    /// Throws DomainError unless rows are positive and non-increasing.
    explicit YoungDiagram(std::vector<int> rows);
    /// "[4,2,1]" or "[]".
    static YoungDiagram parse(std::string_view text);

    const std::vector<int>& rows() const { return rows_; }
    int row_count() const { return static_cast<int>(rows_.size()); }
    int row(int i) const { return i < row_count() ? rows_[static_cast<std::size_t>(i)] : 0; }
    int box_count() const;
    bool empty() const { return rows_.empty(); }
    /// Column lengths.
    std::vector<int> conjugate() const;
    std::string to_string() const;

    friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
    friend auto operator<=>(const YoungDiagram& a, const YoungDiagram& b) { return a.rows_ <=> b.rows_; }

private:
    std::vector<int> rows_;
};

/// Filling of a diagram with 1..n, each once.
class YoungTableau {
public:
    YoungTableau() = default;
    /// Throws DomainError unless the rows are a bijective filling of a valid shape.
    explicit YoungTableau(std::vector<std::vector<int>> rows);
    /// "[13/2]"; entries are comma separated when any exceeds 9, e.g. "[1,2,10/3]".
    static YoungTableau parse(std::string_view text);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    YoungDiagram shape() const;
    int size() const { return n_; }
    /// Entries read column by column, top to bottom.
    std::vector<std::vector<int>> columns() const;
    bool is_standard() const;
    /// Tableau with entry n removed (n must be a corner); the parent in the
    /// Hermitian Young recursion.
    YoungTableau without_largest() const;
    /// Relabel entries: k -> images[k-1].
    YoungTableau relabelled(const std::vector<int>& one_based_images) const;
    std::string to_string() const;

    friend bool operator==(const YoungTableau&, const YoungTableau&) = default;
    friend auto operator<=>(const YoungTableau& a, const YoungTableau& b) { return a.rows_ <=> b.rows_; }

private:
    std::vector<std::vector<int>> rows_;
    int n_ = 0;
};

using MultipletCount = std::map<YoungDiagram, long long>;

/// Partitions of n, reverse-lexicographic ([n] first).
std::vector<YoungDiagram> partitions(int n);
/// Standard tableaux of one shape, fillings in lexicographic order of the row reading.
std::vector<YoungTableau> standard_tableaux(const YoungDiagram& shape);
/// All standard tableaux with n boxes: shapes reverse-lexicographic, fillings lexicographic.
std::vector<YoungTableau> standard_tableaux(int n);

/// Product of hook lengths.
Integer hook_product(const YoungDiagram& d);
/// prod over boxes (N + column - row) / hook_product.
RationalFunction sun_dimension(const YoungDiagram& d);
Integer sun_dimension(const YoungDiagram& d, long n);

/// Littlewood-Richardson product without trimming.
MultipletCount lr_multiply(const YoungDiagram& a, const YoungDiagram& b);
/// Drop diagrams with more than N rows and strip full columns.
YoungDiagram sun_trim(const YoungDiagram& d, long n);
MultipletCount sun_trim(const MultipletCount& c, long n);
/// Sum of m * dim.
Integer total_dimension(const MultipletCount& c, long n);

/// Adjoint diagram (2, 1^{N-2}).
YoungDiagram adjoint_diagram(long n);

struct AdjointPowerDecomposition {
    MultipletCount multiplets;
    long long multiplet_count = 0;  ///< sum of m
    long long colour_space_dim = 0; ///< sum of m^2
};

/// A^{(x) k} by iterated LR products with the adjoint, trimmed at every step.
AdjointPowerDecomposition decompose_adjoint_power(int k, long n);
/// Large-N column: evaluated at N = 2k + 1.
AdjointPowerDecomposition decompose_adjoint_power_large_n(int k);

/// Least k with d in A^{(x) k}; nullopt if beyond limits().first_occurrence_cap.
std::optional<int> first_occurrence(const YoungDiagram& d, long n);

/// SU(N) diagram of the mixed tensor with covariant part lambda (quark side)
/// and contravariant part mu (antiquark side): rows mu_1 + lambda_i - mu_{N+1-i}.
YoungDiagram mixed_tensor_diagram(const YoungDiagram& lambda, const YoungDiagram& mu, long n);

std::string multiplet_count_to_json(const MultipletCount& c, std::optional<long> n = std::nullopt);

}  // namespace birdtrack
