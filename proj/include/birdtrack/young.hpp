#pragma once

// Young operators and Hermitian Young operators in the group algebra of S_n.

#include "birdtrack/coeff.hpp"
#include "birdtrack/perm.hpp"
#include "birdtrack/tableaux.hpp"
#include "birdtrack/tensor.hpp"

namespace birdtrack {

struct YoungOperator {
    YoungTableau tableau;
    AlgebraElement element;
    bool hermitian = false;

    /// Tensor on n quark lines (outputs i1..in, inputs j1..jn).
    TensorExpr tensor() const { return from_permutation(element); }
};

/// (1/hook) * (row sums) * (signed column sums) for any filling, standard or not.
AlgebraElement young_element(const YoungTableau& t);

/// Y = (1/|t|) s_t a_t. Throws DomainError for non-standard tableaux.
YoungOperator young_operator(const YoungTableau& t);

/// P = (P' (x) 1) Y_t (P' (x) 1) with P' the operator of t without its largest
/// entry, and P = Y for two boxes or fewer. Memoised; ResourceError above
/// limits().max_young_boxes, DomainError for non-standard tableaux.
YoungOperator hermitian_young(const YoungTableau& t);

/// Closed trace sum_pi c_pi N^{cycles(pi)}: the dimension of the image.
RationalFunction operator_trace_dimension(const YoungOperator& y);

/// tr(x^dagger x): zero exactly when x vanishes as an operator on V^{(x)n}
/// (evaluate at an integer N to test a specific group).
RationalFunction hilbert_schmidt_norm(const AlgebraElement& x);

}  // namespace birdtrack
