#pragma once

#include <cstddef>

namespace birdtrack {

/// Resource caps shared by all modules. Exceeding one raises ResourceError.
struct Limits {
    int max_degree = 8;                   ///< largest n for full S_n expansions
    std::size_t max_terms = 1'000'000;    ///< intermediate terms in one reduction
    int max_bar_width = 8;                ///< widest (anti)symmetriser expanded
    int max_young_boxes = 6;              ///< Hermitian Young operator recursion
    int first_occurrence_cap = 8;         ///< deepest adjoint power searched
    int max_trace_basis_size = 10'000;    ///< trace-basis enumeration
};

/// Process-wide limits; the CLI overrides them from flags.
Limits& limits();

}  // namespace birdtrack
