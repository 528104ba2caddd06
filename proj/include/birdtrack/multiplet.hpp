#pragma once

// Trace bases, multiplet bases, transition operators and basis verification.

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "birdtrack/coeff.hpp"
#include "birdtrack/perm.hpp"
#include "birdtrack/rewrite.hpp"
#include "birdtrack/tensor.hpp"

namespace birdtrack {

enum class BasisKind { Projector, Transition, Trace };
std::string to_string(BasisKind k);

struct BasisVector {
    std::string label;
    BasisKind kind = BasisKind::Trace;
    TensorExpr expr;
    RationalFunction norm_sq;
    /// Projectors only: trace as a function of N.
    std::optional<RationalFunction> dimension;
    /// Transitions only: labels of the source and target projectors.
    std::string source, target;
};

/// Normalised vector data: expr plus norm_sq computed with inner_product.
BasisVector make_vector(std::string label, BasisKind kind, const TensorExpr& expr);

/// Signature for n_q quark pairs and n_g gluons: gluons g1..g_ng first, then
/// q1 (out), qb1 (in), q2, qb2, ...; all ports on the left.
ExternalSignature trace_basis_signature(int n_q, int n_g);

/// All non-vanishing trace wirings of the given external ports, without
/// prefactors. Elements are enumerated as permutations of the nodes
/// [Q1..Qnq, G1..Gng] without gluon fixed points, in lexicographic order:
/// a quark string starts at the k-th quark-out port and follows the
/// permutation through gluons until it reaches Q_m, ending at the m-th
/// quark-in port; gluon cycles become traces (two-cycles become gd).
std::vector<TensorExpr> trace_basis(const ExternalSignature& sig);
std::vector<BasisVector> trace_basis(int n_q, int n_g);

/// Four Hermitian Young projectors on V^{(x)3} plus the two transitions between
/// the equivalent [2,1] multiplets (projector order follows standard_tableaux(3)).
std::vector<BasisVector> quark_multiplet_basis(int n = 3);

/// The permutation sigma used for the [13/2] -> [12/3] transition
/// T1 = P[12/3] sigma P[13/2]: the first sigma in lexicographic order that does
/// not annihilate the sandwich.
Permutation quark_transition_connector();

/// Projectors on A(x)A with ports [a1, a2 | b1, b2]: singlet, Aa, As and the
/// four new-multiplet projectors (27, 10, 10bar, 0), valid for symbolic N.
std::vector<BasisVector> gluon_projectors_AA();
/// The projectors plus the two transitions between the adjoint copies.
std::vector<BasisVector> gluon_multiplet_basis_AA();

/// Projectors on V̄(x)V with ports [lb, l | rb, r]: singlet and adjoint.
std::vector<BasisVector> quark_pair_projectors();

/// T = P_t X P_s with X the first connector in the enumeration (identity wiring
/// when the spaces agree, then the trace wirings of the Hom space in order) for
/// which T is nonzero. DomainError when every candidate vanishes.
BasisVector transition_operator(const BasisVector& source, const BasisVector& target);

/// Orthogonal multiplet basis of V̄(x)V(x)A(x)A as maps A(x)A -> V̄(x)V:
/// singlet -> singlet, Aa -> adjoint, As -> adjoint.
std::vector<BasisVector> quark_pair_gluon_pair_basis();

using RationalMatrix = std::vector<std::vector<Rational>>;
using FunctionMatrix = std::vector<std::vector<RationalFunction>>;

FunctionMatrix gram_matrix(const std::vector<BasisVector>& vs);
RationalMatrix evaluate(const FunctionMatrix& m, const Rational& n, const Rational& tr);
/// Exact rank over Q.
int exact_rank(RationalMatrix m);

struct BasisReport {
    FunctionMatrix gram;
    bool gram_diagonal = true;
    bool projectors_idempotent = true;
    bool projectors_hermitian = true;
    bool projectors_transverse = true;
    /// Empty when completeness was not requested.
    std::optional<bool> complete;
    bool transitions_sandwiched = true;
    /// Projector labels with symbolic dimension and value at N = 3.
    std::vector<std::tuple<std::string, RationalFunction, Rational>> dimensions;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/// Exact checks; completeness (sum of projectors == identity) only when asked.
BasisReport verify_basis(const std::vector<BasisVector>& vs, bool check_completeness = false);

/// JSON array of {label, kind, dsl_text, norm_sq, dimension}.
std::string basis_to_json(const std::vector<BasisVector>& vs);
/// Inverse of basis_to_json; norm_sq is recomputed and checked against the stored value.
std::vector<BasisVector> basis_from_json(const std::string& text);

}  // namespace birdtrack
