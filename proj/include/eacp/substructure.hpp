#ifndef EACP_SUBSTRUCTURE_HPP
#define EACP_SUBSTRUCTURE_HPP

#include "eacp/basis.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eacp {

/// x^2 = 0 iff beta = 0 or y^T M = 0, so the set is the union of two
/// subspaces; H and W hold rref bases.
struct NilpotentSet {
    std::vector<Vector> H;
    std::vector<Vector> W;
    bool contains(const Element& x) const;
};

NilpotentSet absolute_nilpotents(const Algebra& alg);

/// Idempotents y + beta r with y^T A = y^T / (2 beta) and y^T b = 1/2: an
/// affine family base + sum t_k d_k for each nonzero left eigenvalue of A.
struct IdempotentFamily {
    Element base;
    std::vector<Element> directions;  // beta = 0, d^T b = 0
    Scalar eigenvalue;                // lambda = 1 / (2 beta)
    bool certified = true;            // false: numeric eigenvalue, not confirmed exactly
};

struct IdempotentSearch {
    std::vector<IdempotentFamily> families;
    bool certified = true;
    std::vector<std::string> notes;
    bool contains(const Element& x) const;  // x is an idempotent
};

IdempotentSearch idempotents(const Algebra& alg);

/// The condition as printed alongside the subalgebra criterion: beta != 0,
/// y^T b = 1 and y^T A = y^T / beta. It describes x^2 = 2x, so it holds for
/// x exactly when x / 2 is idempotent.
bool paper_idempotent_condition(const Algebra& alg, const Element& x);

enum class LineKind { Nilpotent, Idempotent };

struct LineDescription {
    Element generator;  // first nonzero coefficient is 1
    LineKind kind = LineKind::Nilpotent;
    std::optional<Scalar> eigenvalue;
    bool certified = true;
};

struct SubalgebraLines {
    NilpotentSet nilpotent;
    IdempotentSearch idempotent;
    /// span{x} is a subalgebra according to the structured description.
    bool contains(const Element& x) const;
    /// Basis vectors of the nilpotent pieces and the base of each
    /// idempotent family, normalized and sorted.
    std::vector<LineDescription> representatives() const;
};

SubalgebraLines one_dim_subalgebras(const Algebra& alg);

/// Definition-level oracles.
bool spans_subalgebra(const Algebra& alg, const Element& x);
bool spans_ideal(const Algebra& alg, const Element& x);

struct CheckedProduct {
    Element x;
    Element y;
    Element result;
    Scalar c;  // result = c x
};

/// Every nonzero vector of span(basis) generates a one-dimensional ideal.
struct IdealWitness {
    std::vector<Element> basis;
    Vector eigenvalues;  // scalar of R_{h_1}, ..., R_{h_n}, R_r on the span
    std::vector<CheckedProduct> checked;
    bool exact = true;
};

struct PaperIdealCriteria {
    std::vector<std::vector<Vector>> a_spaces;  // beta = alpha_1 = 0 pieces, one per eigenvalue of A_1
    std::optional<Element> b_line;              // beta = 1, alpha_j = a_1j when rows 2..n vanish
    std::optional<bool> agrees;                 // unset when the general search was not certified
};

struct IdealSearch {
    std::vector<IdealWitness> spaces;
    bool certified = true;
    std::vector<std::string> notes;
    std::optional<PaperIdealCriteria> paper;  // present for canonical algebras with delta = 1
    bool contains(const Element& x) const;
};

IdealSearch one_dim_ideals(const Algebra& alg);

/// Lines given by the ideal criteria for canonical algebras with delta = 1.
PaperIdealCriteria paper_ideal_criteria(const Algebra& canonical);

struct FullRankForm {
    std::vector<Element> f;  // basis of the part inside span(h_i)
    bool has_r = false;
};

/// For rank A = n every evolution subalgebra splits as span(f) + a r with
/// f inside span(h_i). Throws PreconditionError when rank A < n, when the
/// subspace is not closed, or when it has no natural basis.
FullRankForm full_rank_subalgebra_form(const Algebra& alg, const std::vector<Element>& sub);

}  // namespace eacp

#endif  // EACP_SUBSTRUCTURE_HPP
