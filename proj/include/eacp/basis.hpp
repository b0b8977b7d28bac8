#ifndef EACP_BASIS_HPP
#define EACP_BASIS_HPP

#include "eacp/algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eacp {

/// Rows of P are the new basis vectors h_1'..h_n', r' written in the old
/// natural basis.
struct BasisChange {
    Matrix P;
    static BasisChange identity(std::size_t n) { return {Matrix::identity(n + 1)}; }
};

/// The algebra written in the basis given by P. Throws AlgebraMismatch if P
/// is singular or the new products do not follow the EACP table.
Algebra change_basis(const Algebra& alg, const BasisChange& change);

struct Canonical {
    Algebra algebra;
    BasisChange change;
    unsigned delta = 0;
};

/// Basis in which only h_1 r carries an r-term, with coefficient delta in
/// {0, 1}. Pivot is the smallest k with b_k != 0.
Canonical canonicalize(const Algebra& alg);

/// f_1..f_m and r'. m = 0 is allowed (a single square-zero vector).
struct SubalgebraBasis {
    std::vector<Element> f;
    Element rprime;

    std::vector<Element> all() const;
    std::size_t dim() const { return f.size() + 1; }
};

struct NaturalCheck {
    bool ok = true;
    std::string failure;             // which product broke the table
    std::optional<Element> witness;  // the offending product
};

/// f_i f_j = 0, r'^2 = 0 and f_i r' in the span. Throws DimensionError if
/// the candidate vectors are dependent.
NaturalCheck is_natural_basis(const Algebra& alg, const SubalgebraBasis& candidate);

struct Extension {
    SubalgebraBasis natural;       // natural basis of the whole algebra
    std::vector<Element> ordered;  // the subalgebra's vectors first, then the fillers
    std::size_t sub_dim = 0;
    int proof_case = 0;  // 1: gamma != 0; 2: no r anywhere; 3: gamma = 0, some gamma_i != 0
};

/// Extends a natural basis of a subalgebra to one of the whole algebra.
/// Throws PreconditionError if `sub` is not natural.
Extension extend_natural_basis(const Algebra& alg, const SubalgebraBasis& sub);

/// Square-zero elements form H ∪ W with H = span(h_i) and
/// W = {y + beta r : y^T M = 0}. Both are subspaces closed under products.
struct SquareZeroPieces {
    std::vector<Vector> H;
    std::vector<Vector> W;
};
SquareZeroPieces square_zero_pieces(const Algebra& alg);

/// Product that leaves span(vectors), if any.
std::optional<Element> escaping_product(const Algebra& alg, const std::vector<Element>& vectors);

struct NaturalSearch {
    std::optional<SubalgebraBasis> basis;
    std::string obstruction;
};

/// Natural basis of a multiplicatively closed subspace of dimension at most
/// max_dim. Throws PreconditionError if the subspace is not closed, and
/// DimensionError above max_dim.
NaturalSearch find_natural_basis(const Algebra& alg, const std::vector<Element>& subspace, std::size_t max_dim = 3);

std::vector<Vector> coords_of(const std::vector<Element>& xs);
std::vector<Element> elements_of(const std::vector<Vector>& rows);

}  // namespace eacp

#endif  // EACP_BASIS_HPP
