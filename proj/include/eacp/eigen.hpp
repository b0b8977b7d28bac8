#ifndef EACP_EIGEN_HPP
#define EACP_EIGEN_HPP

#include "eacp/polynomial.hpp"

#include <string>
#include <vector>

namespace eacp {

/// A subspace on which every operator of a family acts as a scalar.
struct CommonEigenspace {
    std::vector<Vector> basis;  // rref rows
    Vector eigenvalues;         // one per operator, in family order
    bool exact = true;
};

struct EigenSearch {
    std::vector<CommonEigenspace> spaces;
    bool certified = true;  // false if an exact family needed numeric roots
    std::vector<std::string> notes;
};

/// Largest subspace U of span(basis) with U * T ⊆ U (row action).
std::vector<Vector> largest_invariant_subspace(const Matrix& T, const std::vector<Vector>& basis);

/// R with B * T = R * B for a T-invariant row space B.
Matrix restrict_operator(const Matrix& T, const std::vector<Vector>& basis);

/// All x with x * T = lambda_T x for every T in the family, returned as a
/// union of subspaces. Operators are intersected one at a time: each step
/// restricts the next operator to the largest invariant subspace of the
/// current candidate space, so characteristic polynomials stay small.
EigenSearch common_left_eigenspaces(const std::vector<Matrix>& family, std::size_t dim);

}  // namespace eacp

#endif  // EACP_EIGEN_HPP
