#include "eacp/eigen.hpp"

namespace eacp {

namespace {

Field field_of(const std::vector<Vector>& rows) {
    Field f = Field::rational();
    for (const auto& r : rows)
        for (const auto& s : r) f = join(f, s.field());
    return f;
}

std::vector<Vector> combine(const std::vector<Vector>& coords, const std::vector<Vector>& basis, std::size_t dim) {
    std::vector<Vector> out;
    for (const auto& s : coords) {
        Vector x(dim, Scalar(0));
        for (std::size_t k = 0; k < basis.size(); ++k) x = add(x, scale(s[k], basis[k]));
        out.push_back(std::move(x));
    }
    return out;
}

}  // namespace

std::vector<Vector> largest_invariant_subspace(const Matrix& T, const std::vector<Vector>& basis) {
    const std::size_t dim = T.rows();
    std::vector<Vector> cur = span_basis(basis, dim);
    while (!cur.empty()) {
        std::vector<Vector> ann = nullspace(Matrix::from_rows(cur));
        if (ann.empty()) return cur;
        Matrix K(cur.size(), ann.size());
        for (std::size_t i = 0; i < cur.size(); ++i) {
            Vector image = std::span<const Scalar>(cur[i]) * T;
            for (std::size_t j = 0; j < ann.size(); ++j) K(i, j) = dot(image, ann[j]);
        }
        std::vector<Vector> next = span_basis(combine(left_kernel(K), cur, dim), dim);
        if (next.size() == cur.size()) return cur;
        cur = std::move(next);
    }
    return cur;
}

Matrix restrict_operator(const Matrix& T, const std::vector<Vector>& basis) {
    Matrix R(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        auto c = coordinates(basis, std::span<const Scalar>(basis[i]) * T);
        if (!c) throw std::logic_error("restrict_operator: subspace is not invariant");
        R.set_row(i, *c);
    }
    return R;
}

EigenSearch common_left_eigenspaces(const std::vector<Matrix>& family, std::size_t dim) {
    EigenSearch result;
    std::vector<CommonEigenspace> current{{Matrix::identity(dim).row_list(), {}, true}};
    const Rational loose_eps(1, Integer("1000000000"));
    for (std::size_t t = 0; t < family.size(); ++t) {
        const Matrix& T = family[t];
        std::vector<CommonEigenspace> next;
        for (const auto& S : current) {
            std::vector<Vector> U = largest_invariant_subspace(T, S.basis);
            if (U.empty()) continue;
            Matrix R = restrict_operator(T, U);
            Field context = join(field_of(U), R.field());
            RootSet roots = find_roots(characteristic_polynomial(R), context);
            if (roots.numeric_fallback) {
                result.certified = false;
                result.notes.push_back("operator " + std::to_string(t) + ": numeric eigenvalues on a " +
                                       std::to_string(U.size()) + "-dimensional invariant subspace");
            }
            for (const auto& root : roots.roots) {
                std::vector<Vector> coords;
                if (root.exact) {
                    coords = left_kernel(R - root.value * Matrix::identity(R.rows()));
                } else {
                    Field nf = Field::certified_float(loose_eps);
                    Scalar lam = Scalar::approx(root.value.approx_value(), loose_eps);
                    coords = left_kernel(R.lift(nf) - lam * Matrix::identity(R.rows(), nf));
                }
                if (coords.empty()) continue;
                CommonEigenspace E;
                E.basis = span_basis(combine(coords, U, dim), dim);
                E.eigenvalues = S.eigenvalues;
                E.eigenvalues.push_back(root.value);
                E.exact = S.exact && root.exact;
                next.push_back(std::move(E));
            }
        }
        current = std::move(next);
    }
    result.spaces = std::move(current);
    return result;
}

}  // namespace eacp
