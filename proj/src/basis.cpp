#include "eacp/basis.hpp"

#include <stdexcept>

namespace eacp {

std::vector<Vector> coords_of(const std::vector<Element>& xs) {
    std::vector<Vector> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(x.coords());
    return out;
}

std::vector<Element> elements_of(const std::vector<Vector>& rows) {
    std::vector<Element> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(Element::from_coords(r));
    return out;
}

Algebra change_basis(const Algebra& alg, const BasisChange& change) {
    const std::size_t n = alg.n(), dim = alg.dim();
    if (change.P.rows() != dim || change.P.cols() != dim)
        throw DimensionError("basis change must be " + std::to_string(dim) + "x" + std::to_string(dim));
    auto Pinv = inverse(change.P);
    if (!Pinv) throw AlgebraMismatch("basis change is singular");
    std::vector<Element> e = elements_of(change.P.row_list());
    auto in_new = [&](const Element& x) { return std::span<const Scalar>(x.coords()) * *Pinv; };
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j) {
            if (j == n && i != n) continue;  // h_i' r' is free
            Element p = multiply(alg, e[i], e[j]);
            if (!p.is_zero()) {
                std::string a = i == n ? "r'" : "h" + std::to_string(i + 1) + "'";
                std::string b = j == n ? "r'" : "h" + std::to_string(j + 1) + "'";
                throw AlgebraMismatch("new basis is not natural: " + a + " * " + b + " != 0");
            }
        }
    Matrix A(n, n);
    Vector b(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vector c = in_new(multiply(alg, e[i], e[n]));
        for (std::size_t j = 0; j < n; ++j) A(i, j) = c[j];
        b[i] = c[n];
    }
    return Algebra(StructuralMatrix{A, b}, alg.label());
}

Canonical canonicalize(const Algebra& alg) {
    const std::size_t n = alg.n();
    const Vector& b = alg.b();
    std::size_t k = n;
    for (std::size_t i = 0; i < n; ++i)
        if (!b[i].is_zero()) {
            k = i;
            break;
        }
    if (k == n) return {alg, BasisChange::identity(n), 0};
    Matrix P(n + 1, n + 1, alg.field());
    P(0, k) = b[k].inverse();
    std::size_t row = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == k) continue;
        P(row, i) = Scalar(1);
        P(row, k) = -(b[i] / b[k]);
        ++row;
    }
    P(n, n) = Scalar(1);
    BasisChange change{P};
    Algebra out = change_basis(alg, change);
    if (!out.b()[0].is_one()) throw std::logic_error("canonicalize: pivot did not normalize");
    for (std::size_t i = 1; i < n; ++i)
        if (!out.b()[i].is_zero()) throw std::logic_error("canonicalize: r-term survived outside h1");
    return {out, change, 1};
}

std::vector<Element> SubalgebraBasis::all() const {
    std::vector<Element> out = f;
    out.push_back(rprime);
    return out;
}

namespace {

std::string fname(std::size_t i) { return "f" + std::to_string(i + 1); }

}  // namespace

NaturalCheck is_natural_basis(const Algebra& alg, const SubalgebraBasis& candidate) {
    std::vector<Element> all = candidate.all();
    std::vector<Vector> rows = coords_of(all);
    if (!independent(rows)) throw DimensionError("candidate basis vectors are linearly dependent");
    const std::size_t m = candidate.f.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            Element p = multiply(alg, candidate.f[i], candidate.f[j]);
            if (!p.is_zero()) return {false, fname(i) + " * " + fname(j) + " != 0", p};
        }
    Element rr = multiply(alg, candidate.rprime, candidate.rprime);
    if (!rr.is_zero()) return {false, "r' * r' != 0", rr};
    for (std::size_t i = 0; i < m; ++i) {
        Element p = multiply(alg, candidate.f[i], candidate.rprime);
        if (!in_span(rows, p.coords())) return {false, fname(i) + " * r' leaves the span", p};
    }
    return {};
}

namespace {

/// Appends h_j (leftmost first) until the vectors span the h-part.
std::vector<Element> fill_h(const std::vector<Element>& in_h, std::size_t n) {
    std::vector<Vector> rows = coords_of(in_h);
    std::vector<Element> fillers;
    for (std::size_t j = 1; j <= n && rows.size() < n; ++j) {
        Element h = Element::h(n, j);
        if (!in_span(rows, h.coords())) {
            rows.push_back(h.coords());
            fillers.push_back(h);
        }
    }
    if (rows.size() != n) throw std::logic_error("exchange step failed to reach a basis of the h-span");
    return fillers;
}

Element kill_r(const Element& x, const Element& pivot) {
    // x - (beta_x / beta_pivot) pivot
    return x - (x.beta() / pivot.beta()) * pivot;
}

}  // namespace

Extension extend_natural_basis(const Algebra& alg, const SubalgebraBasis& sub) {
    auto check = is_natural_basis(alg, sub);
    if (!check.ok) throw PreconditionError("not a natural basis of a subalgebra: " + check.failure);
    if (escaping_product(alg, sub.all())) throw PreconditionError("span of the given basis is not a subalgebra");
    const std::size_t n = alg.n();
    Extension ext;
    ext.sub_dim = sub.dim();
    std::vector<Element> hs;  // vectors of the subalgebra that take h-roles
    Element rrole;
    std::size_t sub_i = sub.f.size();
    if (!sub.rprime.beta().is_zero()) {
        ext.proof_case = 1;
        for (const auto& f : sub.f) hs.push_back(kill_r(f, sub.rprime));
        rrole = sub.rprime;
    } else {
        for (std::size_t i = 0; i < sub.f.size(); ++i)
            if (!sub.f[i].beta().is_zero()) {
                sub_i = i;
                break;
            }
        if (sub_i == sub.f.size()) {
            ext.proof_case = 2;
            hs = sub.all();
        } else {
            // r' trades places with f_i, then the first case applies
            ext.proof_case = 3;
            rrole = sub.f[sub_i];
            for (std::size_t j = 0; j < sub.f.size(); ++j) hs.push_back(j == sub_i ? sub.rprime : kill_r(sub.f[j], rrole));
        }
    }
    std::vector<Element> fillers = fill_h(hs, n);
    ext.ordered = hs;
    if (ext.proof_case != 2) ext.ordered.push_back(rrole);
    ext.ordered.insert(ext.ordered.end(), fillers.begin(), fillers.end());
    ext.natural.f = hs;
    ext.natural.f.insert(ext.natural.f.end(), fillers.begin(), fillers.end());
    ext.natural.rprime = ext.proof_case == 2 ? Element::r(n) : rrole;
    if (ext.proof_case == 2) ext.ordered.push_back(Element::r(n));

    auto full = is_natural_basis(alg, ext.natural);
    if (!full.ok || ext.natural.dim() != alg.dim()) throw std::logic_error("extension is not a natural basis: " + full.failure);
    std::vector<Vector> head;
    for (std::size_t k = 0; k < ext.sub_dim; ++k) head.push_back(ext.ordered[k].coords());
    if (!same_span(head, coords_of(sub.all()), alg.dim()))
        throw std::logic_error("extension lost the subalgebra span");
    return ext;
}

SquareZeroPieces square_zero_pieces(const Algebra& alg) {
    const std::size_t n = alg.n(), dim = alg.dim();
    SquareZeroPieces out;
    for (std::size_t i = 1; i <= n; ++i) out.H.push_back(Element::h(n, i).coords());
    for (const auto& y : left_kernel(alg.structure().rect())) out.W.push_back(Element(y, Scalar(0)).coords());
    out.W.push_back(Element::r(n).coords());
    out.W = span_basis(out.W, dim);
    return out;
}

std::optional<Element> escaping_product(const Algebra& alg, const std::vector<Element>& vectors) {
    std::vector<Vector> rows = span_basis(coords_of(vectors), alg.dim());
    std::vector<Element> basis = elements_of(rows);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j) {
            Element p = multiply(alg, basis[i], basis[j]);
            if (!in_span(rows, p.coords())) return p;
        }
    return std::nullopt;
}

namespace {

/// Natural basis of a totally square-zero subspace: put an r-carrying
/// vector last when there is one.
SubalgebraBasis from_null_space(std::vector<Vector> rows) {
    std::size_t pick = rows.size() - 1;
    for (std::size_t k = 0; k < rows.size(); ++k)
        if (!rows[k].back().is_zero()) {
            pick = k;
            break;
        }
    Element r = Element::from_coords(rows[pick]);
    SubalgebraBasis out;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (k == pick) continue;
        Element f = Element::from_coords(rows[k]);
        out.f.push_back(r.beta().is_zero() ? f : kill_r(f, r));
    }
    out.rprime = r;
    return out;
}

}  // namespace

NaturalSearch find_natural_basis(const Algebra& alg, const std::vector<Element>& subspace, std::size_t max_dim) {
    const std::size_t dim = alg.dim();
    std::vector<Vector> S = span_basis(coords_of(subspace), dim);
    if (S.empty()) throw DimensionError("empty subspace");
    if (S.size() > max_dim)
        throw DimensionError("natural-basis search is limited to subspaces of dimension <= " + std::to_string(max_dim));
    if (auto p = escaping_product(alg, elements_of(S)))
        throw PreconditionError("subspace is not closed under multiplication");
    const std::size_t k = S.size();
    SquareZeroPieces pieces = square_zero_pieces(alg);
    std::vector<Vector> SH = intersect(S, pieces.H, dim), SW = intersect(S, pieces.W, dim);

    // A square-zero subspace lies inside one piece (a vector space is never
    // a union of two proper subspaces), and f_i f_j = 0 holds on each piece.
    for (int side = 0; side < 2; ++side) {
        const auto& P = side == 0 ? SH : SW;
        const auto& Q = side == 0 ? SW : SH;
        if (P.size() == k) return {from_null_space(P), ""};
        if (P.size() + 1 == k) {
            for (const auto& q : Q)
                if (!in_span(P, q)) {
                    SubalgebraBasis out;
                    out.f = elements_of(P);
                    out.rprime = Element::from_coords(q);
                    return {out, ""};
                }
        }
    }
    return {std::nullopt, "square-zero vectors of the subspace form S∩H (dim " + std::to_string(SH.size()) +
                              ") ∪ S∩W (dim " + std::to_string(SW.size()) + "); no " + std::to_string(k - 1) +
                              "-dimensional square-zero subspace has a square-zero complement"};
}

}  // namespace eacp
