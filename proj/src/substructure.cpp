#include "eacp/substructure.hpp"

#include "eacp/eigen.hpp"

#include <algorithm>

namespace eacp {

namespace {

/// c with p = c x, if p lies on the line through x (x != 0).
std::optional<Scalar> ratio_on_line(const Element& x, const Element& p) {
    auto c = coordinates({x.coords()}, p.coords());
    if (!c) return std::nullopt;
    return (*c)[0];
}

Element normalized(const Element& x) { return Element::from_coords(normalize_leading(x.coords())); }

}  // namespace

bool NilpotentSet::contains(const Element& x) const {
    return in_span(H, x.coords()) || in_span(W, x.coords());
}

NilpotentSet absolute_nilpotents(const Algebra& alg) {
    SquareZeroPieces p = square_zero_pieces(alg);
    NilpotentSet out{p.H, p.W};
    for (const auto* piece : {&out.H, &out.W}) {
        Vector sum(alg.dim(), Scalar(0));
        for (const auto& v : *piece) {
            if (!multiply(alg, Element::from_coords(v), Element::from_coords(v)).is_zero())
                throw std::logic_error("nilpotent piece contains a vector with nonzero square");
            sum = add(sum, v);
        }
        if (!multiply(alg, Element::from_coords(sum), Element::from_coords(sum)).is_zero())
            throw std::logic_error("nilpotent piece is not closed under sums");
    }
    return out;
}

bool IdempotentSearch::contains(const Element& x) const {
    for (const auto& fam : families) {
        if (!fam.certified) continue;
        Vector diff = (x - fam.base).coords();
        if (in_span(coords_of(fam.directions), diff)) return true;
    }
    return false;
}

IdempotentSearch idempotents(const Algebra& alg) {
    IdempotentSearch out;
    const std::size_t n = alg.n();
    const Matrix& A = alg.A();
    const Vector& b = alg.b();
    RootSet roots = find_roots(characteristic_polynomial(A), alg.field());
    const Rational loose(1, Integer("1000000000"));
    for (const auto& root : roots.roots) {
        if (root.value.is_zero()) continue;
        std::vector<Vector> E;
        if (root.exact) {
            E = left_kernel(A - root.value * Matrix::identity(n));
        } else {
            Field nf = Field::certified_float(loose);
            E = left_kernel(A.lift(nf) - Scalar::approx(root.value.approx_value(), loose) * Matrix::identity(n, nf));
        }
        std::size_t k = E.size();
        for (std::size_t j = 0; j < E.size(); ++j)
            if (!dot(E[j], b).is_zero()) {
                k = j;
                break;
            }
        if (k == E.size()) continue;  // b vanishes on the eigenspace: y^T b = 1/2 impossible
        const Scalar eb = dot(E[k], b);
        IdempotentFamily fam;
        fam.eigenvalue = root.value;
        fam.certified = root.exact;
        Vector y = scale(Scalar(Rational(1, 2)) / eb, E[k]);
        fam.base = Element(y, (Scalar(2) * root.value).inverse());
        for (std::size_t j = 0; j < E.size(); ++j) {
            if (j == k) continue;
            Vector d = add(E[j], scale(-(dot(E[j], b) / eb), E[k]));
            fam.directions.push_back(Element(d, Scalar::zero_of(d.front().field())));
        }
        if (fam.certified) {
            Element probe = fam.base;
            for (const auto& d : fam.directions) probe += d;
            if (!(multiply(alg, fam.base, fam.base) == fam.base) || !(multiply(alg, probe, probe) == probe))
                throw std::logic_error("idempotent family failed the x^2 = x check");
        } else {
            out.certified = false;
            out.notes.push_back("eigenvalue " + root.value.to_string() + " is numeric; family not confirmed exactly");
        }
        out.families.push_back(std::move(fam));
    }
    std::sort(out.families.begin(), out.families.end(), [](const IdempotentFamily& x, const IdempotentFamily& y) {
        return compare_vectors(x.base.coords(), y.base.coords()) < 0;
    });
    return out;
}

bool paper_idempotent_condition(const Algebra& alg, const Element& x) {
    if (x.beta().is_zero()) return false;
    const Vector& y = x.alpha();
    if (!dot(y, alg.b()).is_one()) return false;
    Vector yA = std::span<const Scalar>(y) * alg.A();
    return is_zero(add(yA, scale(-x.beta().inverse(), y)));
}

bool SubalgebraLines::contains(const Element& x) const {
    if (x.is_zero()) return false;
    if (nilpotent.contains(x)) return true;
    for (const auto& fam : idempotent.families) {
        if (!fam.certified) continue;
        std::vector<Vector> rows{fam.base.coords()};
        for (const auto& d : fam.directions) rows.push_back(d.coords());
        auto c = coordinates(rows, x.coords());
        if (c && !(*c)[0].is_zero()) return true;
    }
    return false;
}

std::vector<LineDescription> SubalgebraLines::representatives() const {
    std::vector<LineDescription> out;
    for (const auto* piece : {&nilpotent.H, &nilpotent.W})
        for (const auto& v : *piece) out.push_back({normalized(Element::from_coords(v)), LineKind::Nilpotent, {}, true});
    for (const auto& fam : idempotent.families)
        out.push_back({normalized(fam.base), LineKind::Idempotent, fam.eigenvalue, fam.certified});
    std::sort(out.begin(), out.end(), [](const LineDescription& x, const LineDescription& y) {
        return compare_vectors(x.generator.coords(), y.generator.coords()) < 0;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const LineDescription& x, const LineDescription& y) { return x.generator == y.generator; }),
              out.end());
    return out;
}

SubalgebraLines one_dim_subalgebras(const Algebra& alg) {
    SubalgebraLines out{absolute_nilpotents(alg), idempotents(alg)};
    for (const auto& line : out.representatives())
        if (line.certified && !spans_subalgebra(alg, line.generator))
            throw std::logic_error("reported line is not a subalgebra");
    return out;
}

bool spans_subalgebra(const Algebra& alg, const Element& x) {
    if (x.is_zero()) return false;
    return ratio_on_line(x, multiply(alg, x, x)).has_value();
}

bool spans_ideal(const Algebra& alg, const Element& x) {
    if (x.is_zero()) return false;
    for (const auto& g : alg.generators())
        if (!ratio_on_line(x, multiply(alg, x, g))) return false;
    return true;
}

bool IdealSearch::contains(const Element& x) const {
    if (x.is_zero()) return false;
    for (const auto& s : spaces)
        if (s.exact && in_span(coords_of(s.basis), x.coords())) return true;
    return false;
}

IdealSearch one_dim_ideals(const Algebra& alg) {
    IdealSearch out;
    std::vector<Matrix> family;
    const auto gens = alg.generators();
    for (const auto& g : gens) family.push_back(right_operator_matrix(alg, g));
    EigenSearch es = common_left_eigenspaces(family, alg.dim());
    out.certified = es.certified;
    out.notes = es.notes;
    for (const auto& space : es.spaces) {
        IdealWitness w;
        w.basis = elements_of(space.basis);
        w.eigenvalues = space.eigenvalues;
        w.exact = space.exact && std::all_of(space.basis.begin(), space.basis.end(), [](const Vector& v) {
                      return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.exact(); });
                  });
        for (const auto& x : w.basis)
            for (const auto& g : gens) {
                Element p = multiply(alg, x, g);
                auto c = ratio_on_line(x, p);
                if (!c) {
                    if (w.exact) throw std::logic_error("common eigenvector failed the exact ideal check");
                    continue;
                }
                w.checked.push_back({x, g, p, *c});
            }
        if (!w.exact) {
            out.certified = false;
            out.notes.push_back("ideal line space with numeric eigenvalues is undetermined");
        }
        out.spaces.push_back(std::move(w));
    }
    std::sort(out.spaces.begin(), out.spaces.end(), [](const IdealWitness& x, const IdealWitness& y) {
        return compare_vectors(x.basis.front().coords(), y.basis.front().coords()) < 0;
    });
    auto delta = std::optional<unsigned>();
    {
        const Vector& b = alg.b();
        bool tail_zero = true;
        for (std::size_t k = 1; k < b.size(); ++k) tail_zero = tail_zero && b[k].is_zero();
        if (tail_zero && b[0].is_one()) delta = 1;
    }
    if (delta) {
        PaperIdealCriteria paper = paper_ideal_criteria(alg);
        if (out.certified) {
            std::vector<std::vector<Vector>> general, printed = paper.a_spaces;
            for (const auto& s : out.spaces) general.push_back(coords_of(s.basis));
            if (paper.b_line) printed.push_back({paper.b_line->coords()});
            auto covered = [&](const std::vector<Vector>& s, const std::vector<std::vector<Vector>>& by) {
                return std::any_of(by.begin(), by.end(), [&](const std::vector<Vector>& t) {
                    return std::all_of(s.begin(), s.end(), [&](const Vector& v) { return in_span(t, v); });
                });
            };
            bool ok = true;
            for (const auto& s : general) ok = ok && covered(s, printed);
            for (const auto& s : printed) ok = ok && covered(s, general);
            paper.agrees = ok;
        }
        out.paper = std::move(paper);
    }
    return out;
}

PaperIdealCriteria paper_ideal_criteria(const Algebra& alg) {
    const std::size_t n = alg.n();
    const Vector& b = alg.b();
    if (!b[0].is_one()) throw PreconditionError("ideal criteria need a canonical algebra with delta = 1");
    for (std::size_t k = 1; k < n; ++k)
        if (!b[k].is_zero()) throw PreconditionError("ideal criteria need a canonical algebra with delta = 1");
    PaperIdealCriteria out;
    if (n >= 2) {
        Matrix A1(n - 1, n - 1);
        Vector col(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            col[i - 1] = alg.A()(i, 0);
            for (std::size_t j = 1; j < n; ++j) A1(i - 1, j - 1) = alg.A()(i, j);
        }
        RootSet roots = find_roots(characteristic_polynomial(A1), alg.field());
        for (const auto& root : roots.roots) {
            if (!root.exact) continue;
            std::vector<Vector> E = left_kernel(A1 - root.value * Matrix::identity(n - 1));
            Matrix dots(E.size(), 1);
            for (std::size_t k = 0; k < E.size(); ++k) dots(k, 0) = dot(E[k], col);
            std::vector<Vector> piece;
            for (const auto& t : left_kernel(dots)) {
                Vector v(n + 1, Scalar(0));
                for (std::size_t k = 0; k < E.size(); ++k)
                    for (std::size_t j = 0; j < n - 1; ++j) v[j + 1] += t[k] * E[k][j];
                piece.push_back(v);
            }
            piece = span_basis(piece, n + 1);
            if (!piece.empty()) out.a_spaces.push_back(piece);
        }
    }
    bool rows_zero = true;
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rows_zero = rows_zero && alg.A()(i, j).is_zero();
    if (rows_zero) out.b_line = Element(alg.A().row(0), Scalar(1));
    return out;
}

FullRankForm full_rank_subalgebra_form(const Algebra& alg, const std::vector<Element>& sub) {
    if (rank(alg.A()) != alg.n()) throw PreconditionError("theorem inapplicable: rank A < n");
    auto search = find_natural_basis(alg, sub, alg.dim());
    if (!search.basis) throw PreconditionError("not an evolution subalgebra: " + search.obstruction);
    const std::size_t dim = alg.dim();
    std::vector<Vector> S = span_basis(coords_of(sub), dim);
    std::vector<Vector> H;
    for (std::size_t i = 1; i <= alg.n(); ++i) H.push_back(Element::h(alg.n(), i).coords());
    FullRankForm out;
    out.f = elements_of(intersect(S, H, dim));
    out.has_r = in_span(S, Element::r(alg.n()).coords());
    if (out.f.size() + (out.has_r ? 1 : 0) != S.size())
        throw std::logic_error("subalgebra does not split as h-part plus r for rank A = n");
    return out;
}

}  // namespace eacp
