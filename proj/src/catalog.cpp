#include "eacp/catalog.hpp"

#include "eacp/eigen.hpp"

#include <algorithm>
#include <regex>

namespace eacp {

namespace {

const Scalar kHalf = Scalar(Rational(1, 2));

const char* base_name(CatalogName n) {
    static const char* names[] = {"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8"};
    return names[static_cast<int>(n)];
}

}  // namespace

std::size_t CatalogId::param_count() const {
    if (dim != 3) return 0;
    switch (name) {
        case CatalogName::C5:
        case CatalogName::C7: return 1;
        case CatalogName::C6: return 2;
        default: return 0;
    }
}

CatalogId CatalogId::parse(const std::string& text) {
    static const std::regex re(R"(^\s*([23])[dD]\s*:\s*[cC]([1-8])\s*(?:\(([^()]*)\))?\s*$)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw std::invalid_argument("malformed catalog id '" + text + "'");
    CatalogId id;
    id.dim = static_cast<unsigned>(std::stoi(m[1]));
    id.name = static_cast<CatalogName>(std::stoi(m[2]) - 1);
    if (id.dim == 2 && id.name != CatalogName::C1 && id.name != CatalogName::C2)
        throw std::invalid_argument("the 2D catalog has only C1 and C2");
    std::vector<Scalar> params;
    if (m[3].matched) {
        std::string inner = m[3];
        std::size_t start = 0;
        while (true) {
            std::size_t comma = inner.find(',', start);
            std::string tok = inner.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            tok.erase(0, tok.find_first_not_of(" \t"));
            tok.erase(tok.find_last_not_of(" \t") + 1);
            params.push_back(Scalar::from_string(tok));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    if (params.size() != id.param_count())
        throw std::invalid_argument(std::string(base_name(id.name)) + " takes " + std::to_string(id.param_count()) +
                                    " parameter(s)");
    switch (id.name) {
        case CatalogName::C5:
            id.beta = params[0];
            if (id.beta.is_zero()) throw std::invalid_argument("C5 needs beta != 0");
            break;
        case CatalogName::C6:
            id.alpha = params[0];
            id.beta = params[1];
            break;
        case CatalogName::C7: id.alpha = params[0]; break;
        default: break;
    }
    return id;
}

std::string CatalogId::to_string() const {
    std::string s = std::to_string(dim) + "D:" + base_name(name);
    if (dim != 3) return s;
    switch (name) {
        case CatalogName::C5: return s + "(" + beta.to_string() + ")";
        case CatalogName::C6: return s + "(" + alpha.to_string() + "," + beta.to_string() + ")";
        case CatalogName::C7: return s + "(" + alpha.to_string() + ")";
        default: return s;
    }
}

bool catalog_equivalent(const CatalogId& x, const CatalogId& y) {
    if (x.dim != y.dim || x.name != y.name) return false;
    if (x.dim != 3) return true;
    switch (x.name) {
        case CatalogName::C5: return x.beta == y.beta || (x.beta * y.beta).is_one();
        case CatalogName::C6:
            return x.alpha.is_zero() == y.alpha.is_zero() && x.beta.is_zero() == y.beta.is_zero() &&
                   x.alpha * x.alpha * y.beta == y.alpha * y.alpha * x.beta;
        case CatalogName::C7: return x.alpha == y.alpha;
        default: return true;
    }
}

std::vector<CatalogId> catalog_entries(const Scalar& alpha, const Scalar& beta) {
    std::vector<CatalogId> out;
    out.push_back({2, CatalogName::C1, 0, 0});
    out.push_back({2, CatalogName::C2, 0, 0});
    for (int k = 0; k < 8; ++k) {
        CatalogId id{3, static_cast<CatalogName>(k), 0, 0};
        if (id.name == CatalogName::C5) id.beta = beta;
        if (id.name == CatalogName::C6) id.alpha = alpha, id.beta = beta;
        if (id.name == CatalogName::C7) id.alpha = alpha;
        out.push_back(id);
    }
    return out;
}

Algebra build_canonical(const CatalogId& id) {
    const Scalar z(0);
    if (id.dim == 2) {
        if (id.name == CatalogName::C1) return new_algebra({{Scalar(1)}}, {z}, id.to_string());
        if (id.name == CatalogName::C2) return new_algebra({{kHalf}}, {kHalf}, id.to_string());
        throw std::invalid_argument("the 2D catalog has only C1 and C2");
    }
    if (id.dim != 3) throw std::invalid_argument("catalog covers dimensions 2 and 3");
    const Scalar h = kHalf;
    switch (id.name) {
        case CatalogName::C1: return new_algebra({{z, z}, {z, z}}, {h, z}, id.to_string());
        case CatalogName::C2: return new_algebra({{z, h}, {z, z}}, {z, z}, id.to_string());
        case CatalogName::C3: return new_algebra({{h, z}, {z, z}}, {h, z}, id.to_string());
        case CatalogName::C4: return new_algebra({{h, h}, {z, h}}, {z, z}, id.to_string());
        case CatalogName::C5:
            if (id.beta.is_zero()) throw std::invalid_argument("C5 needs beta != 0");
            return new_algebra({{h, z}, {z, h * id.beta}}, {z, z}, id.to_string());
        case CatalogName::C6: return new_algebra({{h * id.alpha, h * id.beta}, {h, z}}, {h, z}, id.to_string());
        case CatalogName::C7: return new_algebra({{h * id.alpha, z}, {z, h}}, {h, z}, id.to_string());
        case CatalogName::C8: return new_algebra({{h, h}, {z, h}}, {h, z}, id.to_string());
    }
    throw std::logic_error("unreachable");
}

std::size_t derived_dimension(const Algebra& alg) { return rank(alg.structure().rect()); }

std::vector<std::vector<Element>> candidate_subspaces_3d(const Algebra& alg) {
    if (alg.n() != 2) throw DimensionError("D1..D6 are defined for three-dimensional algebras");
    Element h1 = alg.h(1), h2 = alg.h(2), r = alg.r();
    return {{h1}, {h1, h2}, {h1, r}, {h2}, {h2, r}, {r}};
}

PlainIdealCheck is_plain_ideal(const Algebra& alg, const std::vector<Element>& sub) {
    std::vector<Vector> rows = span_basis(coords_of(sub), alg.dim());
    for (const auto& x : elements_of(rows))
        for (const auto& g : alg.generators()) {
            Element p = multiply(alg, x, g);
            if (!in_span(rows, p.coords())) return {false, CheckedProduct{x, g, p, Scalar(0)}};
        }
    return {};
}

EvolutionIdealCheck is_evolution_ideal(const Algebra& alg, const std::vector<Element>& sub) {
    EvolutionIdealCheck out;
    auto plain = is_plain_ideal(alg, sub);
    out.plain = plain.ok;
    if (!plain.ok) {
        out.obstruction = "not an ideal: a product leaves the subspace";
        return out;
    }
    auto search = find_natural_basis(alg, sub);
    out.natural = search.basis;
    out.obstruction = search.obstruction;
    return out;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Simple: return "simple";
        case Verdict::NotSimple: return "not simple";
        case Verdict::Undetermined: return "undetermined";
    }
    return "?";
}

namespace {

std::vector<Matrix> operator_family(const Algebra& alg, bool transpose) {
    std::vector<Matrix> out;
    for (const auto& g : alg.generators()) {
        Matrix T = right_operator_matrix(alg, g);
        out.push_back(transpose ? T.transpose() : T);
    }
    return out;
}

bool exact_rows(const std::vector<Vector>& rows) {
    for (const auto& r : rows)
        for (const auto& s : r)
            if (!s.exact()) return false;
    return true;
}

bool candidate_before(const IdealCandidate& x, const IdealCandidate& y) {
    if (x.line_convention != y.line_convention) return !x.line_convention;
    if (x.basis.size() != y.basis.size()) return x.basis.size() < y.basis.size();
    for (std::size_t k = 0; k < x.basis.size(); ++k) {
        int c = compare_vectors(x.basis[k].coords(), y.basis[k].coords());
        if (c != 0) return c < 0;
    }
    return false;
}

}  // namespace

SimplicityReport is_simple(const Algebra& alg) {
    const std::size_t dim = alg.dim();
    if (dim > 3) throw DimensionError("simplicity is decided only up to total dimension 3");
    SimplicityReport rep;
    SquareZeroPieces pieces = square_zero_pieces(alg);
    std::vector<IdealCandidate> found;
    bool certified = true;

    IdealSearch lines = one_dim_ideals(alg);
    certified = certified && lines.certified;
    for (const auto& space : lines.spaces) {
        if (!space.exact) continue;
        std::vector<Vector> S = coords_of(space.basis);
        std::vector<Vector> SH = intersect(S, pieces.H, dim), SW = intersect(S, pieces.W, dim);
        IdealCandidate c;
        Vector v = !SH.empty() ? SH[0] : !SW.empty() ? SW[0] : S[0];
        v = normalize_leading(v);
        c.basis = {Element::from_coords(v)};
        if (!SH.empty() || !SW.empty())
            c.natural = SubalgebraBasis{{}, c.basis[0]};
        else
            c.line_convention = true;
        found.push_back(std::move(c));
    }
    std::size_t plane_spaces = 0;
    if (dim == 3) {
        EigenSearch es = common_left_eigenspaces(operator_family(alg, true), dim);
        certified = certified && es.certified;
        std::vector<Vector> extra = pieces.H;
        extra.insert(extra.end(), pieces.W.begin(), pieces.W.end());
        extra.push_back(alg.r().coords());
        for (const auto& space : es.spaces) {
            const auto& Phi = space.basis;
            if (!space.exact || !exact_rows(Phi)) {
                certified = false;
                continue;
            }
            ++plane_spaces;
            std::vector<std::vector<Vector>> planes;
            for (const auto& phi : Phi) planes.push_back(span_basis(nullspace(Matrix::from_rows({phi})), dim));
            if (Phi.size() == 2) {
                std::vector<Vector> L = nullspace(Matrix::from_rows(Phi));
                for (const auto& v : extra) {
                    if (in_span(L, v)) continue;
                    std::vector<Vector> P = L;
                    P.push_back(v);
                    planes.push_back(span_basis(P, dim));
                }
            } else if (Phi.size() == 3) {
                for (std::size_t i = 0; i < extra.size(); ++i)
                    for (std::size_t j = i + 1; j < extra.size(); ++j) {
                        auto P = span_basis({extra[i], extra[j]}, dim);
                        if (P.size() == 2) planes.push_back(P);
                    }
            }
            std::vector<std::vector<Vector>> seen;
            for (const auto& P : planes) {
                if (P.size() != 2) continue;
                if (std::any_of(seen.begin(), seen.end(), [&](const auto& q) { return same_span(P, q, dim); })) continue;
                seen.push_back(P);
                auto ann = nullspace(Matrix::from_rows(P));
                if (ann.size() != 1 || !in_span(Phi, ann[0])) continue;
                std::vector<Element> basis = elements_of(P);
                if (!is_plain_ideal(alg, basis).ok) throw std::logic_error("invariant plane is not an ideal");
                auto nat = find_natural_basis(alg, basis);
                if (nat.basis) {
                    found.push_back({basis, nat.basis, false});
                } else {
                    rep.notes.push_back("ideal plane without a natural basis skipped: " + nat.obstruction);
                }
            }
        }
    }
    rep.searched = "lines: common eigenvectors of R_h1..R_hn, R_r (" + std::to_string(lines.spaces.size()) + " spaces)";
    if (dim == 3)
        rep.searched += "; planes: annihilators found as common eigenvectors of the transposed operators (" +
                        std::to_string(plane_spaces) + " spaces)";
    if (!found.empty()) {
        std::sort(found.begin(), found.end(), candidate_before);
        rep.verdict = Verdict::NotSimple;
        rep.witness = found.front();
        if (rep.witness->line_convention)
            rep.notes.push_back("witness line is not square-zero; counted as an evolution ideal by the line convention");
        return rep;
    }
    if (!certified) {
        rep.verdict = Verdict::Undetermined;
        rep.reason = "an eigenvalue step needed numeric roots and no exact ideal was found";
        return rep;
    }
    rep.verdict = Verdict::Simple;
    return rep;
}

bool IdealTableRow::matches() const {
    for (std::size_t j = 0; j < 6; ++j) {
        if (paper[j] == PaperEntry::Silent) continue;
        if ((paper[j] == PaperEntry::Ideal) != computed[j]) return false;
    }
    return true;
}

std::vector<IdealTableRow> ideal_table() {
    using P = PaperEntry;
    constexpr P I = P::Ideal, N = P::NotIdeal, S = P::Silent;
    struct Spec {
        const char* id;
        std::array<P, 6> paper;
    };
    const Spec rows[] = {
        {"3D:C1", {N, N, I, I, I, I}},      {"3D:C2", {N, I, S, I, I, N}},
        {"3D:C3", {N, N, I, I, N, N}},      {"3D:C4", {N, I, S, I, I, N}},
        {"3D:C5(1)", {I, I, N, I, N, N}},   {"3D:C6(1,1)", {N, N, S, N, S, N}},
        {"3D:C7(1)", {N, N, N, I, N, N}},   {"3D:C8", {N, N, S, I, N, N}},
        {"3D:C6(1,0)", {N, N, I, N, S, N}},
    };
    std::vector<IdealTableRow> out;
    for (const auto& spec : rows) {
        IdealTableRow row;
        row.id = CatalogId::parse(spec.id);
        row.paper = spec.paper;
        Algebra alg = build_canonical(row.id);
        auto D = candidate_subspaces_3d(alg);
        for (std::size_t j = 0; j < 6; ++j) row.computed[j] = is_plain_ideal(alg, D[j]).ok;
        out.push_back(row);
    }
    return out;
}

namespace {

Element hvec(const Vector& y) { return Element(y, Scalar(0)); }

/// Verified isomorphism onto the catalog algebra, if the rows work.
std::optional<BasisChange> try_iso(const Algebra& alg, const CatalogId& id, const std::vector<Element>& rows) {
    Matrix P = Matrix::from_rows(coords_of(rows));
    if (rank(P) != alg.dim()) return std::nullopt;
    BasisChange change{P};
    try {
        Algebra img = change_basis(alg, change);
        if (img.structure() == build_canonical(id).structure()) return change;
    } catch (const AlgebraMismatch&) {
    }
    return std::nullopt;
}

InvariantReport invariants_of(const Algebra& alg) {
    InvariantReport rep;
    rep.dim_c2 = derived_dimension(alg);
    rep.delta = canonicalize(alg).delta;
    rep.rank_A = rank(alg.A());
    rep.has_idempotent = !idempotents(alg).families.empty();
    rep.ideal_line_spaces = one_dim_ideals(alg).spaces.size();
    RootSet roots = find_roots(characteristic_polynomial(alg.A()), alg.field());
    for (const auto& r : roots.roots) rep.spectrum.push_back(r.value.to_string() + (r.exact ? "" : " (numeric)"));
    return rep;
}

Classification finish(const Algebra& alg, Classification c, const CatalogId& id, const std::vector<Element>& rows) {
    if (auto iso = try_iso(alg, id, rows)) {
        c.id = id;
        c.iso = *iso;
    } else {
        c.reason = "candidate " + id.to_string() + " but the constructed basis change did not verify";
    }
    return c;
}

}  // namespace

Classification classify_2d(const Algebra& alg) {
    if (alg.n() != 1) throw DimensionError("classify_2d needs a two-dimensional algebra");
    Classification c;
    c.invariants = invariants_of(alg);
    const Scalar a = alg.A()(0, 0), b = alg.b()[0];
    if (a.is_zero() && b.is_zero()) {
        c.invariants.route = "trivial";
        c.reason = "all products vanish; the trivial algebra is not in the catalog";
        return c;
    }
    if (b.is_zero()) {
        c.invariants.route = "hr in span(h)";
        return finish(alg, c, CatalogId::parse("2D:C1"), {alg.h(1), a.inverse() * alg.r()});
    }
    if (a.is_zero()) {
        c.invariants.route = "hr in span(r)";
        return finish(alg, c, CatalogId::parse("2D:C1"), {alg.r(), b.inverse() * alg.h(1)});
    }
    c.invariants.route = "hr mixes h and r";
    return finish(alg, c, CatalogId::parse("2D:C2"),
                  {(kHalf / b) * alg.h(1), (kHalf / a) * alg.r()});
}

namespace {

Classification classify_rank_one(const Algebra& alg, Classification c) {
    const std::size_t n = alg.n();
    const Matrix M = alg.structure().rect();
    std::size_t k0 = 0;
    while (k0 < n && is_zero(M.row(k0))) ++k0;
    Element v = Element::from_coords(M.row(k0));
    std::vector<Scalar> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = (*coordinates({v.coords()}, M.row(i)))[0];
    std::vector<Vector> K = left_kernel(M);
    Element ann = hvec(K.at(0));
    Element v2 = multiply(alg, v, v);
    if (!v2.is_zero()) {
        c.invariants.route = "dim C^2 = 1, generator of C^2 not square-zero";
        Scalar cc = (*coordinates({v.coords()}, v2.coords()))[0];
        Element e = cc.inverse() * v;
        Element h1 = hvec(e.alpha());
        Element r1 = e.beta() * alg.r();
        return finish(alg, c, CatalogId::parse("3D:C3"), {h1, ann, r1});
    }
    bool annihilates = true;
    for (const auto& g : alg.generators()) annihilates = annihilates && multiply(alg, v, g).is_zero();
    if (annihilates) {
        c.invariants.route = "dim C^2 = 1, C^2 annihilates the algebra";
        for (std::size_t j = 0; j < n; ++j)
            if (!w[j].is_zero())
                return finish(alg, c, CatalogId::parse("3D:C2"),
                              {(kHalf / w[j]) * alg.h(j + 1), v, alg.r()});
    } else {
        c.invariants.route = "dim C^2 = 1, C^2 square-zero but not annihilating";
        std::vector<Element> cands;
        for (std::size_t j = 1; j <= n; ++j) cands.push_back(alg.h(j));
        cands.push_back(alg.r());
        for (const auto& cand : cands) {
            auto s = coordinates({v.coords()}, multiply(alg, cand, v).coords());
            if (!s || (*s)[0].is_zero()) continue;
            if (!independent({cand.coords(), ann.coords(), v.coords()})) continue;
            return finish(alg, c, CatalogId::parse("3D:C1"), {(kHalf / (*s)[0]) * cand, ann, v});
        }
    }
    c.reason = "no construction applied";
    return c;
}

Classification classify_rank_two(const Algebra& alg, Classification c) {
    const std::size_t n = 2;
    const Matrix& A = alg.A();
    const Vector& b = alg.b();
    const Matrix I = Matrix::identity(n);
    if (is_zero(b)) {
        RootSet roots = find_roots(characteristic_polynomial(A), alg.field());
        if (roots.numeric_fallback || roots.roots.empty()) {
            c.invariants.route = "dim C^2 = 2, b = 0";
            c.reason = "eigenvalues of A are not available exactly";
            return c;
        }
        if (roots.roots.size() == 2) {
            c.invariants.route = "dim C^2 = 2, b = 0, two eigenvalues";
            const Scalar l1 = roots.roots[0].value, l2 = roots.roots[1].value;
            Vector q1 = left_kernel(A - l1 * I).at(0), q2 = left_kernel(A - l2 * I).at(0);
            CatalogId id{3, CatalogName::C5, 0, l2 / l1};
            return finish(alg, c, id, {hvec(q1), hvec(q2), (Scalar(2) * l1).inverse() * alg.r()});
        }
        const Scalar lam = roots.roots[0].value;
        const Scalar u = (Scalar(2) * lam).inverse();
        Matrix N = u * A - kHalf * I;
        if (N.is_zero()) {
            c.invariants.route = "dim C^2 = 2, b = 0, scalar A";
            return finish(alg, c, CatalogId::parse("3D:C5(1)"), {alg.h(1), alg.h(2), u * alg.r()});
        }
        c.invariants.route = "dim C^2 = 2, b = 0, Jordan block";
        for (std::size_t j = 1; j <= n; ++j) {
            Vector q1 = alg.h(j).alpha();
            Vector q1N = std::span<const Scalar>(q1) * N;
            if (is_zero(q1N)) continue;
            return finish(alg, c, CatalogId::parse("3D:C4"), {hvec(q1), hvec(scale(Scalar(2), q1N)), u * alg.r()});
        }
        c.reason = "no construction applied";
        return c;
    }
    // b != 0: phi(y) = y.b is invariant, its kernel is the line through nv
    Vector nv{b[1], -b[0]};
    Vector nA = std::span<const Scalar>(nv) * A;
    if (!in_span({nv}, nA)) {
        c.invariants.route = "dim C^2 = 2, b != 0, ker(b) not A-invariant";
        auto build = [&](const Scalar& u) {
            Scalar t = (Scalar(4) * u * dot(nA, b)).inverse();
            Element h2 = t * hvec(nv);
            Element h1 = (Scalar(2) * u * t) * hvec(nA);
            Vector img = std::span<const Scalar>(h1.alpha()) * A;
            auto co = coordinates({h1.alpha(), h2.alpha()}, scale(u, img));
            CatalogId id{3, CatalogName::C6, Scalar(2) * (*co)[0], Scalar(2) * (*co)[1]};
            return std::make_pair(id, std::vector<Element>{h1, h2, u * alg.r()});
        };
        auto [id, rows] = build(Scalar(1));
        if (!id.alpha.is_zero()) std::tie(id, rows) = build(id.alpha.inverse());
        return finish(alg, c, id, rows);
    }
    const Scalar mu = (*coordinates({nv}, nA))[0];
    if (mu.is_zero()) {
        c.reason = "ker(b) is annihilated by A, impossible when dim C^2 = 2";
        return c;
    }
    const Scalar u = (Scalar(2) * mu).inverse();
    Matrix B = u * A;
    const Scalar nu = B(0, 0) + B(1, 1) - kHalf;
    std::size_t j = b[0].is_zero() ? 1 : 0;
    Element h1_any = (kHalf / b[j]) * alg.h(j + 1);
    if (!(nu == kHalf)) {
        c.invariants.route = "dim C^2 = 2, b != 0, ker(b) invariant, distinct eigenvalues";
        Vector y = left_kernel(B - nu * I).at(0);
        Element h1 = (kHalf / dot(y, b)) * hvec(y);
        return finish(alg, c, CatalogId{3, CatalogName::C7, Scalar(2) * nu, 0}, {h1, hvec(nv), u * alg.r()});
    }
    Matrix Nm = B - kHalf * I;
    if (Nm.is_zero()) {
        c.invariants.route = "dim C^2 = 2, b != 0, scalar A";
        return finish(alg, c, CatalogId::parse("3D:C7(1)"), {h1_any, hvec(nv), u * alg.r()});
    }
    c.invariants.route = "dim C^2 = 2, b != 0, Jordan block";
    Vector h2 = scale(Scalar(2), std::span<const Scalar>(h1_any.alpha()) * Nm);
    return finish(alg, c, CatalogId::parse("3D:C8"), {h1_any, hvec(h2), u * alg.r()});
}

}  // namespace

Classification classify_3d(const Algebra& alg) {
    if (alg.n() != 2) throw DimensionError("classify_3d needs a three-dimensional algebra");
    Classification c;
    c.invariants = invariants_of(alg);
    switch (c.invariants.dim_c2) {
        case 0:
            c.invariants.route = "trivial";
            c.reason = "all products vanish; the trivial algebra is not in the catalog";
            return c;
        case 1: return classify_rank_one(alg, c);
        default: return classify_rank_two(alg, c);
    }
}

}  // namespace eacp
