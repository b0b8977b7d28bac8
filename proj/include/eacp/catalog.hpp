#ifndef EACP_CATALOG_HPP
#define EACP_CATALOG_HPP

#include "eacp/substructure.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace eacp {

enum class CatalogName { C1, C2, C3, C4, C5, C6, C7, C8 };

/// "2D:C1", "3D:C5(2)", "3D:C6(1,0)", "3D:C7(-1/2)".
struct CatalogId {
    unsigned dim = 3;
    CatalogName name = CatalogName::C1;
    Scalar alpha{0};  // C6, C7
    Scalar beta{0};   // C5, C6

    static CatalogId parse(const std::string& text);
    std::string to_string() const;
    std::size_t param_count() const;
};

/// Same algebra up to the parameter symmetries: C5(b) ~ C5(1/b),
/// C6(a, b) ~ C6(u a, u^2 b) for u != 0.
bool catalog_equivalent(const CatalogId& x, const CatalogId& y);

/// Every catalog entry with the given parameters where the family is free.
std::vector<CatalogId> catalog_entries(const Scalar& alpha = Scalar(1), const Scalar& beta = Scalar(1));

Algebra build_canonical(const CatalogId& id);

/// dim C^2 = rank [A | b].
std::size_t derived_dimension(const Algebra& alg);

/// D1..D6 = {h1}, {h1,h2}, {h1,r}, {h2}, {h2,r}, {r} for n = 2.
std::vector<std::vector<Element>> candidate_subspaces_3d(const Algebra& alg);

struct PlainIdealCheck {
    bool ok = true;
    std::optional<CheckedProduct> escape;  // x in the subspace, y a generator, x y outside
};

PlainIdealCheck is_plain_ideal(const Algebra& alg, const std::vector<Element>& sub);

struct EvolutionIdealCheck {
    bool plain = false;
    std::optional<SubalgebraBasis> natural;
    std::string obstruction;
    bool accepted() const { return plain && natural.has_value(); }
};

/// Plain ideal with a natural basis; dimension at most 3.
EvolutionIdealCheck is_evolution_ideal(const Algebra& alg, const std::vector<Element>& sub);

enum class Verdict { Simple, NotSimple, Undetermined };
std::string to_string(Verdict v);

struct IdealCandidate {
    std::vector<Element> basis;
    std::optional<SubalgebraBasis> natural;
    /// A line x with x^2 = c x, c != 0: not square-zero, so it has no natural
    /// basis in the strict sense, but counts as an evolution ideal the way the
    /// two-dimensional verdicts count <h + r>.
    bool line_convention = false;
};

struct SimplicityReport {
    Verdict verdict = Verdict::Undetermined;
    std::optional<IdealCandidate> witness;
    std::string searched;
    std::string reason;
    std::vector<std::string> notes;
};

/// Decides simplicity for algebras of total dimension <= 3.
SimplicityReport is_simple(const Algebra& alg);

enum class PaperEntry { Ideal, NotIdeal, Silent };

struct IdealTableRow {
    CatalogId id;
    std::array<PaperEntry, 6> paper{};
    std::array<bool, 6> computed{};
    bool matches() const;  // every stated entry agrees
};

/// The D1..D6 ideal table for C1..C8 at alpha = beta = 1 plus C6(1,0),
/// with the entries stated in the literature alongside.
std::vector<IdealTableRow> ideal_table();

struct InvariantReport {
    std::size_t dim_c2 = 0;
    unsigned delta = 0;
    std::size_t rank_A = 0;
    bool has_idempotent = false;
    std::size_t ideal_line_spaces = 0;
    std::vector<std::string> spectrum;  // roots of det(t I - A)
    std::string route;                  // which recognition branch ran
};

struct Classification {
    std::optional<CatalogId> id;      // set only with a verified isomorphism
    std::optional<BasisChange> iso;   // change_basis(alg, *iso) == build_canonical(*id)
    InvariantReport invariants;
    std::string reason;               // why it is undetermined
    bool matched() const { return id.has_value(); }
};

Classification classify_2d(const Algebra& alg);
Classification classify_3d(const Algebra& alg);

}  // namespace eacp

#endif  // EACP_CATALOG_HPP
