#include "eacp/verify.hpp"

#include "eacp/catalog.hpp"
#include "eacp/io.hpp"
#include "eacp/periodicity.hpp"

#include <functional>
#include <random>

namespace eacp {

std::string to_string(PropertyResult::Status s) {
    switch (s) {
        case PropertyResult::Status::Pass: return "pass";
        case PropertyResult::Status::Fail: return "fail";
        case PropertyResult::Status::Skip: return "skip";
        case PropertyResult::Status::Undetermined: return "undetermined";
    }
    return "?";
}

namespace {

using Status = PropertyResult::Status;

struct Outcome {
    Status status = Status::Pass;
    std::string detail;
};

Outcome pass(std::string d = "") { return {Status::Pass, std::move(d)}; }
Outcome fail(std::string d) { return {Status::Fail, std::move(d)}; }
Outcome skip(std::string d) { return {Status::Skip, std::move(d)}; }

class Sampler {
public:
    Sampler(std::uint64_t seed, const Field& f) : rng_(seed), field_(f) {}

    Scalar scalar() {
        std::uniform_int_distribution<int> num(-2, 2), den(1, 2);
        return Scalar(Rational(num(rng_), den(rng_))).lift(field_);
    }
    Element element(std::size_t n) {
        Vector a;
        for (std::size_t i = 0; i < n; ++i) a.push_back(scalar());
        return Element(std::move(a), scalar());
    }

private:
    std::mt19937_64 rng_;
    Field field_;
};

bool on_line(const Element& x, const Element& p) { return in_span({x.coords()}, p.coords()); }

}  // namespace

std::vector<PropertyResult> verify_algebra(const Algebra& alg, std::uint64_t seed, unsigned m_max) {
    std::vector<PropertyResult> out;
    const std::size_t n = alg.n();
    Sampler sample(seed, alg.field());
    const unsigned trials = 20;

    auto run = [&](const std::string& module, const std::string& name, const std::function<Outcome()>& body) {
        PropertyResult r{module, name, Status::Pass, ""};
        try {
            Outcome o = body();
            r.status = o.status;
            r.detail = std::move(o.detail);
        } catch (const std::exception& e) {
            r.status = Status::Fail;
            r.detail = std::string("exception: ") + e.what();
        }
        out.push_back(std::move(r));
    };

    // algebra_core
    run("algebra_core", "commutativity", [&] {
        for (unsigned t = 0; t < trials; ++t) {
            Element x = sample.element(n), y = sample.element(n);
            if (!(multiply(alg, x, y) == multiply(alg, y, x))) return fail("xy != yx for x = " + format_element(x));
        }
        return pass();
    });
    run("algebra_core", "bilinearity", [&] {
        for (unsigned t = 0; t < trials; ++t) {
            Element x = sample.element(n), y = sample.element(n), z = sample.element(n);
            Scalar c = sample.scalar();
            if (!(multiply(alg, c * x + y, z) == c * multiply(alg, x, z) + multiply(alg, y, z)))
                return fail("(cx + y)z != c xz + yz");
        }
        return pass();
    });
    run("algebra_core", "multiplication table", [&] {
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t j = 1; j <= n; ++j)
                if (!multiply(alg, alg.h(i), alg.h(j)).is_zero()) return fail("h_i h_j != 0");
            if (!(multiply(alg, alg.h(i), alg.r()) == Element(alg.A().row(i - 1), alg.b()[i - 1])))
                return fail("h_i r does not match row i of M");
        }
        if (!multiply(alg, alg.r(), alg.r()).is_zero()) return fail("r r != 0");
        return pass();
    });
    run("algebra_core", "square formula", [&] {
        for (unsigned t = 0; t < trials; ++t) {
            Element x = sample.element(n);
            Vector yA = std::span<const Scalar>(x.alpha()) * alg.A();
            Element expect = (Scalar(2) * x.beta()) * Element(yA, dot(x.alpha(), alg.b()));
            if (!(multiply(alg, x, x) == expect)) return fail("x^2 != 2 beta (y^T A, y^T b)");
        }
        return pass();
    });

    // periodicity
    const unsigned oracle_cap = 12;
    run("periodicity", "right period oracle", [&] {
        bool unknown = false;
        for (std::size_t i = 1; i <= n; ++i) {
            PeriodResult p = right_period(alg, i, m_max);
            std::optional<unsigned> brute;
            const unsigned cap = std::max(m_max, oracle_cap);
            Element x = alg.h(i);
            for (unsigned m = 1; m <= cap && !brute; ++m) {
                x = multiply(alg, x, alg.r());
                if (occurs(x, GeneratorIndex::h(i))) brute = m;
            }
            if (p.kind == PeriodResult::Kind::Finite && brute != p.value)
                return fail("p_" + std::to_string(i) + " = " + p.to_string() + " but the oracle says " +
                            (brute ? std::to_string(*brute) : "none"));
            if (p.kind == PeriodResult::Kind::Infinite && brute)
                return fail("p_" + std::to_string(i) + " = inf contradicted at m = " + std::to_string(*brute));
            if (p.kind == PeriodResult::Kind::Unknown) {
                if (brute && *brute <= m_max) return fail("p_" + std::to_string(i) + " unknown but found by the oracle");
                unknown = true;
            }
        }
        return unknown ? Outcome{Status::Undetermined, "some right period is unknown within m_max"} : pass();
    });
    run("periodicity", "plenary period oracle", [&] {
        bool unknown = false;
        for (std::size_t i = 1; i <= n; ++i) {
            PeriodResult q = plenary_period(alg, i, m_max);
            std::optional<unsigned> brute;
            bool died = false;
            Element x = multiply(alg, alg.h(i), alg.r());
            const unsigned cap = std::min(std::max(m_max, oracle_cap), 14U);
            for (unsigned m = 1; m <= cap && !brute && !died; ++m) {
                x = multiply(alg, x, x);
                if (occurs(x, GeneratorIndex::h(i))) brute = m;
                if (x.is_zero()) died = true;
            }
            const std::string label = "q_" + std::to_string(i);
            if (q.kind == PeriodResult::Kind::Finite && brute != q.value)
                return fail(label + " = " + q.to_string() + " but the oracle says " + (brute ? std::to_string(*brute) : "none"));
            if (q.kind == PeriodResult::Kind::Infinite && brute)
                return fail(label + " = inf contradicted at m = " + std::to_string(*brute));
            if (q.kind == PeriodResult::Kind::Unknown) {
                if (brute && *brute <= m_max) return fail(label + " unknown but found by the oracle");
                unknown = true;
            }
        }
        return unknown ? Outcome{Status::Undetermined, "some plenary period is unknown within m_max"} : pass();
    });
    run("periodicity", "closed form", [&] {
        for (std::size_t i = 1; i <= n; ++i) {
            Element direct = multiply(alg, alg.h(i), alg.r());
            for (unsigned m = 1; m <= 4; ++m) {
                direct = multiply(alg, direct, direct);
                ClosedFormPlenary cf = plenary_power_closed_form(alg, i, m);
                if (!(cf.total() == direct))
                    return fail("closed form differs from repeated squaring at i = " + std::to_string(i) +
                                ", m = " + std::to_string(m));
                if (m > 1) {
                    Scalar prev = plenary_power_closed_form(alg, i, m - 1).coeff.expand();
                    Vector v = alg.b();
                    for (unsigned j = 1; j < m; ++j) v = alg.A() * std::span<const Scalar>(v);
                    if (!(cf.coeff.expand() == Scalar(2) * prev * prev * v[i - 1]))
                        return fail("gamma recurrence fails at m = " + std::to_string(m));
                }
            }
        }
        return pass();
    });

    // basis_reduction
    run("basis_reduction", "canonical form", [&] {
        Canonical c = canonicalize(alg);
        if (!(change_basis(alg, c.change) == c.algebra)) return fail("reported change does not produce the canonical algebra");
        auto delta = canonical_delta(c.algebra);
        if (!delta || *delta != c.delta) return fail("b is not (delta, 0, ..., 0)");
        if (derived_dimension(c.algebra) != derived_dimension(alg)) return fail("dim C^2 changed");
        for (std::size_t i = 1; i <= n; ++i) {
            CorollaryCheck k = corollary_plenary_range(c.algebra, i);
            if (k.q.kind == PeriodResult::Kind::Unknown) continue;
            if (!k.holds) return fail("q_" + std::to_string(i) + " = " + k.q.to_string() + " outside " + k.admissible.to_string());
        }
        return pass("delta = " + std::to_string(c.delta));
    });
    run("basis_reduction", "extension", [&] {
        if (alg.dim() > 4) return skip("natural basis search is limited to subspaces of dimension <= 3");
        SubalgebraLines lines = one_dim_subalgebras(alg);
        std::vector<std::vector<Element>> candidates;
        auto reps = lines.representatives();
        for (const auto& a : reps) candidates.push_back({a.generator});
        for (std::size_t p = 0; p < reps.size(); ++p)
            for (std::size_t q = p + 1; q < reps.size(); ++q) candidates.push_back({reps[p].generator, reps[q].generator});
        unsigned extended = 0;
        for (const auto& cand : candidates) {
            std::vector<Vector> S = span_basis(coords_of(cand), alg.dim());
            if (S.size() != cand.size() || S.size() >= alg.dim() || escaping_product(alg, cand)) continue;
            NaturalSearch found = find_natural_basis(alg, cand);
            if (!found.basis) continue;
            Extension ext = extend_natural_basis(alg, *found.basis);
            if (!is_natural_basis(alg, ext.natural).ok) return fail("extension is not natural");
            ++extended;
        }
        return pass(std::to_string(extended) + " subalgebras extended");
    });

    // substructure
    run("substructure", "nilpotents", [&] {
        NilpotentSet N = absolute_nilpotents(alg);
        for (const auto* piece : {&N.H, &N.W}) {
            if (piece->empty()) continue;
            for (unsigned t = 0; t < trials; ++t) {
                Vector v(alg.dim(), Scalar::zero_of(alg.field()));
                for (const auto& w : *piece) v = add(v, scale(sample.scalar(), w));
                Element x = Element::from_coords(v);
                if (!multiply(alg, x, x).is_zero()) return fail("element of a nilpotent piece has a nonzero square");
            }
        }
        for (unsigned t = 0; t < trials; ++t) {
            Element x = sample.element(n);
            if (multiply(alg, x, x).is_zero() != N.contains(x)) return fail("membership disagrees with x^2 = 0 at " + format_element(x));
        }
        return pass();
    });
    run("substructure", "idempotents", [&] {
        IdempotentSearch s = idempotents(alg);
        for (const auto& fam : s.families) {
            if (!fam.certified) continue;
            Element x = fam.base;
            for (const auto& d : fam.directions) x += sample.scalar() * d;
            if (!(multiply(alg, x, x) == x)) return fail("family member is not idempotent");
        }
        if (!s.certified) return Outcome{Status::Undetermined, "numeric eigenvalues"};
        return pass(std::to_string(s.families.size()) + " families");
    });
    run("substructure", "one-dimensional subalgebras", [&] {
        SubalgebraLines lines = one_dim_subalgebras(alg);
        for (unsigned t = 0; t < trials; ++t) {
            Element x = sample.element(n);
            if (x.is_zero()) continue;
            if (spans_subalgebra(alg, x) && !lines.contains(x) && lines.idempotent.certified)
                return fail(format_element(x) + " spans a subalgebra missing from the description");
        }
        return pass();
    });
    run("substructure", "one-dimensional ideals", [&] {
        IdealSearch s = one_dim_ideals(alg);
        for (const auto& w : s.spaces) {
            if (!w.exact) continue;
            for (const auto& x : w.basis)
                for (const auto& g : alg.generators())
                    if (!on_line(x, multiply(alg, x, g))) return fail(format_element(x) + " does not span an ideal");
        }
        for (unsigned t = 0; t < trials; ++t) {
            Element x = sample.element(n);
            if (!x.is_zero() && spans_ideal(alg, x) && !s.contains(x) && s.certified)
                return fail(format_element(x) + " spans an ideal missing from the search");
        }
        if (s.paper && s.paper->agrees && !*s.paper->agrees) return fail("criteria for canonical delta = 1 disagree");
        if (!s.certified) return Outcome{Status::Undetermined, "numeric eigenvalues"};
        return pass(std::to_string(s.spaces.size()) + " spaces");
    });

    // catalog
    run("catalog", "simplicity witness", [&] {
        if (alg.dim() > 3) return skip("simplicity is decided for dimension <= 3");
        SimplicityReport r = is_simple(alg);
        if (r.verdict == Verdict::Undetermined) return Outcome{Status::Undetermined, r.reason};
        if (r.verdict == Verdict::NotSimple) {
            if (!r.witness || !is_plain_ideal(alg, r.witness->basis).ok) return fail("witness is not an ideal");
        }
        return pass(to_string(r.verdict));
    });
    run("catalog", "classification", [&] {
        if (alg.dim() > 3) return skip("classification covers dimensions 2 and 3");
        Classification c = n == 1 ? classify_2d(alg) : classify_3d(alg);
        if (!c.matched()) return Outcome{Status::Undetermined, c.reason};
        if (!(change_basis(alg, *c.iso) == build_canonical(*c.id))) return fail("isomorphism does not verify");
        return pass(c.id->to_string());
    });

    // cli / io
    run("io", "JSON round trip", [&] {
        if (!(algebra_from_json(algebra_to_json(alg)) == alg)) return fail("algebra changed after a JSON round trip");
        for (unsigned t = 0; t < trials; ++t) {
            Element x = sample.element(n);
            if (!(element_from_json(element_to_json(x), alg.field(), n) == x)) return fail("element changed after a JSON round trip");
            if (alg.field().kind == FieldKind::Rational && !(parse_element(format_element(x), n) == x))
                return fail("'" + format_element(x) + "' does not parse back");
        }
        return pass();
    });
    return out;
}

}  // namespace eacp
