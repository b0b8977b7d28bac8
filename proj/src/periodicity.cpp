#include "eacp/periodicity.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace eacp {

namespace {

void check_index(const Algebra& alg, std::size_t i) {
    if (i < 1 || i > alg.n())
        throw std::out_of_range("generator index " + std::to_string(i) + " out of range 1.." + std::to_string(alg.n()));
}

bool nonnegative_real(const Matrix& A) {
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) {
            if (!A(i, j).exact()) return false;
            auto s = A(i, j).real_sign();
            if (!s || *s < 0) return false;
        }
    return true;
}

}  // namespace

std::string PeriodResult::to_string() const {
    switch (kind) {
        case Kind::Finite: return std::to_string(value);
        case Kind::Infinite: return "inf";
        case Kind::Unknown: return "unknown(" + std::to_string(value) + ")";
    }
    return "?";
}

unsigned default_mmax(const Algebra& alg) {
    return std::max<unsigned>(16, static_cast<unsigned>(alg.n() * alg.n()));
}

std::optional<unsigned> shortest_closed_walk(const Matrix& A, std::size_t i) {
    // BFS from i; a closed walk closes along an edge j -> i.
    const std::size_t n = A.rows();
    std::vector<int> dist(n, -1);
    std::deque<std::size_t> queue{i};
    dist[i] = 0;
    std::optional<unsigned> best;
    while (!queue.empty()) {
        std::size_t j = queue.front();
        queue.pop_front();
        if (!A(j, i).is_zero()) {
            unsigned len = static_cast<unsigned>(dist[j]) + 1;
            if (!best || len < *best) best = len;
        }
        for (std::size_t k = 0; k < n; ++k)
            if (dist[k] < 0 && !A(j, k).is_zero()) {
                dist[k] = dist[j] + 1;
                queue.push_back(k);
            }
    }
    return best;
}

bool has_closed_walk(const Matrix& A, std::size_t i) { return shortest_closed_walk(A, i).has_value(); }

PeriodResult right_period(const Algebra& alg, std::size_t i, std::optional<unsigned> m_max) {
    check_index(alg, i);
    const unsigned cap = m_max.value_or(default_mmax(alg));
    const Matrix& A = alg.A();
    const std::size_t k = i - 1;
    auto walk = shortest_closed_walk(A, k);
    if (!walk) return PeriodResult::infinite("no closed walk through h" + std::to_string(i) + " in the support digraph of A");
    if (nonnegative_real(A))
        return PeriodResult::finite(*walk, "A is nonnegative: shortest closed walk through h" + std::to_string(i) +
                                               " has length " + std::to_string(*walk));
    Matrix P = A;
    for (unsigned m = 1; m <= cap; ++m) {
        if (!P(k, k).is_zero())
            return PeriodResult::finite(m, "a^(" + std::to_string(m) + ")_ii = " + P(k, k).to_string() + " != 0");
        P = P * A;
    }
    return PeriodResult::unknown(cap, "(A^m)_ii = 0 for m <= " + std::to_string(cap));
}

PeriodResult plenary_period(const Algebra& alg, std::size_t i, std::optional<unsigned> m_max) {
    check_index(alg, i);
    const unsigned cap = m_max.value_or(default_mmax(alg));
    const Matrix& A = alg.A();
    const std::size_t k = i - 1;
    if (alg.b()[k].is_zero()) return PeriodResult::infinite("b_i = 0");
    Matrix P = A * A;   // A^(m+1)
    Vector v = alg.b();  // A^(m-1) b
    for (unsigned m = 1; m <= cap; ++m) {
        if (!P(k, k).is_zero())
            return PeriodResult::finite(m, "a^(" + std::to_string(m + 1) + ")_ii = " + P(k, k).to_string() +
                                               " and (A^j b)_i != 0 for j < " + std::to_string(m));
        v = A * std::span<const Scalar>(v);
        if (v[k].is_zero())
            return PeriodResult::infinite("(A^" + std::to_string(m) + " b)_i = 0, so (h_i r)^[m'] = 0 for m' > " +
                                          std::to_string(m));
        P = P * A;
    }
    if (!has_closed_walk(A, k))
        return PeriodResult::infinite("no closed walk through h" + std::to_string(i) + " in the support digraph of A");
    return PeriodResult::unknown(cap, "coefficient of h_i zero for m <= " + std::to_string(cap));
}

GammaLedger GammaLedger::first(std::size_t i, const Scalar& b_i) {
    GammaLedger g;
    g.i = i;
    g.terms.emplace_back(b_i, Integer(1));
    g.power_of_two = 1;
    return g;
}

GammaLedger GammaLedger::next(const Scalar& a_pow_m_b_i) const {
    GammaLedger g = *this;
    for (auto& t : g.terms) t.second *= 2;
    g.power_of_two = 2 * power_of_two + 1;
    g.terms.emplace_back(a_pow_m_b_i, Integer(1));
    return g;
}

Scalar GammaLedger::expand() const {
    if (m() > kExpansionCap)
        throw std::overflow_error("gamma_m expansion is capped at m = " + std::to_string(kExpansionCap) + " (got m = " +
                                  std::to_string(m()) + ")");
    Scalar acc = Scalar(2).pow(power_of_two);
    for (const auto& [base, e] : terms) acc *= base.pow(e);
    return acc;
}

Element ClosedFormPlenary::total() const { return coeff.expand() * bracket; }

ClosedFormPlenary plenary_power_closed_form(const Algebra& alg, std::size_t i, unsigned m) {
    check_index(alg, i);
    if (m == 0) throw std::invalid_argument("plenary power needs m >= 1");
    const Matrix& A = alg.A();
    const std::size_t k = i - 1;
    GammaLedger g = GammaLedger::first(i, alg.b()[k]);
    Vector v = alg.b();
    for (unsigned j = 1; j < m; ++j) {
        v = A * std::span<const Scalar>(v);
        g = g.next(v[k]);
    }
    v = A * std::span<const Scalar>(v);  // A^m b
    Matrix P = matrix_power(A, m + 1);
    return {g, Element(P.row(k), v[k])};
}

bool AdmissiblePlenary::contains(const PeriodResult& q) const {
    switch (q.kind) {
        case PeriodResult::Kind::Finite: return (q.value == 1 && one) || (q.value == 2 && two);
        case PeriodResult::Kind::Infinite: return infinite;
        case PeriodResult::Kind::Unknown: return false;
    }
    return false;
}

std::string AdmissiblePlenary::to_string() const {
    std::string s = "{";
    auto add = [&](const char* t) { s += (s.size() > 1 ? ", " : "") + std::string(t); };
    if (one) add("1");
    if (two) add("2");
    if (infinite) add("inf");
    return s + "}";
}

std::optional<unsigned> canonical_delta(const Algebra& alg) {
    const Vector& b = alg.b();
    for (std::size_t k = 1; k < b.size(); ++k)
        if (!b[k].is_zero()) return std::nullopt;
    if (b[0].is_zero()) return 0U;
    if (b[0].is_one()) return 1U;
    return std::nullopt;
}

CorollaryCheck corollary_plenary_range(const Algebra& canonical, std::size_t i) {
    check_index(canonical, i);
    auto delta = canonical_delta(canonical);
    if (!delta) throw PreconditionError("algebra is not in canonical form: b must be (delta, 0, ..., 0) with delta in {0, 1}");
    CorollaryCheck c;
    c.delta = *delta;
    c.admissible.one = true;
    c.admissible.infinite = true;
    c.admissible.two = (*delta == 1 && i == 1);
    c.q = plenary_period(canonical, i);
    c.holds = c.admissible.contains(c.q);
    return c;
}

}  // namespace eacp
