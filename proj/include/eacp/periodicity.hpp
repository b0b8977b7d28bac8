#ifndef EACP_PERIODICITY_HPP
#define EACP_PERIODICITY_HPP

#include "eacp/algebra.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace eacp {

/// Finite(m) | Infinite | Unknown(m_max). Infinite always carries a
/// structural certificate; running out of steps gives Unknown.
struct PeriodResult {
    enum class Kind { Finite, Infinite, Unknown };
    Kind kind = Kind::Unknown;
    unsigned value = 0;  // m for Finite, m_max for Unknown
    std::string certificate;

    static PeriodResult finite(unsigned m, std::string why) { return {Kind::Finite, m, std::move(why)}; }
    static PeriodResult infinite(std::string why) { return {Kind::Infinite, 0, std::move(why)}; }
    static PeriodResult unknown(unsigned m_max, std::string why) { return {Kind::Unknown, m_max, std::move(why)}; }

    bool is_finite(unsigned m) const { return kind == Kind::Finite && value == m; }
    /// "3", "inf" or "unknown(16)".
    std::string to_string() const;
};

/// max(16, n^2).
unsigned default_mmax(const Algebra& alg);

/// Least m with (A^m)_ii != 0. i is 1-based.
PeriodResult right_period(const Algebra& alg, std::size_t i, std::optional<unsigned> m_max = std::nullopt);
/// Least m with a^(m+1)_ii * prod_{j<m} (A^j b)_i != 0.
PeriodResult plenary_period(const Algebra& alg, std::size_t i, std::optional<unsigned> m_max = std::nullopt);

/// True iff the support digraph of A (j -> k iff a_jk != 0) has a closed
/// walk through vertex i (0-based).
bool has_closed_walk(const Matrix& A, std::size_t i);
/// Length of the shortest closed walk through i (0-based), if any.
std::optional<unsigned> shortest_closed_walk(const Matrix& A, std::size_t i);

/// gamma_m = 2^(2^m - 1) * prod_{j=0}^{m-1} ((A^j b)_i)^(2^(m-j-1)), kept
/// factored because the exponents double at every step.
struct GammaLedger {
    std::size_t i = 0;                              // 1-based generator index
    std::vector<std::pair<Scalar, Integer>> terms;  // ((A^j b)_i, exponent)
    Integer power_of_two = 0;

    static constexpr unsigned kExpansionCap = 12;

    static GammaLedger first(std::size_t i, const Scalar& b_i);
    /// gamma_{m+1} = 2 gamma_m^2 (A^m b)_i.
    GammaLedger next(const Scalar& a_pow_m_b_i) const;
    unsigned m() const { return static_cast<unsigned>(terms.size()); }
    /// Expanded value; throws std::overflow_error beyond m = 12.
    Scalar expand() const;
};

struct ClosedFormPlenary {
    GammaLedger coeff;
    Element bracket;  // (A^(m+1) h)_i + (A^m b)_i r
    /// coeff * bracket; subject to the expansion cap.
    Element total() const;
};

/// (h_i r)^[m] = gamma_m [(A^(m+1) h)_i + (A^m b)_i r].
ClosedFormPlenary plenary_power_closed_form(const Algebra& alg, std::size_t i, unsigned m);

struct AdmissiblePlenary {
    bool one = false, two = false, infinite = false;
    bool contains(const PeriodResult& q) const;
    std::string to_string() const;
};

struct CorollaryCheck {
    unsigned delta = 0;
    AdmissiblePlenary admissible;
    PeriodResult q;
    bool holds = false;
};

/// Admissible plenary periods of a canonical-form algebra: {1, inf} when
/// delta = 0 or i != 1, {1, 2, inf} for i = 1 when delta = 1.
CorollaryCheck corollary_plenary_range(const Algebra& canonical, std::size_t i);

/// b = (delta, 0, ..., 0) with delta in {0, 1}.
std::optional<unsigned> canonical_delta(const Algebra& alg);

}  // namespace eacp

#endif  // EACP_PERIODICITY_HPP
