// Generators and brute-force oracles shared by the test binaries.
#ifndef EACP_TESTS_SUPPORT_HPP
#define EACP_TESTS_SUPPORT_HPP

#include "eacp/catalog.hpp"
#include "eacp/periodicity.hpp"

#include <random>

namespace testkit {

using namespace eacp;

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int range(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

    /// {-k..k} / {1, 2}
    Scalar small(int k = 2) { return Scalar(Rational(range(-k, k), range(1, 2))); }
    Scalar nonzero(int k = 2) {
        Scalar s;
        do s = small(k);
        while (s.is_zero());
        return s;
    }
    /// Mostly small, sometimes zero so that sparse patterns show up.
    Scalar sparse(double zero_p = 0.35) { return coin(zero_p) ? Scalar(0) : small(); }

    Vector vec(std::size_t n) {
        Vector v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(small());
        return v;
    }
    Element element(std::size_t n) { return Element::from_coords(vec(n + 1)); }

    Algebra algebra(std::size_t n, double zero_p = 0.35) {
        std::vector<Vector> A(n);
        Vector b;
        for (auto& row : A)
            for (std::size_t j = 0; j < n; ++j) row.push_back(sparse(zero_p));
        for (std::size_t j = 0; j < n; ++j) b.push_back(sparse(zero_p));
        return new_algebra(A, b);
    }

    /// Invertible n x n rational matrix.
    Matrix invertible(std::size_t n) {
        while (true) {
            Matrix Q(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) Q(i, j) = small();
            if (inverse(Q)) return Q;
        }
    }

    /// Random natural basis change: h' = Q h, r' = u r + k with k in the
    /// left kernel of M (anything else breaks h'_i h'_j = 0).
    BasisChange natural_change(const Algebra& alg) {
        const std::size_t n = alg.n();
        Matrix P(n + 1, n + 1);
        Matrix Q = invertible(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) P(i, j) = Q(i, j);
        Matrix M(n, n + 1);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) M(i, j) = alg.A()(i, j);
            M(i, n) = alg.b()[i];
        }
        Vector k(n, Scalar(0));
        for (const auto& v : left_kernel(M)) k = add(k, scale(small(), v));
        for (std::size_t j = 0; j < n; ++j) P(n, j) = k[j];
        P(n, n) = nonzero();
        return {P};
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// Product straight from the structure constants e_p e_q = sum_k c(p,q,k) e_k,
/// with the table written out generator by generator.
inline Element tensor_product(const Algebra& alg, const Element& x, const Element& y) {
    const std::size_t n = alg.n(), d = n + 1;
    auto basis_product = [&](std::size_t p, std::size_t q) {
        Vector out(d, Scalar::zero_of(alg.field()));
        const bool pr = p == n, qr = q == n;
        if (pr == qr) return out;  // h h = 0 and r r = 0
        const std::size_t i = pr ? q : p;
        for (std::size_t j = 0; j < n; ++j) out[j] = alg.A()(i, j);
        out[n] = alg.b()[i];
        return out;
    };
    Vector cx = x.coords(), cy = y.coords();
    Vector acc(d, Scalar::zero_of(alg.field()));
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) {
            Scalar c = cx[p] * cy[q];
            if (c.is_zero()) continue;
            acc = add(acc, scale(c, basis_product(p, q)));
        }
    return Element::from_coords(acc);
}

/// min{m <= cap : h_i occurs in R_r^m(h_i)}.
inline std::optional<unsigned> brute_right_period(const Algebra& alg, std::size_t i, unsigned cap) {
    Element x = alg.h(i);
    for (unsigned m = 1; m <= cap; ++m) {
        x = tensor_product(alg, x, alg.r());
        if (!x.alpha()[i - 1].is_zero()) return m;
    }
    return std::nullopt;
}

struct PlenaryOracle {
    std::optional<unsigned> first;  // least m with h_i occurring in (h_i r)^[m]
    bool dies = false;              // the sequence reached 0 before that
};

inline PlenaryOracle brute_plenary_period(const Algebra& alg, std::size_t i, unsigned cap) {
    Element x = tensor_product(alg, alg.h(i), alg.r());
    for (unsigned m = 1; m <= cap; ++m) {
        x = tensor_product(alg, x, x);
        if (!x.alpha()[i - 1].is_zero()) return {m, false};
        if (x.is_zero()) return {std::nullopt, true};
    }
    return {};
}

/// All nonzero vectors of dimension d with entries in {-k..k}, first nonzero
/// entry positive (one representative per line up to sign).
inline std::vector<Vector> grid(std::size_t d, int k) {
    std::vector<Vector> out;
    std::vector<int> c(d, -k);
    while (true) {
        std::size_t lead = d;
        for (std::size_t j = 0; j < d; ++j)
            if (c[j] != 0) {
                lead = j;
                break;
            }
        if (lead < d && c[lead] > 0) {
            Vector v;
            for (int x : c) v.push_back(Scalar(x));
            out.push_back(v);
        }
        std::size_t j = 0;
        while (j < d && c[j] == k) c[j++] = -k;
        if (j == d) break;
        ++c[j];
    }
    return out;
}

}  // namespace testkit

#endif  // EACP_TESTS_SUPPORT_HPP
