#pragma once

#include <optional>
#include <string>

#include "secant/binomial.hpp"
#include "secant/errors.hpp"
#include "secant/scroll_type.hpp"

namespace secant {

/// Classical bound: any irreducible nondegenerate variety of dimension n in
/// P^r has degree >= r - n + 1.
inline long long min_degree_bound(long long r, long long n) {
    if (n < 0 || r <= n) throw std::invalid_argument("min_degree_bound: need r > n >= 0");
    return r - n + 1;
}

/// deg S^k(X) >= binom(h+k+1, k+1) for h = codim S^k(X) >= 1.
/// Reduces to the classical minimal-degree bound at k = 0.
inline BigInt secant_degree_lower_bound(long long h, long long k) {
    if (h < 1 || k < 0) throw std::invalid_argument("secant_degree_lower_bound: need h >= 1, k >= 0");
    return binomial(h + k + 1, k + 1);
}

/// mult_x S^k(X) >= binom(h+k-l, k-l) at any point x of S^l(X), 0 <= l <= k.
inline BigInt secant_multiplicity_lower_bound(long long h, long long k, long long l) {
    if (h < 1) throw std::invalid_argument("secant_multiplicity_lower_bound: need h >= 1");
    if (l < 0 || l > k) throw std::invalid_argument("secant_multiplicity_lower_bound: need 0 <= l <= k");
    return binomial(h + k - l, k - l);
}

/// sum_{a_j >= k} (a_j - k): the correction term in the scroll dimension
/// formula; also the matrix width in the determinantal description of
/// S^k(S(a)).
inline long long scroll_correction(const ScrollType& a, int k) {
    long long corr = 0;
    for (int aj : a.entries())
        if (aj >= k) corr += aj - k;
    return corr;
}

/// S^k(S(a)) fills its ambient space exactly when the determinantal
/// codimension sum_{a_j>=k}(a_j-k) - k - 1 is negative.
inline bool scroll_secant_fills(const ScrollType& a, int k) {
    return scroll_correction(a, k) - k - 1 < 0;
}

/// deg S^k(S(a)) = binom(sum_{a_j>=k}(a_j-k), k+1); scrolls always achieve
/// the lower bound, with h = sum_{a_j>=k}(a_j-k) - k - 1.
inline BigInt scroll_secant_degree(const ScrollType& a, int k) {
    if (k < 0) throw std::invalid_argument("scroll_secant_degree: k >= 0 required");
    const long long corr = scroll_correction(a, k);
    if (corr - k - 1 < 0)
        throw FillsSignal("scroll_secant_degree: S^" + std::to_string(k) + a.str() +
                          " fills its ambient space");
    return binomial(corr, k + 1);
}

/// deg S^{m1-1}(Seg(m1, m2)) = binom(m2+1, m1): the top proper secant
/// variety of a two-factor Segre (classes of matrices of corank >= 1).
inline BigInt segre_top_secant_degree(int m1, int m2) {
    if (m1 < 1 || m1 > m2) throw std::invalid_argument("segre_top_secant_degree: need 1 <= m1 <= m2");
    return binomial(m2 + 1, m1);
}

/// nu_k = mu_k * deg S^k(X): secant k-planes meeting a general complementary
/// subspace.
inline BigInt nu_from_mu(const BigInt& mu, const BigInt& deg_sk) {
    if (mu < 1 || deg_sk < 1) throw std::invalid_argument("nu_from_mu: need positive inputs");
    return mu * deg_sk;
}

/// Bound-versus-actual record for one secant variety.
struct BoundReport {
    long long h = 0;
    long long k = 0;
    BigInt lower_bound;
    std::optional<BigInt> actual_degree; // closed form or cited metadata, never estimated
    std::string actual_provenance;
    std::optional<bool> is_minimal;
};

inline BoundReport make_bound_report(long long h, long long k,
                                     std::optional<BigInt> actual = std::nullopt,
                                     std::string provenance = {}) {
    BoundReport rep;
    rep.h = h;
    rep.k = k;
    rep.lower_bound = secant_degree_lower_bound(h, k);
    if (actual) {
        if (*actual < rep.lower_bound)
            throw std::invalid_argument("BoundReport: stated degree beats the proven lower bound");
        rep.actual_degree = std::move(actual);
        rep.actual_provenance = std::move(provenance);
        rep.is_minimal = (*rep.actual_degree == rep.lower_bound);
    }
    return rep;
}

} // namespace secant
