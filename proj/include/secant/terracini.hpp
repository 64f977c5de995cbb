#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "secant/errors.hpp"
#include "secant/fp.hpp"
#include "secant/monomial_map.hpp"
#include "secant/rank.hpp"
#include "secant/scroll_type.hpp"

namespace secant {

/// Randomized-rank engine configuration.  Trials use max-rank aggregation:
/// a special sample can only drop the Terracini rank, never raise it, so the
/// maximum over trials is a sound lower bound that equals the true dimension
/// except with probability bounded by Schwartz-Zippel.
struct EngineConfig {
    enum class Backend { Fp, Rational };

    std::uint64_t prime = kDefaultPrime;
    int trials = 3;
    std::uint64_t seed = 0;
    Backend backend = Backend::Fp;

    void check() const {
        if (trials < 1) throw std::invalid_argument("EngineConfig: trials must be >= 1");
        if (prime < (1ull << 31)) throw std::invalid_argument("EngineConfig: prime must be >= 2^31");
        if (!is_prime_u64(prime)) throw std::invalid_argument("EngineConfig: modulus is not prime");
    }
};

/// Per-k record of the engine's output for one variety.
struct SecantProfile {
    int k = 0;
    int s_k = 0;      // computed dim S^k(X)
    int sigma_k = 0;  // expected dim min(r, n(k+1)+k)
    int delta_k = 0;  // defect sigma_k - s_k
    int h_k = 0;      // codimension r - s_k
    int trials_used = 0;
    std::uint64_t prime = 0;
    bool filled = false; // s_k == r

    bool operator==(const SecantProfile& o) const {
        return k == o.k && s_k == o.s_k && sigma_k == o.sigma_k && delta_k == o.delta_k &&
               h_k == o.h_k && trials_used == o.trials_used && prime == o.prime && filled == o.filled;
    }
};

/// sigma^(k) = min(r, n(k+1)+k)
inline int expected_dimension(int n, int k, int r) {
    if (n < 1 || k < 0 || r < 1) throw std::invalid_argument("expected_dimension: bad arguments");
    long long naive = static_cast<long long>(n) * (k + 1) + k;
    return static_cast<int>(std::min<long long>(r, naive));
}

/// dim S^k(S(a_1,...,a_n)) = min(r, r+k+1 - sum_{a_j >= k} (a_j - k)),
/// r = sum a_i + n - 1.  The closed-form oracle for the whole scroll grid.
inline int scroll_secant_dimension(const ScrollType& a, int k) {
    if (k < 0) throw std::invalid_argument("scroll_secant_dimension: k >= 0 required");
    const int r = a.ambient();
    long long corr = 0;
    for (int aj : a.entries())
        if (aj >= k) corr += aj - k;
    return static_cast<int>(std::min<long long>(r, static_cast<long long>(r) + k + 1 - corr));
}

namespace detail {

constexpr int kMaxResamples = 16;

template <typename Field>
int stacked_rank(const MonomialMap& map, int k, const Field& field, std::uint64_t stream_seed,
                 std::uint64_t sample_range) {
    SplitMix64 rng(stream_seed);
    std::vector<std::vector<typename Field::Elem>> stacked;
    for (int point_idx = 0; point_idx <= k; ++point_idx) {
        std::vector<std::vector<typename Field::Elem>> rows;
        for (int attempt = 0;; ++attempt) {
            if (attempt >= kMaxResamples)
                throw DegeneratePointError("engine: " + map.label + " vanished on " +
                                           std::to_string(kMaxResamples) + " consecutive samples");
            std::vector<typename Field::Elem> pt(static_cast<std::size_t>(map.n_params));
            for (auto& x : pt) x = field.from_int(static_cast<long long>(rng.below(sample_range)));
            try {
                rows = jacobian_rows(map, pt, field);
                break;
            } catch (const DegeneratePointError&) {
                continue;
            }
        }
        for (auto& row : rows) stacked.push_back(std::move(row));
    }
    return exact_rank(std::move(stacked), field);
}

} // namespace detail

/// dim X computed as (rank of one Jacobian) - 1: the chart includes its
/// constant, so the affine cone's tangent space has dimension dim(X) + 1.
inline int variety_dimension(const MonomialMap& map, const EngineConfig& cfg) {
    cfg.check();
    map.validate();
    if (map.coeff_modulus != 0 && map.coeff_modulus != cfg.prime)
        throw std::invalid_argument("engine: map coefficients live over a different prime");
    int best = 0;
    for (int t = 0; t < cfg.trials; ++t) {
        int rank;
        const std::uint64_t stream = fork_seed(cfg.seed, 0x0d1e, 0, static_cast<std::uint64_t>(t));
        if (cfg.backend == EngineConfig::Backend::Rational && map.coeff_modulus == 0) {
            rank = detail::stacked_rank(map, 0, RationalField{}, stream, 1ull << 20);
        } else {
            PrimeField f(cfg.prime);
            rank = detail::stacked_rank(map, 0, f, stream, cfg.prime);
        }
        best = std::max(best, rank - 1);
    }
    return best;
}

/// dim S^k(X) by Terracini: stack the Jacobian rows of k+1 independent
/// uniform points, take the exact rank, subtract 1; max over trials.
inline int secant_dimension(const MonomialMap& map, int k, const EngineConfig& cfg) {
    cfg.check();
    map.validate();
    if (k < 0) throw std::invalid_argument("secant_dimension: k >= 0 required");
    if (map.coeff_modulus != 0 && map.coeff_modulus != cfg.prime)
        throw std::invalid_argument("engine: map coefficients live over a different prime");

    const int r = map.ambient_dim();
    const int n = variety_dimension(map, cfg);
    const int sigma = expected_dimension(n, k, r);

    int best = 0;
    for (int t = 0; t < cfg.trials; ++t) {
        int rank;
        const std::uint64_t stream =
            fork_seed(cfg.seed, 0x5eca, static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(t));
        if (cfg.backend == EngineConfig::Backend::Rational && map.coeff_modulus == 0) {
            rank = detail::stacked_rank(map, k, RationalField{}, stream, 1ull << 20);
        } else {
            PrimeField f(cfg.prime);
            rank = detail::stacked_rank(map, k, f, stream, cfg.prime);
        }
        if (rank - 1 > sigma)
            throw InternalEngineError("secant_dimension: rank " + std::to_string(rank) +
                                      " exceeds sigma+1 for " + map.label);
        best = std::max(best, rank - 1);
    }
    return best;
}

/// Profiles for k = 0..k_max; stops after the first k whose secant variety
/// fills the ambient space (that profile is included and marked).
inline std::vector<SecantProfile> defect_profile(const MonomialMap& map, int k_max, const EngineConfig& cfg) {
    cfg.check();
    if (k_max < 0) throw std::invalid_argument("defect_profile: k_max >= 0 required");
    const int r = map.ambient_dim();
    const int n = variety_dimension(map, cfg);

    std::vector<SecantProfile> out;
    for (int k = 0; k <= k_max; ++k) {
        SecantProfile pr;
        pr.k = k;
        pr.s_k = (k == 0) ? n : secant_dimension(map, k, cfg);
        pr.sigma_k = expected_dimension(n, k, r);
        pr.delta_k = pr.sigma_k - pr.s_k;
        pr.h_k = r - pr.s_k;
        pr.trials_used = cfg.trials;
        pr.prime = cfg.prime;
        pr.filled = (pr.s_k == r);
        out.push_back(pr);
        if (pr.filled) break;
    }
    return out;
}

/// Upper bound on the probability that one trial under-reports the rank:
/// the determinant certificate is a polynomial of degree at most
/// (k+1) * (n_params + 1) * maxdeg in the sampled coordinates, so
/// Schwartz-Zippel gives deg/p per trial.  Reported as (numerator, prime).
inline std::pair<std::uint64_t, std::uint64_t>
schwartz_zippel_bound(const MonomialMap& map, int k, const EngineConfig& cfg) {
    std::uint64_t maxdeg = 1;
    for (const auto& poly : map.coords)
        for (const auto& m : poly) maxdeg = std::max<std::uint64_t>(maxdeg, m.total_degree());
    std::uint64_t deg =
        static_cast<std::uint64_t>(k + 1) * static_cast<std::uint64_t>(map.n_params + 1) * maxdeg;
    return {deg, cfg.prime};
}

} // namespace secant
