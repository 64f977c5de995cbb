#pragma once

#include <cstdint>
#include <stdexcept>

namespace secant {

// Largest prime below 2^62.  Intermediate products of two residues fit in
// an unsigned 128-bit integer, so modular arithmetic never overflows.
inline constexpr std::uint64_t kDefaultPrime = 4611686018427387847ull; // 2^62 - 57

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) acc = mulmod(acc, base, p);
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    return acc;
}

} // namespace detail

/// Deterministic Miller-Rabin for 64-bit inputs (the twelve-base certificate).
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = detail::powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = detail::mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

/// Arithmetic in F_p for a runtime prime p.  Elements are residues in [0, p).
class PrimeField {
public:
    using Elem = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (!is_prime_u64(p)) throw std::invalid_argument("PrimeField: modulus is not prime");
    }

    std::uint64_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }

    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        if (s >= p_ || s < a) s -= p_;
        return s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + (p_ - b); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const { return detail::mulmod(a, b, p_); }
    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
        return detail::powmod(a, p_ - 2, p_);
    }

    Elem from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<Elem>(r);
    }
    Elem from_uint(std::uint64_t v) const { return v % p_; }

private:
    std::uint64_t p_;
};

/// splitmix64: tiny, portable, and stateless enough to fork independent
/// streams per (seed, purpose) pair.  Used instead of <random> engines so
/// reports are byte-identical across standard library implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform draw in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (~0ull / bound);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

private:
    std::uint64_t state_;
};

/// Forks a child stream keyed by a small tuple, so workers and trials get
/// independent deterministic streams from one seed.
inline std::uint64_t fork_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0) {
    SplitMix64 rng(seed ^ (a * 0x9e3779b97f4a7c15ull) ^ (b * 0xc2b2ae3d27d4eb4full) ^ (c * 0x165667b19e3779f9ull));
    return rng.next();
}

} // namespace secant
