#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "secant/errors.hpp"
#include "secant/fp.hpp"
#include "secant/monomial_map.hpp"
#include "secant/rank.hpp"
#include "secant/scroll_type.hpp"
#include "secant/terracini.hpp"

namespace secant {

// ---------------------------------------------------------------------------
// Symbolic projection calculus on scroll types
// ---------------------------------------------------------------------------

/// A batch of iterated general projections of one kind.
struct ProjectionStep {
    enum class Kind { Internal, Tangential, RulingSpace };
    Kind kind = Kind::Internal;
    int count = 1;

    void check() const {
        if (count < 1) throw std::invalid_argument("ProjectionStep: count >= 1 required");
    }
};

/// General internal projection: one entry of the multiset drops by 1.
/// Convention: the largest entry drops (the generic choice; the numeric
/// oracle in the test suite adjudicates this against the engine).
inline ScrollType scroll_internal(const ScrollType& a) {
    if (a.all_zero()) throw std::invalid_argument("scroll_internal: zero scroll");
    std::vector<int> b = a.entries();
    b.back() -= 1;
    return ScrollType(std::move(b));
}

/// Projection from a general ruling P^{n-1}: zero entries disappear, every
/// remaining entry drops by 1.
inline ScrollType scroll_ruling_projection(const ScrollType& a) {
    if (a.all_zero()) throw std::invalid_argument("scroll_ruling_projection: zero scroll");
    std::vector<int> b;
    for (int v : a.entries())
        if (v > 0) b.push_back(v - 1);
    return ScrollType(std::move(b));
}

/// General tangential projection: zero entries disappear, the largest entry
/// drops by 2 and the rest by 1.  Coincides with internal o ruling.  Signals
/// DegenerateProjectionError when the image has no scroll structure left.
inline ScrollType scroll_tangential(const ScrollType& a) {
    if (a.max_entry() < 2)
        throw DegenerateProjectionError("scroll_tangential: no entry >= 2 in " + a.str());
    std::vector<int> b;
    for (int v : a.entries())
        if (v > 0) b.push_back(v - 1);
    b.back() -= 1; // entries() is sorted, so back() was the largest
    ScrollType out(std::move(b));
    if (out.all_zero())
        throw DegenerateProjectionError("scroll_tangential: image of " + a.str() +
                                        " degenerates to a linear space");
    return out;
}

// ---------------------------------------------------------------------------
// Numeric projections on monomial maps
// ---------------------------------------------------------------------------

namespace detail {

/// phi_sum = sum_j weights[j] * coords[j], terms merged over F_p, emitted in
/// graded lex order.  Weights and output coefficients are residues.
inline Polynomial combine_coords(const MonomialMap& map, const std::vector<std::uint64_t>& weights,
                                 const PrimeField& f) {
    std::map<std::vector<unsigned>, std::uint64_t> acc;
    for (std::size_t j = 0; j < map.coords.size(); ++j) {
        if (weights[j] == 0) continue;
        for (const auto& mono : map.coords[j]) {
            std::uint64_t term = f.mul(weights[j], f.from_int(mono.coeff));
            auto [it, inserted] = acc.emplace(mono.exps, term);
            if (!inserted) it->second = f.add(it->second, term);
        }
    }
    std::vector<std::vector<unsigned>> keys;
    for (auto& [e, c] : acc)
        if (c != 0) keys.push_back(e);
    std::sort(keys.begin(), keys.end(), graded_lex_less);
    Polynomial out;
    for (auto& e : keys) out.push_back(Monomial{static_cast<long long>(acc[e]), e});
    return out;
}

inline MonomialMap project_by_forms(const MonomialMap& map,
                                    const std::vector<std::vector<std::uint64_t>>& forms,
                                    const PrimeField& f, const std::string& label) {
    MonomialMap out;
    out.n_params = map.n_params;
    out.coeff_modulus = f.modulus();
    out.label = label;
    for (const auto& w : forms) {
        Polynomial poly = combine_coords(map, w, f);
        if (poly.empty())
            throw DegeneratePointError("projection: a composed coordinate vanished identically");
        out.coords.push_back(std::move(poly));
    }
    out.validate();
    return out;
}

} // namespace detail

/// Projection of X from a general point of itself, realized exactly: sample
/// q, set p = phi(q), and compose with a deterministic basis of the linear
/// forms vanishing at p.  The result has r coordinates, each an exact linear
/// combination of the old ones over F_prime.
inline MonomialMap internal_projection_numeric(const MonomialMap& map, const EngineConfig& cfg,
                                               std::uint64_t salt = 0) {
    cfg.check();
    map.validate();
    const int r = map.ambient_dim();
    const int n = variety_dimension(map, cfg);
    if (r < n + 1)
        throw InsufficientCodimensionError("internal_projection_numeric: " + map.label +
                                           " has no codimension to project into");

    PrimeField f(cfg.prime);
    SplitMix64 rng(fork_seed(cfg.seed, 0x1417, salt));
    for (int attempt = 0; attempt < detail::kMaxResamples; ++attempt) {
        std::vector<std::uint64_t> q(static_cast<std::size_t>(map.n_params));
        for (auto& x : q) x = rng.below(cfg.prime);
        std::vector<std::vector<std::uint64_t>> rows;
        try {
            rows = jacobian_rows(map, q, f);
        } catch (const DegeneratePointError&) {
            continue;
        }
        const std::vector<std::uint64_t>& p = rows[0];
        std::size_t pivot = 0;
        while (p[pivot] == 0) ++pivot;
        const std::uint64_t scale = f.inv(p[pivot]);

        std::vector<std::vector<std::uint64_t>> forms;
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (j == pivot) continue;
            std::vector<std::uint64_t> w(p.size(), 0);
            w[j] = 1;
            w[pivot] = f.neg(f.mul(p[j], scale)); // x_j - (p_j/p_pivot) x_pivot
            forms.push_back(std::move(w));
        }
        try {
            return detail::project_by_forms(map, forms, f, map.label + "^1");
        } catch (const DegeneratePointError&) {
            continue;
        }
    }
    throw DegeneratePointError("internal_projection_numeric: no usable sample for " + map.label);
}

/// Projection of X from the tangent space at a general point: the linear
/// forms are a deterministic kernel basis of the stacked Jacobian rows, so
/// the ambient dimension drops by n+1.
inline MonomialMap tangential_projection_numeric(const MonomialMap& map, const EngineConfig& cfg,
                                                 std::uint64_t salt = 0) {
    cfg.check();
    map.validate();
    const int r = map.ambient_dim();
    const int n = variety_dimension(map, cfg);
    if (r < n + 2)
        throw InsufficientCodimensionError("tangential_projection_numeric: " + map.label +
                                           " has no room to project from a tangent space");

    PrimeField f(cfg.prime);
    SplitMix64 rng(fork_seed(cfg.seed, 0x7a96, salt));
    for (int attempt = 0; attempt < detail::kMaxResamples; ++attempt) {
        std::vector<std::uint64_t> q(static_cast<std::size_t>(map.n_params));
        for (auto& x : q) x = rng.below(cfg.prime);
        std::vector<std::vector<std::uint64_t>> rows;
        try {
            rows = jacobian_rows(map, q, f);
        } catch (const DegeneratePointError&) {
            continue;
        }
        if (exact_rank(rows, f) != n + 1) continue; // singular sample, resample
        auto forms = kernel_basis(rows, f);
        if (forms.size() != static_cast<std::size_t>(r - n)) continue;
        try {
            return detail::project_by_forms(map, forms, f, map.label + "_1");
        } catch (const DegeneratePointError&) {
            continue;
        }
    }
    throw DegeneratePointError("tangential_projection_numeric: no usable sample for " + map.label);
}

/// Applies a ProjectionStep to a scroll type (all three kinds are defined
/// symbolically).
inline ScrollType apply(const ScrollType& a, const ProjectionStep& step) {
    step.check();
    ScrollType b = a;
    for (int i = 0; i < step.count; ++i) {
        switch (step.kind) {
            case ProjectionStep::Kind::Internal: b = scroll_internal(b); break;
            case ProjectionStep::Kind::Tangential: b = scroll_tangential(b); break;
            case ProjectionStep::Kind::RulingSpace: b = scroll_ruling_projection(b); break;
        }
    }
    return b;
}

/// Applies a ProjectionStep numerically.  Ruling projections have no general
/// numeric realization here; they exist on scroll types only.
inline MonomialMap apply(const MonomialMap& map, const ProjectionStep& step,
                         const EngineConfig& cfg) {
    step.check();
    if (step.kind == ProjectionStep::Kind::RulingSpace)
        throw std::invalid_argument("apply: ruling projections are symbolic, on scroll types only");
    MonomialMap cur = map;
    for (int i = 0; i < step.count; ++i) {
        cur = step.kind == ProjectionStep::Kind::Internal
                  ? internal_projection_numeric(cur, cfg, static_cast<std::uint64_t>(i + 1))
                  : tangential_projection_numeric(cur, cfg, static_cast<std::uint64_t>(i + 1));
    }
    return cur;
}

// ---------------------------------------------------------------------------
// Projection invariants
// ---------------------------------------------------------------------------

/// Engine verification of the two projection identities
///   h^(k-i)(X_i) = h^(k)(X)            (tangential, 1 <= i <= k)
///   h^(k)(X^i)   = max(0, h^(k)(X)-i)  (internal,   i >= 1)
/// A side is marked inapplicable when an intermediate projection would
/// degenerate (no codimension left to project into).
struct ProjectionInvariantReport {
    int k = 0, i = 0;
    int h_base = 0;
    bool tangential_applicable = false;
    int tangential_lhs = -1, tangential_rhs = -1;
    bool internal_applicable = false;
    int internal_lhs = -1, internal_rhs = -1;

    bool holds() const {
        bool ok = true;
        if (tangential_applicable) ok = ok && tangential_lhs == tangential_rhs;
        if (internal_applicable) ok = ok && internal_lhs == internal_rhs;
        return ok;
    }
};

inline ProjectionInvariantReport verify_projection_invariants(const MonomialMap& map, int k, int i, const EngineConfig& cfg) {
    if (i < 1) throw std::invalid_argument("verify_projection_invariants: i >= 1 required");
    if (k < 0) throw std::invalid_argument("verify_projection_invariants: k >= 0 required");
    ProjectionInvariantReport rep;
    rep.k = k;
    rep.i = i;
    const int r = map.ambient_dim();
    rep.h_base = r - secant_dimension(map, k, cfg);

    if (i <= k) {
        try {
            MonomialMap cur = apply(map, {ProjectionStep::Kind::Tangential, i}, cfg);
            rep.tangential_applicable = true;
            rep.tangential_lhs = cur.ambient_dim() - secant_dimension(cur, k - i, cfg);
            rep.tangential_rhs = rep.h_base;
        } catch (const InsufficientCodimensionError&) {
            rep.tangential_applicable = false;
        }
    }

    try {
        MonomialMap cur = apply(map, {ProjectionStep::Kind::Internal, i}, cfg);
        rep.internal_applicable = true;
        rep.internal_lhs = cur.ambient_dim() - secant_dimension(cur, k, cfg);
        rep.internal_rhs = std::max(0, rep.h_base - i);
    } catch (const InsufficientCodimensionError&) {
        rep.internal_applicable = false;
    }
    return rep;
}

} // namespace secant
