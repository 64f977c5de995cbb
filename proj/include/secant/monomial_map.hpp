#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "secant/errors.hpp"
#include "secant/fp.hpp"
#include "secant/scroll_type.hpp"

namespace secant {

/// One term of a coordinate polynomial: coeff * prod t_i^{exps[i]}.
struct Monomial {
    long long coeff = 1;
    std::vector<unsigned> exps;

    unsigned total_degree() const {
        unsigned d = 0;
        for (unsigned e : exps) d += e;
        return d;
    }
    bool operator==(const Monomial& o) const { return coeff == o.coeff && exps == o.exps; }
};

using Polynomial = std::vector<Monomial>;

namespace detail {

/// Graded lexicographic order on exponent vectors: lower total degree first,
/// ties broken by the earlier variable carrying the larger exponent.  Fixing
/// this order makes every constructed map reproducible bit for bit.
inline bool graded_lex_less(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    unsigned da = 0, db = 0;
    for (unsigned e : a) da += e;
    for (unsigned e : b) db += e;
    if (da != db) return da < db;
    return a > b; // lexicographically larger vector = earlier variable dominates = listed first
}

} // namespace detail

/// A projective parametrization given by r+1 coordinate polynomials in
/// n_params affine parameters, each a list of coefficient-tagged monomials.
/// Coefficients are integers mapped into the working field on demand; maps
/// produced by numeric projections carry residues and record the prime they
/// live over in coeff_modulus (0 means universal integers).
struct MonomialMap {
    int n_params = 0;
    std::vector<Polynomial> coords;
    std::string label;
    std::uint64_t coeff_modulus = 0;

    int ambient_dim() const { return static_cast<int>(coords.size()) - 1; }

    void validate() const {
        if (n_params < 1) throw std::invalid_argument("MonomialMap: need at least one parameter");
        if (coords.size() < 2) throw std::invalid_argument("MonomialMap: need ambient dimension >= 1");
        for (const auto& poly : coords) {
            if (poly.empty())
                throw std::invalid_argument("MonomialMap: identically zero coordinate in " + label);
            for (const auto& m : poly)
                if (m.exps.size() != static_cast<std::size_t>(n_params))
                    throw std::invalid_argument("MonomialMap: exponent vector length mismatch in " + label);
        }
    }
};

namespace detail {

inline void sort_coords_graded_lex(std::vector<std::vector<unsigned>>& exps) {
    std::sort(exps.begin(), exps.end(), graded_lex_less);
}

/// All exponent vectors over `vars` variables with total degree exactly d.
inline void exponents_of_degree(int vars, int d, std::vector<unsigned>& cur,
                                std::vector<std::vector<unsigned>>& out) {
    if (vars == 1) {
        cur.push_back(static_cast<unsigned>(d));
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = 0; e <= d; ++e) {
        cur.push_back(static_cast<unsigned>(e));
        exponents_of_degree(vars - 1, d - e, cur, out);
        cur.pop_back();
    }
}

} // namespace detail

/// The d-Veronese embedding of P^n in its affine chart: all monomials of
/// degree <= d in n parameters.  binom(n+d, d) coordinates, all coefficients 1.
inline MonomialMap veronese(int n, int d) {
    if (n < 1 || d < 1) throw std::invalid_argument("veronese: need n >= 1 and d >= 1");
    std::vector<std::vector<unsigned>> exps;
    std::vector<unsigned> cur;
    for (int deg = 0; deg <= d; ++deg) detail::exponents_of_degree(n, deg, cur, exps);
    detail::sort_coords_graded_lex(exps);

    MonomialMap map;
    map.n_params = n;
    for (auto& e : exps) map.coords.push_back({Monomial{1, std::move(e)}});
    std::ostringstream os;
    os << "veronese(" << n << "," << d << ")";
    map.label = os.str();
    map.validate();
    return map;
}

/// The Segre embedding of P^{m_1} x ... x P^{m_h} in its affine chart: one
/// coordinate per choice of (constant or chart parameter) in every factor.
/// prod(m_i + 1) coordinates over sum(m_i) parameters.
inline MonomialMap segre(const std::vector<int>& dims) {
    if (dims.empty()) throw std::invalid_argument("segre: empty factor list");
    for (int m : dims)
        if (m < 1) throw std::invalid_argument("segre: factor dimensions must be >= 1");

    int n = std::accumulate(dims.begin(), dims.end(), 0);
    std::vector<std::vector<unsigned>> exps;
    std::vector<unsigned> cur(static_cast<std::size_t>(n), 0u);
    // choice[i] = 0 picks the constant 1 in factor i, choice[i] = j picks its j-th parameter
    std::vector<int> choice(dims.size(), 0);
    while (true) {
        std::fill(cur.begin(), cur.end(), 0u);
        int offset = 0;
        for (std::size_t i = 0; i < dims.size(); ++i) {
            if (choice[i] > 0) cur[static_cast<std::size_t>(offset + choice[i] - 1)] = 1;
            offset += dims[i];
        }
        exps.push_back(cur);
        std::size_t i = dims.size();
        while (i > 0) {
            --i;
            if (++choice[i] <= dims[i]) break;
            choice[i] = 0;
            if (i == 0) { i = dims.size() + 1; break; }
        }
        if (i == dims.size() + 1) break;
    }
    detail::sort_coords_graded_lex(exps);

    MonomialMap map;
    map.n_params = n;
    for (auto& e : exps) map.coords.push_back({Monomial{1, std::move(e)}});
    std::ostringstream os;
    os << "segre(";
    for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
    os << ")";
    map.label = os.str();
    map.validate();
    return map;
}

/// Chart parametrization of the image of P(O(a_1) + ... + O(a_n)) under
/// |alpha H + beta F|.  Parameters are (t, x_1, ..., x_{n-1}) with x_n == 1;
/// coordinates are the monomials x^e t^m with |e| = alpha and
/// 0 <= m <= e.a + beta, so the coordinate count is sum_{|e|=alpha} (e.a + beta + 1).
inline MonomialMap bundle_embedding(const ScrollType& a, int alpha, int beta) {
    if (alpha < 1) throw std::invalid_argument("bundle_embedding: need alpha >= 1");
    if (beta < 0) throw std::invalid_argument("bundle_embedding: need beta >= 0");
    if (a.all_zero()) throw std::invalid_argument("bundle_embedding: zero scroll type");

    const int n = a.n();
    std::vector<std::vector<unsigned>> weight_exps; // multi-indices e with |e| = alpha
    std::vector<unsigned> cur;
    detail::exponents_of_degree(n, alpha, cur, weight_exps);

    std::vector<std::vector<unsigned>> exps; // over parameters (t, x_1..x_{n-1})
    for (const auto& e : weight_exps) {
        long long cap = beta;
        for (int i = 0; i < n; ++i) cap += static_cast<long long>(e[static_cast<std::size_t>(i)]) * a.entries()[static_cast<std::size_t>(i)];
        for (long long m = 0; m <= cap; ++m) {
            std::vector<unsigned> v(static_cast<std::size_t>(n), 0u);
            v[0] = static_cast<unsigned>(m);
            for (int i = 0; i + 1 < n; ++i) v[static_cast<std::size_t>(i + 1)] = e[static_cast<std::size_t>(i)];
            exps.push_back(std::move(v));
        }
    }
    detail::sort_coords_graded_lex(exps);

    MonomialMap map;
    map.n_params = n;
    for (auto& e : exps) map.coords.push_back({Monomial{1, std::move(e)}});
    std::ostringstream os;
    os << "bundle" << a.str() << "|" << alpha << "H+" << beta << "F|";
    map.label = os.str();
    map.validate();
    return map;
}

/// The rational normal scroll S(a_1,...,a_n) in P^{sum a_i + n - 1}.
inline MonomialMap scroll(const ScrollType& a) {
    MonomialMap map = bundle_embedding(a, 1, 0);
    map.label = "scroll" + a.str();
    return map;
}

/// Rational normal curve of degree r: the n = 1 scroll S(r).
inline MonomialMap rational_normal_curve(int r) {
    if (r < 1) throw std::invalid_argument("rational_normal_curve: need r >= 1");
    MonomialMap map = scroll(ScrollType{std::vector<int>{r}});
    std::ostringstream os;
    os << "rnc(" << r << ")";
    map.label = os.str();
    return map;
}

/// Cone J(P^l, X) over an inner variety: l+1 fresh parameters appended as
/// l+1 new coordinates.  Dimension and ambient both grow by l+1.
inline MonomialMap cone_over(const MonomialMap& inner, int l) {
    if (l < 0) throw std::invalid_argument("cone_over: need l >= 0");
    MonomialMap map;
    map.n_params = inner.n_params + l + 1;
    map.coeff_modulus = inner.coeff_modulus;
    for (const auto& poly : inner.coords) {
        Polynomial widened;
        widened.reserve(poly.size());
        for (const auto& m : poly) {
            Monomial w = m;
            w.exps.resize(static_cast<std::size_t>(map.n_params), 0u);
            widened.push_back(std::move(w));
        }
        map.coords.push_back(std::move(widened));
    }
    for (int j = 0; j <= l; ++j) {
        std::vector<unsigned> e(static_cast<std::size_t>(map.n_params), 0u);
        e[static_cast<std::size_t>(inner.n_params + j)] = 1;
        map.coords.push_back({Monomial{1, std::move(e)}});
    }
    std::ostringstream os;
    os << "cone(" << inner.label << "," << l << ")";
    map.label = os.str();
    map.validate();
    return map;
}

// ---------------------------------------------------------------------------
// Evaluation over a field
// ---------------------------------------------------------------------------

/// Evaluates phi(point) and all first partials, returning the
/// (n_params+1) x (r+1) matrix whose row space is the tangent space of the
/// affine cone at phi(point).  Throws DegeneratePointError if phi(point) = 0.
template <typename Field>
std::vector<std::vector<typename Field::Elem>>
jacobian_rows(const MonomialMap& map, const std::vector<typename Field::Elem>& point, const Field& field) {
    using Elem = typename Field::Elem;
    if (point.size() != static_cast<std::size_t>(map.n_params))
        throw std::invalid_argument("jacobian_rows: point length mismatch");

    const std::size_t ncols = map.coords.size();
    const std::size_t nvars = static_cast<std::size_t>(map.n_params);

    // power tables per variable
    unsigned max_deg = 0;
    for (const auto& poly : map.coords)
        for (const auto& m : poly)
            for (unsigned e : m.exps) max_deg = std::max(max_deg, e);
    std::vector<std::vector<Elem>> pw(nvars);
    for (std::size_t v = 0; v < nvars; ++v) {
        pw[v].resize(max_deg + 1);
        pw[v][0] = field.one();
        for (unsigned e = 1; e <= max_deg; ++e) pw[v][e] = field.mul(pw[v][e - 1], point[v]);
    }

    std::vector<std::vector<Elem>> rows(nvars + 1, std::vector<Elem>(ncols, field.zero()));
    for (std::size_t c = 0; c < ncols; ++c) {
        for (const auto& m : map.coords[c]) {
            Elem coeff = field.from_int(m.coeff);
            Elem val = coeff;
            for (std::size_t v = 0; v < nvars; ++v) val = field.mul(val, pw[v][m.exps[v]]);
            rows[0][c] = field.add(rows[0][c], val);
            for (std::size_t v = 0; v < nvars; ++v) {
                unsigned e = m.exps[v];
                if (e == 0) continue;
                // d/dt_v: e * coeff * t_v^{e-1} * prod_{w != v} t_w^{e_w}
                Elem dval = field.mul(coeff, field.from_int(static_cast<long long>(e)));
                for (std::size_t w = 0; w < nvars; ++w)
                    dval = field.mul(dval, pw[w][w == v ? e - 1 : m.exps[w]]);
                rows[v + 1][c] = field.add(rows[v + 1][c], dval);
            }
        }
    }

    bool all_zero = true;
    for (const auto& x : rows[0])
        if (!(x == field.zero())) { all_zero = false; break; }
    if (all_zero)
        throw DegeneratePointError("jacobian_rows: map vanishes at sampled point of " + map.label);
    return rows;
}

} // namespace secant
