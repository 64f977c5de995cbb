#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "secant/fp.hpp"
#include "secant/rational_field.hpp"

namespace secant {

/// Rank over F_p by fraction-free Gaussian elimination: rows below the pivot
/// are replaced by pivot*row - entry*pivot_row, so no inverses are needed.
/// Deterministic for fixed input.
inline int exact_rank(std::vector<std::vector<std::uint64_t>> m, const PrimeField& f) {
    if (m.empty()) throw std::invalid_argument("exact_rank: empty matrix");
    const std::size_t rows = m.size(), cols = m[0].size();
    for (const auto& r : m)
        if (r.size() != cols) throw std::invalid_argument("exact_rank: ragged matrix");

    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        const std::uint64_t p = m[rank][col];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const std::uint64_t e = m[i][col];
            if (e == 0) continue;
            for (std::size_t j = col; j < cols; ++j)
                m[i][j] = f.sub(f.mul(p, m[i][j]), f.mul(e, m[rank][j]));
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

/// Rank over Q with exact fractions.
inline int exact_rank(std::vector<std::vector<RationalField::Elem>> m, const RationalField& f) {
    if (m.empty()) throw std::invalid_argument("exact_rank: empty matrix");
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        const auto pinv = f.inv(m[rank][col]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            const auto factor = f.mul(m[i][col], pinv);
            for (std::size_t j = col; j < cols; ++j)
                m[i][j] = f.sub(m[i][j], f.mul(factor, m[rank][j]));
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

/// Deterministic basis of { v : M v = 0 } over F_p via reduced row echelon
/// form; one kernel vector per free column, in column order.  Used to
/// complete tangent spaces to linear projections.
inline std::vector<std::vector<std::uint64_t>>
kernel_basis(std::vector<std::vector<std::uint64_t>> m, const PrimeField& f) {
    if (m.empty()) throw std::invalid_argument("kernel_basis: empty matrix");
    const std::size_t rows = m.size(), cols = m[0].size();

    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        const std::uint64_t inv = f.inv(m[rank][col]);
        for (std::size_t j = col; j < cols; ++j) m[rank][j] = f.mul(m[rank][j], inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][col] == 0) continue;
            const std::uint64_t e = m[i][col];
            for (std::size_t j = col; j < cols; ++j)
                m[i][j] = f.sub(m[i][j], f.mul(e, m[rank][j]));
        }
        pivot_col.push_back(col);
        ++rank;
    }

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<std::uint64_t>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint64_t> v(cols, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = f.neg(m[i][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace secant
