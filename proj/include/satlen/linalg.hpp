#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "satlen/field.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace satlen {

/// Selects the serial reference loop or its OpenMP counterpart.
enum class Execution { Serial, Parallel };

template <CoefficientField K>
using Matrix = std::vector<std::vector<typename K::value_type>>;

/// Result of Gaussian elimination: the nonzero reduced rows and, for each,
/// its pivot column (the leftmost nonzero entry). With `reduced = true`
/// pivots are 1 and pivot columns are zero in every other row.
template <CoefficientField K>
struct RowEchelon {
    Matrix<K> rows;
    std::vector<std::size_t> pivots;

    std::size_t rank() const noexcept { return rows.size(); }
};

namespace detail {

// row -= factor * pivot_row, from column `from` on
template <CoefficientField K>
inline void axpy_row(const K& k, std::vector<typename K::value_type>& row,
                     const std::vector<typename K::value_type>& pivot_row, const typename K::value_type& factor,
                     std::size_t from) {
    for (std::size_t c = from; c < row.size(); ++c)
        if (!k.is_zero(pivot_row[c])) row[c] = k.sub(row[c], k.mul(factor, pivot_row[c]));
}

} // namespace detail

/// Gaussian elimination with column-major pivot search. The per-pivot row
/// updates are independent; Execution::Parallel distributes them over
/// OpenMP threads and produces bit-identical output.
template <CoefficientField K>
RowEchelon<K> row_echelon(const K& k, Matrix<K> m, bool reduced = false, Execution exec = Execution::Serial) {
    RowEchelon<K> out;
    if (m.empty()) return out;
    const std::size_t ncols = m.front().size();
    std::size_t rank = 0;
    const std::size_t nrows = m.size();
    for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
        std::size_t piv = rank;
        while (piv < nrows && k.is_zero(m[piv][col])) ++piv;
        if (piv == nrows) continue;
        std::swap(m[rank], m[piv]);
        auto inv = k.inv(m[rank][col]);
        for (std::size_t c = col; c < ncols; ++c) m[rank][c] = k.mul(m[rank][c], inv);
        const auto& prow = m[rank];
        const std::size_t lo = reduced ? 0 : rank + 1;
        const long long total = static_cast<long long>(nrows);
        if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(static)
            for (long long r = static_cast<long long>(lo); r < total; ++r) {
                auto ru = static_cast<std::size_t>(r);
                if (ru == rank || k.is_zero(m[ru][col])) continue;
                auto f = m[ru][col];
                detail::axpy_row(k, m[ru], prow, f, col);
            }
        } else {
            for (std::size_t r = lo; r < nrows; ++r) {
                if (r == rank || k.is_zero(m[r][col])) continue;
                auto f = m[r][col];
                detail::axpy_row(k, m[r], prow, f, col);
            }
        }
        out.pivots.push_back(col);
        ++rank;
    }
    m.resize(rank);
    out.rows = std::move(m);
    return out;
}

template <CoefficientField K>
std::size_t matrix_rank(const K& k, Matrix<K> m, Execution exec = Execution::Serial) {
    return row_echelon(k, std::move(m), false, exec).rank();
}

/// Indices of a maximal set of linearly independent columns (the pivot
/// columns of the echelon form).
template <CoefficientField K>
std::vector<std::size_t> independent_columns(const K& k, Matrix<K> m, Execution exec = Execution::Serial) {
    return row_echelon(k, std::move(m), false, exec).pivots;
}

} // namespace satlen
