#pragma once

#include <cstddef>
#include <vector>

#include "universalis/rational.hpp"

namespace universalis {

/// Outcome of an exact linear solve A x = b. For underdetermined but
/// consistent systems the solution set is the affine space
/// { particular + sum_k t_k * directions[k] }, one direction per free
/// column.
struct LinearSolution {
    enum class Status { unique, underdetermined, infeasible };

    Status status = Status::infeasible;
    std::size_t rank = 0;
    std::vector<Rational> particular;                 // free variables set to 0
    std::vector<std::size_t> free_cols;               // non-pivot columns, ascending
    std::vector<std::vector<Rational>> directions;    // one per free column
};

/// Exact Gauss-Jordan elimination on rationals with full pivoting by
/// magnitude; pivot ties broken by lowest column then lowest row index, so
/// the reduction is deterministic.
inline LinearSolution solve_exact(std::vector<std::vector<Rational>> a,
                                  std::vector<Rational> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    for (auto& row : a)
        if (row.size() != cols) throw std::invalid_argument("solve_exact: ragged matrix");
    if (b.size() != rows) throw std::invalid_argument("solve_exact: rhs size mismatch");

    std::vector<bool> col_used(cols, false);
    std::vector<std::size_t> pivot_col_of_row;  // pivot column for row r < rank

    std::size_t rank = 0;
    while (rank < rows) {
        // Full pivot search over unreduced rows and unused columns.
        Rational best(0);
        std::size_t best_r = 0, best_c = 0;
        bool found = false;
        for (std::size_t c = 0; c < cols; ++c) {
            if (col_used[c]) continue;
            for (std::size_t r = rank; r < rows; ++r) {
                Rational mag = a[r][c].abs();
                if (mag > best) {
                    best = mag;
                    best_r = r;
                    best_c = c;
                    found = true;
                }
            }
        }
        if (!found) break;

        std::swap(a[rank], a[best_r]);
        std::swap(b[rank], b[best_r]);
        col_used[best_c] = true;
        pivot_col_of_row.push_back(best_c);

        const Rational piv = a[rank][best_c];
        for (auto& v : a[rank]) v /= piv;
        b[rank] /= piv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][best_c] == Rational(0)) continue;
            const Rational factor = a[r][best_c];
            for (std::size_t c = 0; c < cols; ++c) a[r][c] -= factor * a[rank][c];
            b[r] -= factor * b[rank];
        }
        ++rank;
    }

    LinearSolution out;
    out.rank = rank;
    for (std::size_t r = rank; r < rows; ++r)
        if (b[r] != Rational(0)) {
            out.status = LinearSolution::Status::infeasible;
            return out;
        }

    out.particular.assign(cols, Rational(0));
    for (std::size_t r = 0; r < rank; ++r) out.particular[pivot_col_of_row[r]] = b[r];

    for (std::size_t c = 0; c < cols; ++c)
        if (!col_used[c]) out.free_cols.push_back(c);

    for (std::size_t f : out.free_cols) {
        std::vector<Rational> dir(cols, Rational(0));
        dir[f] = Rational(1);
        for (std::size_t r = 0; r < rank; ++r) dir[pivot_col_of_row[r]] = -a[r][f];
        out.directions.push_back(std::move(dir));
    }

    out.status = out.free_cols.empty() ? LinearSolution::Status::unique
                                       : LinearSolution::Status::underdetermined;
    return out;
}

}  // namespace universalis
