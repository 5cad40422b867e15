#include "lieham/rational.hpp"

#include <numeric>

namespace lieham {

bool solve_exact(RatMatrix A, std::vector<Rational> b,
                 std::vector<Rational>& x, std::size_t* bad_row) {
    const std::size_t rows = A.size();
    const std::size_t cols = rows ? A[0].size() : 0;
    std::vector<std::size_t> orig(rows);
    std::iota(orig.begin(), orig.end(), std::size_t{0});
    std::vector<std::size_t> pivot_col_of_row;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t p = row;
        while (p < rows && A[p][col].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(A[p], A[row]);
        std::swap(b[p], b[row]);
        std::swap(orig[p], orig[row]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || A[r][col].is_zero()) continue;
            Rational f = A[r][col] / A[row][col];
            for (std::size_t c = col; c < cols; ++c) A[r][c] -= f * A[row][c];
            b[r] -= f * b[row];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < rows; ++r) {
        if (!b[r].is_zero()) {
            if (bad_row) *bad_row = orig[r];
            return false;
        }
    }
    x.assign(cols, Rational(0));
    for (std::size_t r = 0; r < row; ++r)
        x[pivot_col_of_row[r]] = b[r] / A[r][pivot_col_of_row[r]];
    return true;
}

}  // namespace lieham
