#include <ksurf/lattice.hpp>

#include <stdexcept>
#include <utility>

namespace ksurf
{

namespace
{

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw std::overflow_error("lattice reduction overflowed int64");
    }
    return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw std::overflow_error("lattice reduction overflowed int64");
    }
    return out;
}

// Returns g = gcd(a, b) >= 0 with u a + v b = g.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t &u, std::int64_t &v)
{
    std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
        old_t = std::exchange(t, old_t - q * t);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    u = old_s;
    v = old_t;
    return old_r;
}

// rows[i] <- x rows[i] + y rows[j]; rows[j] <- z rows[i] + w rows[j]
void combine(IntMatrix &rows, std::size_t i, std::size_t j, std::int64_t x, std::int64_t y, std::int64_t z,
             std::int64_t w)
{
    for (std::size_t c = 0; c < rows[i].size(); ++c) {
        const std::int64_t ri = rows[i][c], rj = rows[j][c];
        rows[i][c] = checked_add(checked_mul(x, ri), checked_mul(y, rj));
        rows[j][c] = checked_add(checked_mul(z, ri), checked_mul(w, rj));
    }
}

void axpy(IntVector &dst, std::int64_t k, const IntVector &src)
{
    for (std::size_t c = 0; c < dst.size(); ++c) {
        dst[c] = checked_add(dst[c], checked_mul(k, src[c]));
    }
}

// Brings rows into echelon form over the first `cols` columns with unimodular
// row operations; returns the number of pivot rows.
std::size_t echelonize(IntMatrix &rows, std::size_t cols)
{
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows.size(); ++c) {
        for (std::size_t i = pivot_row + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) {
                continue;
            }
            const std::int64_t a = rows[pivot_row][c], b = rows[i][c];
            std::int64_t u = 0, v = 0;
            const std::int64_t g = ext_gcd(a, b, u, v);
            // [u v; -b/g a/g] has determinant 1.
            combine(rows, pivot_row, i, u, v, -b / g, a / g);
        }
        if (rows[pivot_row][c] == 0) {
            continue;
        }
        if (rows[pivot_row][c] < 0) {
            for (auto &x : rows[pivot_row]) {
                x = -x;
            }
        }
        const std::int64_t p = rows[pivot_row][c];
        for (std::size_t i = 0; i < pivot_row; ++i) {
            std::int64_t q = rows[i][c] / p;
            if (rows[i][c] - q * p < 0) {
                --q;
            }
            if (q != 0) {
                axpy(rows[i], -q, rows[pivot_row]);
            }
        }
        ++pivot_row;
    }
    return pivot_row;
}

} // namespace

IntMatrix hermite_normal_form(IntMatrix rows)
{
    if (rows.empty()) {
        return rows;
    }
    const std::size_t cols = rows.front().size();
    for (const auto &r : rows) {
        if (r.size() != cols) {
            throw std::invalid_argument("hermite_normal_form: ragged matrix");
        }
    }
    const std::size_t rank = echelonize(rows, cols);
    rows.resize(rank);
    return rows;
}

IntMatrix integer_kernel(const IntMatrix &a, std::size_t n_cols)
{
    for (const auto &row : a) {
        if (row.size() != n_cols) {
            throw std::invalid_argument("integer_kernel: row length mismatch");
        }
    }
    const std::size_t m = a.size();
    // Row j of the work matrix is (column j of A | e_j).
    IntMatrix work(n_cols, IntVector(m + n_cols, 0));
    for (std::size_t j = 0; j < n_cols; ++j) {
        for (std::size_t i = 0; i < m; ++i) {
            work[j][i] = a[i][j];
        }
        work[j][m + j] = 1;
    }
    const std::size_t rank = echelonize(work, m);
    IntMatrix kernel;
    for (std::size_t j = rank; j < n_cols; ++j) {
        kernel.emplace_back(work[j].begin() + static_cast<std::ptrdiff_t>(m), work[j].end());
    }
    return hermite_normal_form(std::move(kernel));
}

} // namespace ksurf
