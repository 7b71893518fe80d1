#include "toric/lattice.hpp"

#include <algorithm>

namespace toric {

namespace {

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

void sub_scaled(std::vector<Int>& target, const std::vector<Int>& source, const Int& q) {
    for (std::size_t j = 0; j < target.size(); ++j)
        target[j] -= q * source[j];
}

void negate(std::vector<Int>& row) {
    for (Int& v : row)
        v = -v;
}

}  // namespace

HnfResult row_hnf(IntMatrix m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    IntMatrix u(rows, std::vector<Int>(rows));
    for (std::size_t i = 0; i < rows; ++i)
        u[i][i] = 1;

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        // Euclidean elimination below pivot_row until a single nonzero
        // entry (the gcd of the column) remains.
        while (true) {
            std::size_t best = rows;
            for (std::size_t i = pivot_row; i < rows; ++i) {
                if (m[i][col] == 0)
                    continue;
                if (best == rows || abs(m[i][col]) < abs(m[best][col]))
                    best = i;
            }
            if (best == rows)
                break;  // column all zero below pivot_row
            std::swap(m[best], m[pivot_row]);
            std::swap(u[best], u[pivot_row]);
            bool cleared = true;
            for (std::size_t i = pivot_row + 1; i < rows; ++i) {
                if (m[i][col] == 0)
                    continue;
                Int q = m[i][col] / m[pivot_row][col];
                if (q != 0) {
                    sub_scaled(m[i], m[pivot_row], q);
                    sub_scaled(u[i], u[pivot_row], q);
                }
                if (m[i][col] != 0)
                    cleared = false;
            }
            if (cleared)
                break;
        }
        if (m[pivot_row][col] == 0)
            continue;
        if (m[pivot_row][col] < 0) {
            negate(m[pivot_row]);
            negate(u[pivot_row]);
        }
        for (std::size_t i = 0; i < pivot_row; ++i) {
            Int q = floor_div(m[i][col], m[pivot_row][col]);
            if (q != 0) {
                sub_scaled(m[i], m[pivot_row], q);
                sub_scaled(u[i], u[pivot_row], q);
            }
        }
        ++pivot_row;
    }
    return HnfResult{std::move(m), std::move(u), pivot_row};
}

IntMatrix left_kernel(const IntMatrix& m) {
    HnfResult h = row_hnf(m);
    IntMatrix kernel;
    for (std::size_t i = h.rank; i < h.transform.size(); ++i)
        kernel.push_back(h.transform[i]);
    return kernel;
}

std::size_t lattice_rank(const IntMatrix& m) { return row_hnf(m).rank; }

IntMatrix lattice_intersection(const IntMatrix& a, const IntMatrix& b) {
    if (a.empty() || b.empty())
        return {};
    const std::size_t d = a[0].size();
    check_invariant(b[0].size() == d, "lattice dimension mismatch");

    IntMatrix stacked;
    stacked.reserve(a.size() + b.size());
    for (const auto& row : a)
        stacked.push_back(row);
    for (const auto& row : b) {
        std::vector<Int> neg = row;
        negate(neg);
        stacked.push_back(std::move(neg));
    }

    IntMatrix kernel = left_kernel(stacked);
    IntMatrix candidates;
    for (const auto& k : kernel) {
        std::vector<Int> point(d);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < d; ++j)
                point[j] += k[i] * a[i][j];
        candidates.push_back(std::move(point));
    }

    HnfResult h = row_hnf(std::move(candidates));
    IntMatrix basis;
    for (std::size_t i = 0; i < h.rank; ++i)
        basis.push_back(h.hnf[i]);
    return basis;
}

IntMatrix rows_from_points(const std::vector<ExponentVector>& points) {
    IntMatrix rows;
    rows.reserve(points.size());
    for (const auto& p : points)
        rows.push_back(p.entries());
    return rows;
}

}  // namespace toric
