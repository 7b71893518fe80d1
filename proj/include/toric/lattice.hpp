#pragma once

#include "toric/exponent.hpp"

#include <vector>

namespace toric {

/// Dense integer matrix, row major. Rows are lattice generators.
using IntMatrix = std::vector<std::vector<Int>>;

struct HnfResult {
    IntMatrix hnf;        // row Hermite normal form of the input
    IntMatrix transform;  // unimodular U with U * input = hnf
    std::size_t rank = 0; // number of nonzero rows of hnf
};

/// Row HNF over the integers with transformation matrix, exact arithmetic.
HnfResult row_hnf(IntMatrix m);

/// Basis (as rows) of { x : x * m = 0 } over the integers.
IntMatrix left_kernel(const IntMatrix& m);

std::size_t lattice_rank(const IntMatrix& m);

/// Basis rows of rowspan(a) n rowspan(b).
IntMatrix lattice_intersection(const IntMatrix& a, const IntMatrix& b);

IntMatrix rows_from_points(const std::vector<ExponentVector>& points);

}  // namespace toric
