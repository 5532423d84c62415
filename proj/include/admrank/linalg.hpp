#ifndef ADMRANK_LINALG_HPP
#define ADMRANK_LINALG_HPP

#include "admrank/rational.hpp"

#include <vector>

namespace admrank {

/// Dense matrix of exact integers, row-major.
using IntMatrix = std::vector<std::vector<Int>>;

/// Rank over Q, computed by fraction-free (Bareiss) row elimination.
int matrix_rank(IntMatrix m);

/// Basis of the right kernel { v : m v = 0 }, each vector a primitive
/// integer vector with positive first nonzero entry, ordered by the index
/// of their free column (then canonical). May be empty.
std::vector<std::vector<Int>> kernel_basis(IntMatrix m);

/// True if v lies in the rational span of the rows of basis.
bool in_row_span(const std::vector<std::vector<Int>>& basis, const std::vector<Int>& v);

/// Solve basis^T x = v over Q (i.e. express v in the given spanning set).
/// Returns empty when v is not in the span.
std::vector<Rat> coordinates_in_span(const std::vector<std::vector<Int>>& basis,
                                     const std::vector<Int>& v);

} // namespace admrank

#endif
