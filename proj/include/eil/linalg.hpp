#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "eil/field.hpp"

namespace eil {

/// Sparse integer column: (row, coefficient) pairs, rows distinct.
using SparseColumn = std::vector<std::pair<int, std::int64_t>>;

/// Rank over F of the matrix with the given columns. Integer entries are
/// reduced mod p for prime fields. Over the rationals, elimination is
/// fraction-free in 64-bit integers and falls back to big integers on overflow.
std::size_t matrix_rank(const std::vector<SparseColumn>& columns, int rows, const Field& field);

/// Whether `target` lies in the column span over F.
bool in_column_span(const std::vector<SparseColumn>& columns, const SparseColumn& target, int rows,
                    const Field& field);

} // namespace eil
