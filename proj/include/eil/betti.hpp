#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "eil/field.hpp"

namespace eil {

/// Graded Betti numbers β_{i,j} of S/I, sparse; zero entries are never stored.
struct BettiTable {
    Field field = Field::gf2();
    std::map<std::pair<int, int>, std::int64_t> entries;

    std::int64_t at(int i, int j) const;
    void add(int i, int j, std::int64_t value);
    /// max{j - i : β_{i,j} ≠ 0}, or -1 for an empty table.
    int regularity() const;
    int projective_dimension() const;
    /// Macaulay2-style grid: columns i, rows j - i.
    std::string grid() const;
    /// {"field": ..., "entries": [[i, j, β], ...], "regularity": r}
    std::string to_json() const;

    /// Compares entries only.
    friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.entries == b.entries; }
};

} // namespace eil
