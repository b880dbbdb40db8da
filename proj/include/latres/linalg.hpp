#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace latres {

/// Coefficient field for exact rank computations.
struct FieldSpec {
    bool rational = true;
    std::uint64_t prime = 32003;

    static FieldSpec rationals() { return {true, 0}; }
    static FieldSpec gf(std::uint64_t p) { return {false, p}; }
};

/// Sparse integer matrix given column-wise as (row, value) entries.
struct SparseIntMatrix {
    long long rows = 0;
    std::vector<std::vector<std::pair<int, long long>>> columns;

    long long cols() const { return static_cast<long long>(columns.size()); }
    void add_entry(int col, int row, long long value) {
        columns[col].emplace_back(row, value);
    }
};

long long sparse_rank(const SparseIntMatrix& m, const FieldSpec& field);

} // namespace latres
