#pragma once

#include "ehrq/bigint.hpp"

#include <cstddef>
#include <vector>

namespace ehrq {

// Dense matrix with exact integer entries, row-major.
class IntegerMatrix {
public:
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Int> data_;
};

// Rank over the rationals by one-step fraction-free (Bareiss) elimination:
// every division is exact and no rounding occurs. Deterministic: columns
// are processed left to right and the pivot is the smallest-magnitude
// nonzero candidate (lowest row index on ties).
std::size_t exact_rank(IntegerMatrix m);

}  // namespace ehrq
