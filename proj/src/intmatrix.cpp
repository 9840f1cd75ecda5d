#include "ehrq/intmatrix.hpp"

#include <cstdlib>
#include <utility>

namespace ehrq {

std::size_t exact_rank(IntegerMatrix m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t rank = 0;
    Int previous_pivot = 1;

    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        // Smallest-magnitude nonzero pivot keeps the fraction-free minors
        // from growing faster than necessary.
        std::size_t pivot_row = rows;
        for (std::size_t i = rank; i < rows; ++i) {
            const Int& candidate = m.at(i, col);
            if (candidate == 0) continue;
            if (pivot_row == rows ||
                boost::multiprecision::abs(candidate) < boost::multiprecision::abs(m.at(pivot_row, col)))
                pivot_row = i;
        }
        if (pivot_row == rows) continue;
        if (pivot_row != rank)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(rank, j), m.at(pivot_row, j));

        // Every row of the active submatrix is rescaled, including rows with
        // a zero in the pivot column: the entries-stay-minors invariant that
        // makes the division exact depends on it.
        const Int pivot = m.at(rank, col);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const Int factor = m.at(i, col);
            for (std::size_t j = col + 1; j < cols; ++j) {
                Int value = pivot * m.at(i, j) - factor * m.at(rank, j);
                value /= previous_pivot;  // exact by Sylvester's identity
                m.at(i, j) = std::move(value);
            }
            m.at(i, col) = 0;
        }
        previous_pivot = pivot;
        ++rank;
    }
    return rank;
}

}  // namespace ehrq
