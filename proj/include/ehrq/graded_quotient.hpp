#pragma once

#include "ehrq/intmatrix.hpp"
#include "ehrq/lattice.hpp"
#include "ehrq/qtpoly.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace ehrq {

/**
 * Finitely supported table (r, k) -> nonnegative dimension, used for
 * bigraded Hilbert functions. Zero entries are not stored.
 */
class BigradedTable {
public:
    using Key = std::pair<std::int64_t, std::int64_t>;

    void set(std::int64_t r, std::int64_t k, std::int64_t value);
    std::int64_t at(std::int64_t r, std::int64_t k) const;
    const std::map<Key, std::int64_t>& entries() const { return entries_; }
    bool operator==(const BigradedTable& other) const = default;

    // Sum of all entries.
    Int total() const;

    // Reads a bivariate polynomial with nonnegative coefficients as a
    // table, t-exponent -> r and q-exponent -> k.
    static BigradedTable from_coefficients(const QTPoly& p);

private:
    std::map<Key, std::int64_t> entries_;
};

// The C(d, j) zero-one vectors of coordinate sum j, in lexicographic
// order: the monomial support of the degree-(1, j) element y_j of the
// cube's semigroup algebra.
std::vector<LatticePoint> y_element_support(int d, int j);

// Degree-(r, k) piece of the ideal <y_0, ..., y_d> inside the cube's
// semigroup algebra, as a matrix over the monomial basis: rows are the
// lattice points of the r-fold cube with coordinate sum k, columns are
// the products y_j * x_u over basis points u of the (r-1)-fold cube with
// coordinate sum k - j (columns ordered lexicographically in (j, u)).
IntegerMatrix ideal_piece_matrix(int d, std::int64_t r, std::int64_t k);

// Bigraded Hilbert function of the quotient by <y_0, ..., y_d> up to
// t-degree r_max: entry (r, k) is the number of basis points minus the
// exact rank of the ideal piece. Supported for 1 <= d <= 4. Independent
// (r, k) blocks are computed in parallel and merged deterministically.
BigradedTable quotient_hilbert(int d, std::int64_t r_max);

struct RegularSequenceCheck {
    bool matches = false;  // quotient table equals the refined Eulerian table
    BigradedTable table;
};

// Certifies at desk scale that y_0, ..., y_d cut the cube's semigroup
// algebra down to a finite-dimensional quotient whose bigraded Hilbert
// function is the refined Eulerian polynomial: the table is computed to
// t-degree d+2 (two degrees beyond the expected vanishing) and compared
// entry-for-entry, including the total dimension d!.
RegularSequenceCheck verify_regular_sequence(int d);

}  // namespace ehrq
