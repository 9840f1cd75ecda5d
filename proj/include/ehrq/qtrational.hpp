#pragma once

#include "ehrq/qtpoly.hpp"
#include "ehrq/qtseries.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ehrq {

/**
 * Rational function in (t, q) of the shape
 *
 *     numerator / prod_i (1 - q^{e_i} t),
 *
 * with the denominator kept as a multiset of exponents e_i. Factors are
 * never expanded or cancelled against the numerator: simplified and
 * unsimplified presentations stay distinct objects, and equality is
 * decided semantically by rational_equal. An empty denominator makes
 * this a plain polynomial.
 */
struct QTRational {
    QTPoly numerator;
    std::vector<std::int64_t> denominator;  // factor exponents, kept sorted

    QTRational() = default;
    QTRational(QTPoly num, std::vector<std::int64_t> den);

    // Denominator as an expanded polynomial.
    QTPoly denominator_poly() const;

    // q = 1 specialization: exponent collapse on the numerator, every
    // factor becomes (1 - t).
    QTRational substitute_q_one() const;
};

// Geometric-series expansion of the rational function, truncated at t^order.
QTSeries series_expand(const QTRational& r, std::size_t order);

// Exact equality as rational functions, by cross-multiplying each
// numerator with the other side's (uncancelled share of the) denominator.
bool rational_equal(const QTRational& a, const QTRational& b);

// Exact division of p by (1 - q^e t); nullopt when the factor does not
// divide p.
std::optional<QTPoly> divide_by_factor(const QTPoly& p, std::int64_t e);

}  // namespace ehrq
