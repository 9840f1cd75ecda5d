#pragma once

#include "ehrq/bigint.hpp"

#include <cstdint>
#include <map>

namespace ehrq {

/**
 * Sparse Laurent polynomial in a single variable (called q throughout)
 * with arbitrary-precision integer coefficients. Exponents may be
 * negative. Zero coefficients are never stored, so equality is plain
 * term-map equality.
 */
class QLaurent {
public:
    QLaurent() = default;
    explicit QLaurent(Int constant);
    static QLaurent monomial(Int coeff, std::int64_t exp);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Coefficient of q^exp; zero when the term is absent.
    Int coeff(std::int64_t exp) const;

    // Lowest/highest stored exponent; requires a nonzero polynomial.
    std::int64_t min_exp() const;
    std::int64_t max_exp() const;

    // Adds c*q^exp, erasing the term if the sum cancels.
    void add_term(std::int64_t exp, const Int& c);

    QLaurent& operator+=(const QLaurent& other);
    QLaurent& operator-=(const QLaurent& other);
    QLaurent operator+(const QLaurent& other) const;
    QLaurent operator-(const QLaurent& other) const;
    QLaurent operator*(const QLaurent& other) const;
    QLaurent operator-() const;
    bool operator==(const QLaurent& other) const = default;

    // q^k -> q^{-k} on every term.
    QLaurent negated_exponents() const;

    // Multiplication by the unit q^delta.
    QLaurent shifted(std::int64_t delta) const;

    // Value at q = 1, i.e. the coefficient sum.
    Int eval_one() const;

    QLaurent pow(unsigned n) const;

    // Terms in canonical (ascending exponent) order.
    const std::map<std::int64_t, Int>& terms() const { return terms_; }

private:
    std::map<std::int64_t, Int> terms_;
};

// [k]_{q^e} = 1 + q^e + ... + q^{(k-1)e}; requires k >= 1. At e = 0 this
// collapses to the constant k.
QLaurent q_integer(std::int64_t k, std::int64_t e);

// Gaussian binomial [n choose k]_q, computed by the q-Pascal recurrence.
// Requires 0 <= k <= n.
QLaurent q_binomial(std::int64_t n, std::int64_t k);

}  // namespace ehrq
