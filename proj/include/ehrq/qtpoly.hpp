#pragma once

#include "ehrq/bigint.hpp"
#include "ehrq/qlaurent.hpp"

#include <cstdint>
#include <map>
#include <utility>

namespace ehrq {

/**
 * Sparse bivariate polynomial in (t, q): t-exponents are nonnegative,
 * q-exponents range over all integers. Terms are kept in canonical
 * (t, q)-lexicographic order with no stored zeros.
 */
class QTPoly {
public:
    using Key = std::pair<std::int64_t, std::int64_t>;  // (t_exp, q_exp)

    QTPoly() = default;
    explicit QTPoly(Int constant);
    static QTPoly monomial(Int coeff, std::int64_t t_exp, std::int64_t q_exp);

    // p(q) * t^{t_exp} as a bivariate polynomial.
    static QTPoly from_qlaurent(const QLaurent& p, std::int64_t t_exp = 0);

    // Reads a polynomial in t alone (all exponents of the argument must be
    // nonnegative; they become t-exponents).
    static QTPoly from_t_polynomial(const QLaurent& p);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Int coeff(std::int64_t t_exp, std::int64_t q_exp) const;

    // The q-Laurent coefficient of t^r.
    QLaurent coeff_of_t(std::int64_t r) const;

    // Largest t-exponent; requires a nonzero polynomial.
    std::int64_t t_degree() const;

    void add_term(std::int64_t t_exp, std::int64_t q_exp, const Int& c);

    QTPoly& operator+=(const QTPoly& other);
    QTPoly& operator-=(const QTPoly& other);
    QTPoly operator+(const QTPoly& other) const;
    QTPoly operator-(const QTPoly& other) const;
    QTPoly operator*(const QTPoly& other) const;
    QTPoly operator-() const;
    bool operator==(const QTPoly& other) const = default;

    // q = 1 specialization: a polynomial in t alone.
    QTPoly substitute_q_one() const;

    const std::map<Key, Int>& terms() const { return terms_; }

private:
    std::map<Key, Int> terms_;
};

}  // namespace ehrq
