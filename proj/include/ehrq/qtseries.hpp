#pragma once

#include "ehrq/qlaurent.hpp"
#include "ehrq/qtpoly.hpp"

#include <cstdint>
#include <vector>

namespace ehrq {

/**
 * Power series in t truncated at a fixed order N, with QLaurent
 * coefficients: coeffs()[r] is the t^r coefficient for 0 <= r <= N.
 * All arithmetic truncates at the order of the receiver.
 */
class QTSeries {
public:
    explicit QTSeries(std::size_t order);  // the zero series
    static QTSeries truncation(const QTPoly& p, std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const QLaurent& at(std::size_t r) const;
    void set(std::size_t r, QLaurent value);

    QTSeries operator+(const QTSeries& other) const;  // orders must match
    QTSeries operator-(const QTSeries& other) const;
    bool operator==(const QTSeries& other) const = default;

    // Truncated product with a polynomial.
    QTSeries multiplied_by(const QTPoly& p) const;

    // Truncated product with the geometric series 1/(1 - q^e t).
    QTSeries divided_by_factor(std::int64_t e) const;

    const std::vector<QLaurent>& coeffs() const { return coeffs_; }

private:
    std::vector<QLaurent> coeffs_;
};

// Coefficient-wise equality of the t^0 ... t^N parts. Throws if either
// series is truncated below N.
bool series_equal(const QTSeries& s1, const QTSeries& s2, std::size_t n);

}  // namespace ehrq
