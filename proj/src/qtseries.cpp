#include "ehrq/qtseries.hpp"

#include <stdexcept>
#include <utility>

namespace ehrq {

QTSeries::QTSeries(std::size_t order) : coeffs_(order + 1) {}

QTSeries QTSeries::truncation(const QTPoly& p, std::size_t order) {
    QTSeries s(order);
    for (const auto& [key, c] : p.terms()) {
        if (key.first <= static_cast<std::int64_t>(order))
            s.coeffs_[static_cast<std::size_t>(key.first)].add_term(key.second, c);
    }
    return s;
}

const QLaurent& QTSeries::at(std::size_t r) const {
    if (r >= coeffs_.size()) throw std::out_of_range("QTSeries: index beyond truncation order");
    return coeffs_[r];
}

void QTSeries::set(std::size_t r, QLaurent value) {
    if (r >= coeffs_.size()) throw std::out_of_range("QTSeries: index beyond truncation order");
    coeffs_[r] = std::move(value);
}

QTSeries QTSeries::operator+(const QTSeries& other) const {
    if (order() != other.order()) throw std::invalid_argument("QTSeries: order mismatch");
    QTSeries result(order());
    for (std::size_t r = 0; r < coeffs_.size(); ++r)
        result.coeffs_[r] = coeffs_[r] + other.coeffs_[r];
    return result;
}

QTSeries QTSeries::operator-(const QTSeries& other) const {
    if (order() != other.order()) throw std::invalid_argument("QTSeries: order mismatch");
    QTSeries result(order());
    for (std::size_t r = 0; r < coeffs_.size(); ++r)
        result.coeffs_[r] = coeffs_[r] - other.coeffs_[r];
    return result;
}

QTSeries QTSeries::multiplied_by(const QTPoly& p) const {
    QTSeries result(order());
    for (const auto& [key, c] : p.terms()) {
        const auto t_exp = key.first;
        if (t_exp > static_cast<std::int64_t>(order())) continue;
        for (std::size_t r = 0; r + static_cast<std::size_t>(t_exp) <= order(); ++r) {
            for (const auto& [q_exp, cr] : coeffs_[r].terms())
                result.coeffs_[r + static_cast<std::size_t>(t_exp)].add_term(q_exp + key.second,
                                                                             cr * c);
        }
    }
    return result;
}

QTSeries QTSeries::divided_by_factor(std::int64_t e) const {
    // 1/(1 - q^e t) expands as sum_{i>=0} q^{ie} t^i, so the product obeys
    // the first-order recurrence out[r] = in[r] + q^e * out[r-1].
    QTSeries result(order());
    result.coeffs_[0] = coeffs_[0];
    for (std::size_t r = 1; r < coeffs_.size(); ++r)
        result.coeffs_[r] = coeffs_[r] + result.coeffs_[r - 1].shifted(e);
    return result;
}

bool series_equal(const QTSeries& s1, const QTSeries& s2, std::size_t n) {
    if (s1.order() < n || s2.order() < n)
        throw std::invalid_argument("series_equal: truncation order too small");
    for (std::size_t r = 0; r <= n; ++r)
        if (s1.at(r) != s2.at(r)) return false;
    return true;
}

}  // namespace ehrq
