#include "ehrq/qtrational.hpp"

#include <algorithm>
#include <utility>

namespace ehrq {

namespace {

QTPoly linear_factor(std::int64_t e) {
    QTPoly f{Int(1)};
    f.add_term(1, e, -1);
    return f;
}

QTPoly factor_product(const std::vector<std::int64_t>& exponents) {
    QTPoly result{Int(1)};
    for (std::int64_t e : exponents) result = result * linear_factor(e);
    return result;
}

// Multiset difference a \ b for sorted vectors.
std::vector<std::int64_t> multiset_minus(const std::vector<std::int64_t>& a,
                                         const std::vector<std::int64_t>& b) {
    std::vector<std::int64_t> result;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(result));
    return result;
}

}  // namespace

QTRational::QTRational(QTPoly num, std::vector<std::int64_t> den)
    : numerator(std::move(num)), denominator(std::move(den)) {
    std::sort(denominator.begin(), denominator.end());
}

QTPoly QTRational::denominator_poly() const { return factor_product(denominator); }

QTRational QTRational::substitute_q_one() const {
    return QTRational(numerator.substitute_q_one(),
                      std::vector<std::int64_t>(denominator.size(), 0));
}

QTSeries series_expand(const QTRational& r, std::size_t order) {
    QTSeries s = QTSeries::truncation(r.numerator, order);
    for (std::int64_t e : r.denominator) s = s.divided_by_factor(e);
    return s;
}

bool rational_equal(const QTRational& a, const QTRational& b) {
    // Shared factors cancel from both sides of the cross-multiplication.
    const auto extra_a = multiset_minus(b.denominator, a.denominator);
    const auto extra_b = multiset_minus(a.denominator, b.denominator);
    return a.numerator * factor_product(extra_a) == b.numerator * factor_product(extra_b);
}

std::optional<QTPoly> divide_by_factor(const QTPoly& p, std::int64_t e) {
    if (p.is_zero()) return QTPoly{};
    const std::int64_t degree = p.t_degree();
    // With p = sum p_r t^r and quotient g, p_r = g_r - q^e g_{r-1}; run the
    // recurrence upward and require the top coefficient to close exactly.
    QTPoly quotient;
    QLaurent carry;  // g_{r-1}
    for (std::int64_t r = 0; r < degree; ++r) {
        QLaurent g_r = p.coeff_of_t(r) + carry.shifted(e);
        for (const auto& [q_exp, c] : g_r.terms()) quotient.add_term(r, q_exp, c);
        carry = std::move(g_r);
    }
    if (!(p.coeff_of_t(degree) + carry.shifted(e)).is_zero()) return std::nullopt;
    return quotient;
}

}  // namespace ehrq
