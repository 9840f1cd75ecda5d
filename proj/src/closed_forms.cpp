#include "ehrq/closed_forms.hpp"

#include "ehrq/permstats.hpp"

#include <set>
#include <stdexcept>

namespace ehrq {

namespace {

void check_weights(int d, const WeightVector& a) {
    if (d < 1) throw std::invalid_argument("dimension must be at least 1");
    if (a.size() != static_cast<std::size_t>(d))
        throw std::invalid_argument("weight vector length does not match dimension");
}

QTPoly t_linear(Int constant_sign) {
    // 1 + constant_sign * t
    QTPoly p{Int(1)};
    p.add_term(1, 0, constant_sign);
    return p;
}

}  // namespace

QTRational simplex_series(int d, const WeightVector& a) {
    check_weights(d, a);
    std::vector<std::int64_t> den{0};
    den.insert(den.end(), a.begin(), a.end());
    return QTRational(QTPoly{Int(1)}, std::move(den));
}

QTRational cross_series(int d, const WeightVector& a) {
    check_weights(d, a);
    QTPoly num{Int(1)};
    for (int i = 0; i < d; ++i) num = num * t_linear(1);
    for (int i = 0; i < d - 1; ++i) num = num * t_linear(-1);
    std::vector<std::int64_t> den;
    for (std::int64_t w : a) {
        den.push_back(w);
        den.push_back(-w);
    }
    return QTRational(std::move(num), std::move(den));
}

Int cross_ehrhart_count(int d, std::int64_t r) {
    if (d < 1) throw std::invalid_argument("dimension must be at least 1");
    Int total = 0;
    for (std::int64_t k = 0; k <= d; ++k) total += binomial(d, k) * binomial(r - k + d, d);
    return total;
}

QTRational square_series(std::int64_t a, std::int64_t b) {
    QTPoly num{Int(1)};
    num.add_term(2, a + b, -1);
    return QTRational(std::move(num), {0, a, b, a + b});
}

QTRational cube_series(std::int64_t a, std::int64_t b, std::int64_t c) {
    // Numerator monomials as (t-degree, coefficient, multiplier triple):
    // the q-exponent of each term is alpha*a + beta*b + gamma*c.
    struct Term {
        int t_exp;
        int coeff;
        int alpha, beta, gamma;
    };
    static constexpr Term kTerms[] = {
        {0, 1, 0, 0, 0},
        {2, -3, 1, 1, 1},
        {2, -1, 2, 1, 1},
        {2, -1, 1, 2, 1},
        {2, -1, 1, 1, 2},
        {2, -1, 1, 1, 0},
        {2, -1, 1, 0, 1},
        {2, -1, 0, 1, 1},
        {3, 2, 1, 1, 1},
        {3, 2, 2, 1, 1},
        {3, 2, 1, 2, 1},
        {3, 2, 1, 1, 2},
        {3, 2, 2, 2, 1},
        {3, 2, 2, 1, 2},
        {3, 2, 1, 2, 2},
        {3, 2, 2, 2, 2},
        {4, -1, 2, 2, 1},
        {4, -1, 2, 1, 2},
        {4, -1, 1, 2, 2},
        {4, -3, 2, 2, 2},
        {4, -1, 3, 2, 2},
        {4, -1, 2, 3, 2},
        {4, -1, 2, 2, 3},
        {6, 1, 3, 3, 3},
    };
    QTPoly num;
    for (const Term& term : kTerms)
        num.add_term(term.t_exp, term.alpha * a + term.beta * b + term.gamma * c, term.coeff);
    return QTRational(std::move(num), {0, a, b, c, a + b, a + c, b + c, a + b + c});
}

QLaurent cube_slice_product(int d, std::int64_t r, const WeightVector& a) {
    check_weights(d, a);
    if (r < 0) throw std::invalid_argument("dilation factor must be nonnegative");
    QLaurent product{Int(1)};
    for (std::int64_t w : a) product = product * q_integer(r + 1, w);
    return product;
}

QTRational macmahon_carlitz(int d) {
    if (d < 1 || d > 8) throw std::invalid_argument("macmahon_carlitz supports 1 <= d <= 8");
    std::vector<std::int64_t> den;
    for (std::int64_t j = 0; j <= d; ++j) den.push_back(j);
    return QTRational(refined_eulerian(d), std::move(den));
}

bool square_series_simplifies(std::int64_t a, std::int64_t b) {
    const QTRational series = square_series(a, b);
    const std::set<std::int64_t> distinct(series.denominator.begin(), series.denominator.end());
    for (std::int64_t e : distinct)
        if (divide_by_factor(series.numerator, e)) return true;
    return false;
}

}  // namespace ehrq
