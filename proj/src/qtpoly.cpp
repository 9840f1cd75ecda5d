#include "ehrq/qtpoly.hpp"

#include <stdexcept>
#include <utility>

namespace ehrq {

QTPoly::QTPoly(Int constant) {
    if (constant != 0) terms_.emplace(Key{0, 0}, std::move(constant));
}

QTPoly QTPoly::monomial(Int coeff, std::int64_t t_exp, std::int64_t q_exp) {
    if (t_exp < 0) throw std::invalid_argument("QTPoly: negative t exponent");
    QTPoly p;
    if (coeff != 0) p.terms_.emplace(Key{t_exp, q_exp}, std::move(coeff));
    return p;
}

QTPoly QTPoly::from_qlaurent(const QLaurent& p, std::int64_t t_exp) {
    if (t_exp < 0) throw std::invalid_argument("QTPoly: negative t exponent");
    QTPoly result;
    for (const auto& [q_exp, c] : p.terms()) result.terms_.emplace(Key{t_exp, q_exp}, c);
    return result;
}

QTPoly QTPoly::from_t_polynomial(const QLaurent& p) {
    QTPoly result;
    for (const auto& [exp, c] : p.terms()) {
        if (exp < 0) throw std::invalid_argument("QTPoly: negative t exponent");
        result.terms_.emplace(Key{exp, 0}, c);
    }
    return result;
}

Int QTPoly::coeff(std::int64_t t_exp, std::int64_t q_exp) const {
    auto it = terms_.find(Key{t_exp, q_exp});
    return it == terms_.end() ? Int(0) : it->second;
}

QLaurent QTPoly::coeff_of_t(std::int64_t r) const {
    QLaurent result;
    for (auto it = terms_.lower_bound(Key{r, INT64_MIN}); it != terms_.end() && it->first.first == r;
         ++it)
        result.add_term(it->first.second, it->second);
    return result;
}

std::int64_t QTPoly::t_degree() const {
    if (terms_.empty()) throw std::logic_error("t_degree of zero polynomial");
    return terms_.rbegin()->first.first;
}

void QTPoly::add_term(std::int64_t t_exp, std::int64_t q_exp, const Int& c) {
    if (c == 0) return;
    if (t_exp < 0) throw std::invalid_argument("QTPoly: negative t exponent");
    auto [it, inserted] = terms_.emplace(Key{t_exp, q_exp}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QTPoly& QTPoly::operator+=(const QTPoly& other) {
    for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, c);
    return *this;
}

QTPoly& QTPoly::operator-=(const QTPoly& other) {
    for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, -c);
    return *this;
}

QTPoly QTPoly::operator+(const QTPoly& other) const {
    QTPoly result = *this;
    result += other;
    return result;
}

QTPoly QTPoly::operator-(const QTPoly& other) const {
    QTPoly result = *this;
    result -= other;
    return result;
}

QTPoly QTPoly::operator*(const QTPoly& other) const {
    QTPoly result;
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : other.terms_)
            result.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    return result;
}

QTPoly QTPoly::operator-() const {
    QTPoly result;
    for (const auto& [key, c] : terms_) result.terms_.emplace(key, -c);
    return result;
}

QTPoly QTPoly::substitute_q_one() const {
    QTPoly result;
    for (const auto& [key, c] : terms_) result.add_term(key.first, 0, c);
    return result;
}

}  // namespace ehrq
