#include "ehrq/qlaurent.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace ehrq {

QLaurent::QLaurent(Int constant) {
    if (constant != 0) terms_.emplace(0, std::move(constant));
}

QLaurent QLaurent::monomial(Int coeff, std::int64_t exp) {
    QLaurent p;
    if (coeff != 0) p.terms_.emplace(exp, std::move(coeff));
    return p;
}

Int QLaurent::coeff(std::int64_t exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

std::int64_t QLaurent::min_exp() const {
    if (terms_.empty()) throw std::logic_error("min_exp of zero polynomial");
    return terms_.begin()->first;
}

std::int64_t QLaurent::max_exp() const {
    if (terms_.empty()) throw std::logic_error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

void QLaurent::add_term(std::int64_t exp, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QLaurent& QLaurent::operator+=(const QLaurent& other) {
    for (const auto& [exp, c] : other.terms_) add_term(exp, c);
    return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& other) {
    for (const auto& [exp, c] : other.terms_) add_term(exp, -c);
    return *this;
}

QLaurent QLaurent::operator+(const QLaurent& other) const {
    QLaurent result = *this;
    result += other;
    return result;
}

QLaurent QLaurent::operator-(const QLaurent& other) const {
    QLaurent result = *this;
    result -= other;
    return result;
}

QLaurent QLaurent::operator*(const QLaurent& other) const {
    QLaurent result;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : other.terms_) result.add_term(e1 + e2, c1 * c2);
    return result;
}

QLaurent QLaurent::operator-() const {
    QLaurent result;
    for (const auto& [exp, c] : terms_) result.terms_.emplace(exp, -c);
    return result;
}

QLaurent QLaurent::negated_exponents() const {
    QLaurent result;
    for (const auto& [exp, c] : terms_) result.terms_.emplace(-exp, c);
    return result;
}

QLaurent QLaurent::shifted(std::int64_t delta) const {
    QLaurent result;
    for (const auto& [exp, c] : terms_) result.terms_.emplace(exp + delta, c);
    return result;
}

Int QLaurent::eval_one() const {
    Int sum = 0;
    for (const auto& [exp, c] : terms_) sum += c;
    return sum;
}

QLaurent QLaurent::pow(unsigned n) const {
    QLaurent result{Int(1)};
    QLaurent base = *this;
    while (n > 0) {
        if (n & 1u) result = result * base;
        base = base * base;
        n >>= 1u;
    }
    return result;
}

QLaurent q_integer(std::int64_t k, std::int64_t e) {
    if (k < 1) throw std::invalid_argument("q_integer: k must be positive");
    QLaurent p;
    for (std::int64_t i = 0; i < k; ++i) p.add_term(i * e, 1);
    return p;
}

QLaurent q_binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n)
        throw std::invalid_argument("q_binomial: requires 0 <= k <= n");
    // q-Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k]; row-by-row table.
    std::vector<QLaurent> row(static_cast<std::size_t>(n) + 1);
    row[0] = QLaurent{Int(1)};
    for (std::int64_t m = 1; m <= n; ++m) {
        for (std::int64_t j = std::min(m, k); j >= 1; --j) {
            QLaurent next = row[static_cast<std::size_t>(j - 1)];
            if (j < m) next += row[static_cast<std::size_t>(j)].shifted(j);
            row[static_cast<std::size_t>(j)] = std::move(next);
        }
    }
    return row[static_cast<std::size_t>(k)];
}

}  // namespace ehrq
