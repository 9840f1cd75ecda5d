#include "ehrq/bigint.hpp"

#include <stdexcept>

namespace ehrq {

Int binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < k) return 0;
    // Each partial product p(i) = n(n-1)...(n-i+1)/i! is an integer, so the
    // division below is exact at every step.
    Int result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

Int factorial(std::int64_t d) {
    if (d < 0) throw std::invalid_argument("factorial: negative argument");
    Int result = 1;
    for (std::int64_t i = 2; i <= d; ++i) result *= i;
    return result;
}

}  // namespace ehrq
