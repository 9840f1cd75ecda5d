#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace ehrq {

// Exact integer type used for every polynomial coefficient and every
// matrix entry in the library. Nothing here ever rounds.
using Int = boost::multiprecision::cpp_int;

// Binomial coefficient with the convention C(n,k) = 0 whenever k < 0 or
// n < k (in particular for negative n).
Int binomial(std::int64_t n, std::int64_t k);

// d! as an Int; d must be nonnegative.
Int factorial(std::int64_t d);

}  // namespace ehrq
