#pragma once

#include "ehrq/lattice.hpp"
#include "ehrq/qlaurent.hpp"
#include "ehrq/qtrational.hpp"

#include <cstdint>

namespace ehrq {

// Closed forms of the weight-refined Ehrhart series. Every function here
// returns an unsimplified presentation (factored denominator, no
// cancellation); agreement with the brute-force enumeration is what the
// test suites certify.

// Unit d-simplex: 1 / ((1 - t) prod_j (1 - q^{a_j} t)).
QTRational simplex_series(int d, const WeightVector& a);

// Cross-polytope: (1+t)^d (1-t)^{d-1} / prod_j (1 - q^{a_j} t)(1 - q^{-a_j} t).
QTRational cross_series(int d, const WeightVector& a);

// Point count of the r-th dilation of the cross-polytope, by the
// binomial-sum formula (not by enumeration).
Int cross_ehrhart_count(int d, std::int64_t r);

// Unit square with weights (a, b):
// (1 - q^{a+b} t^2) / ((1 - t)(1 - q^a t)(1 - q^b t)(1 - q^{a+b} t)).
QTRational square_series(std::int64_t a, std::int64_t b);

// Unit cube with weights (a, b, c); the numerator has support in
// t^0, t^2, t^3, t^4, t^6 and the denominator collects the factor
// exponents {0, a, b, c, a+b, a+c, b+c, a+b+c}.
QTRational cube_series(std::int64_t a, std::int64_t b, std::int64_t c);

// Slice polynomial of the d-cube in product form, prod_j [r+1]_{q^{a_j}}.
QLaurent cube_slice_product(int d, std::int64_t r, const WeightVector& a);

// MacMahon–Carlitz: refined Eulerian numerator over prod_{j=0..d} (1 - q^j t).
QTRational macmahon_carlitz(int d);

// Explicit common-factor test: does some denominator factor of
// square_series(a, b) divide its numerator exactly?
bool square_series_simplifies(std::int64_t a, std::int64_t b);

}  // namespace ehrq
