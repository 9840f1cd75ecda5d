#pragma once

#include "ehrq/bigint.hpp"
#include "ehrq/qlaurent.hpp"
#include "ehrq/qtseries.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ehrq {

using LatticePoint = std::vector<std::int64_t>;
using WeightVector = std::vector<std::int64_t>;

enum class Family { simplex, cross, cube };

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

// One row of an integer half-space system: coeffs . v <= rhs. In the
// r-fold dilation the right-hand side scales to r * rhs.
struct HalfSpace {
    std::vector<std::int64_t> coeffs;
    std::int64_t rhs = 0;
    bool operator==(const HalfSpace&) const = default;
};

/**
 * A d-dimensional lattice polytope, either one of the three built-in
 * families (unit simplex conv{0, e_1..e_d}, cross-polytope conv{±e_j},
 * unit cube [0,1]^d) or a bounded integer half-space system.
 *
 * Half-space systems are validated at construction: every coordinate must
 * have finite rational upper and lower bounds (derived exactly by
 * Fourier–Motzkin elimination over the rows), and the r=1 dilation must
 * contain at least one lattice point. Instances are immutable.
 */
class LatticePolytope {
public:
    static LatticePolytope family(Family f, int dim);
    static LatticePolytope halfspaces(int dim, std::vector<HalfSpace> rows);

    int dim() const { return dim_; }
    std::optional<Family> family_tag() const { return family_; }
    const std::vector<HalfSpace>& rows() const { return rows_; }

    // Membership of v in the r-fold dilation.
    bool dilation_contains(std::int64_t r, const LatticePoint& v) const;

    // All lattice points of the r-fold dilation, in lexicographic order.
    std::vector<LatticePoint> enumerate_points(std::int64_t r) const;

    // Lexicographic-order visit without materializing the point list.
    void for_each_point(std::int64_t r, const std::function<void(const LatticePoint&)>& fn) const;

    std::int64_t count_points(std::int64_t r) const;

    // #{v in r-dilation : v . a = k}.
    std::int64_t sliced_count(std::int64_t r, const WeightVector& a, std::int64_t k) const;

    // Laurent polynomial over q collecting lattice points by the level
    // k = v . a; its value at q = 1 is the plain point count.
    QLaurent slice_polynomial(std::int64_t r, const WeightVector& a) const;

    // Truncated two-variable series whose t^r coefficient is
    // slice_polynomial(r, a), for 0 <= r <= order.
    QTSeries refined_series_bruteforce(const WeightVector& a, std::size_t order) const;

private:
    LatticePolytope() = default;

    void check_dim(std::size_t n, const char* what) const;

    int dim_ = 0;
    std::optional<Family> family_;
    std::vector<HalfSpace> rows_;
    // Exact rational bounds lo <= v_i <= hi of the r=1 polytope
    // (denominators positive); scaled by r for dilations.
    struct Bound {
        Int num;
        Int den;
    };
    std::vector<std::pair<Bound, Bound>> box_;
};

}  // namespace ehrq
