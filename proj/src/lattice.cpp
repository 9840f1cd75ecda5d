#include "ehrq/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ehrq {

namespace {

// ---------------------------------------------------------------------
// Fourier–Motzkin bounding of an integer half-space system. Rows are
// stored as (c_1, ..., c_d, b) meaning c . x <= b, with exact Int
// entries. Eliminating every variable except x_i leaves rows
// alpha * x_i <= beta from which the rational bounds of x_i follow.
// ---------------------------------------------------------------------

using FmRow = std::vector<Int>;

constexpr std::size_t kFmRowCap = 20000;

void normalize_row(FmRow& row) {
    Int g = 0;
    for (const Int& v : row) g = boost::multiprecision::gcd(g, v);
    if (g > 1)
        for (Int& v : row) v /= g;
}

// Throws when a derived row reads 0 <= negative, i.e. the real system is
// empty.
void check_feasible_row(const FmRow& row, std::size_t d) {
    for (std::size_t j = 0; j < d; ++j)
        if (row[j] != 0) return;
    if (row[d] < 0)
        throw std::invalid_argument("half-space system is infeasible over the reals");
}

std::set<FmRow> eliminate_variable(const std::set<FmRow>& rows, std::size_t j, std::size_t d) {
    std::vector<const FmRow*> pos, neg;
    std::set<FmRow> result;
    for (const FmRow& row : rows) {
        if (row[j] > 0)
            pos.push_back(&row);
        else if (row[j] < 0)
            neg.push_back(&row);
        else
            result.insert(row);
    }
    for (const FmRow* p : pos) {
        for (const FmRow* n : neg) {
            // (-n_j) * p + p_j * n has a zero j-entry; both multipliers are
            // positive so the inequality direction is preserved.
            const Int mp = -(*n)[j];
            const Int mn = (*p)[j];
            FmRow combined(d + 1);
            for (std::size_t c = 0; c <= d; ++c) combined[c] = mp * (*p)[c] + mn * (*n)[c];
            normalize_row(combined);
            check_feasible_row(combined, d);
            result.insert(std::move(combined));
            if (result.size() > kFmRowCap)
                throw std::invalid_argument(
                    "cannot conclude boundedness: half-space elimination exceeded the row budget");
        }
    }
    return result;
}

struct RationalBound {
    Int num;
    Int den;  // > 0
};

// a/b < c/d with positive denominators.
bool rational_less(const RationalBound& x, const RationalBound& y) {
    return x.num * y.den < y.num * x.den;
}

// Bounds of coordinate i, or an exception if that direction is unbounded.
std::pair<RationalBound, RationalBound> coordinate_bounds(std::set<FmRow> rows, std::size_t i,
                                                          std::size_t d) {
    // Greedy elimination order: fewest pos*neg products first.
    std::vector<std::size_t> remaining;
    for (std::size_t j = 0; j < d; ++j)
        if (j != i) remaining.push_back(j);
    while (!remaining.empty()) {
        std::size_t best = 0;
        std::size_t best_cost = SIZE_MAX;
        for (std::size_t idx = 0; idx < remaining.size(); ++idx) {
            std::size_t np = 0, nn = 0;
            for (const FmRow& row : rows) {
                if (row[remaining[idx]] > 0) ++np;
                if (row[remaining[idx]] < 0) ++nn;
            }
            if (np * nn < best_cost) {
                best_cost = np * nn;
                best = idx;
            }
        }
        const std::size_t j = remaining[best];
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
        rows = eliminate_variable(rows, j, d);
    }

    std::optional<RationalBound> upper, lower;
    for (const FmRow& row : rows) {
        const Int& alpha = row[i];
        if (alpha == 0) continue;
        if (alpha > 0) {
            RationalBound cand{row[d], alpha};
            if (!upper || rational_less(cand, *upper)) upper = cand;
        } else {
            RationalBound cand{-row[d], -alpha};  // x_i >= b/alpha
            if (!lower || rational_less(*lower, cand)) lower = cand;
        }
    }
    if (!upper || !lower)
        throw std::invalid_argument("half-space system is unbounded in coordinate " +
                                    std::to_string(i + 1));
    return {*lower, *upper};
}

std::int64_t floor_div(const Int& num, const Int& den) {
    Int q = num / den;
    if (num % den != 0 && (num < 0) != (den < 0)) --q;
    return static_cast<std::int64_t>(q);
}

std::int64_t ceil_div(const Int& num, const Int& den) {
    Int q = num / den;
    if (num % den != 0 && (num < 0) == (den < 0)) ++q;
    return static_cast<std::int64_t>(q);
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::simplex: return "simplex";
        case Family::cross: return "cross";
        case Family::cube: return "cube";
    }
    throw std::logic_error("unreachable");
}

std::optional<Family> family_from_name(const std::string& name) {
    if (name == "simplex") return Family::simplex;
    if (name == "cross") return Family::cross;
    if (name == "cube") return Family::cube;
    return std::nullopt;
}

LatticePolytope LatticePolytope::family(Family f, int dim) {
    if (dim < 1) throw std::invalid_argument("polytope dimension must be at least 1");
    LatticePolytope p;
    p.dim_ = dim;
    p.family_ = f;
    return p;
}

LatticePolytope LatticePolytope::halfspaces(int dim, std::vector<HalfSpace> rows) {
    if (dim < 1) throw std::invalid_argument("polytope dimension must be at least 1");
    for (const HalfSpace& row : rows)
        if (row.coeffs.size() != static_cast<std::size_t>(dim))
            throw std::invalid_argument("half-space coefficient count does not match dimension");

    LatticePolytope p;
    p.dim_ = dim;
    p.rows_ = std::move(rows);

    const auto d = static_cast<std::size_t>(dim);
    std::set<FmRow> fm_rows;
    for (const HalfSpace& row : p.rows_) {
        FmRow r(d + 1);
        for (std::size_t j = 0; j < d; ++j) r[j] = row.coeffs[j];
        r[d] = row.rhs;
        normalize_row(r);
        check_feasible_row(r, d);
        fm_rows.insert(std::move(r));
    }
    for (std::size_t i = 0; i < d; ++i) {
        auto [lo, hi] = coordinate_bounds(fm_rows, i, d);
        p.box_.emplace_back(Bound{lo.num, lo.den}, Bound{hi.num, hi.den});
    }
    if (p.count_points(1) == 0)
        throw std::invalid_argument("half-space system has no lattice point at dilation 1");
    return p;
}

void LatticePolytope::check_dim(std::size_t n, const char* what) const {
    if (n != static_cast<std::size_t>(dim_))
        throw std::invalid_argument(std::string(what) + " length does not match polytope dimension");
}

bool LatticePolytope::dilation_contains(std::int64_t r, const LatticePoint& v) const {
    if (r < 0) throw std::invalid_argument("dilation factor must be nonnegative");
    check_dim(v.size(), "point");
    if (family_) {
        switch (*family_) {
            case Family::simplex: {
                std::int64_t sum = 0;
                for (std::int64_t x : v) {
                    if (x < 0) return false;
                    sum += x;
                }
                return sum <= r;
            }
            case Family::cross: {
                std::int64_t sum = 0;
                for (std::int64_t x : v) sum += x < 0 ? -x : x;
                return sum <= r;
            }
            case Family::cube: {
                for (std::int64_t x : v)
                    if (x < 0 || x > r) return false;
                return true;
            }
        }
    }
    for (const HalfSpace& row : rows_) {
        std::int64_t dot = 0;
        for (std::size_t j = 0; j < v.size(); ++j) dot += row.coeffs[j] * v[j];
        if (dot > r * row.rhs) return false;
    }
    return true;
}

void LatticePolytope::for_each_point(std::int64_t r,
                                     const std::function<void(const LatticePoint&)>& fn) const {
    if (r < 0) throw std::invalid_argument("dilation factor must be nonnegative");
    const auto d = static_cast<std::size_t>(dim_);
    LatticePoint v(d, 0);

    if (family_) {
        switch (*family_) {
            case Family::simplex: {
                // Coordinates are nonnegative with remaining budget r - sum.
                auto rec = [&](auto&& self, std::size_t i, std::int64_t budget) -> void {
                    if (i == d) {
                        fn(v);
                        return;
                    }
                    for (std::int64_t x = 0; x <= budget; ++x) {
                        v[i] = x;
                        self(self, i + 1, budget - x);
                    }
                };
                rec(rec, 0, r);
                return;
            }
            case Family::cross: {
                auto rec = [&](auto&& self, std::size_t i, std::int64_t budget) -> void {
                    if (i == d) {
                        fn(v);
                        return;
                    }
                    for (std::int64_t x = -budget; x <= budget; ++x) {
                        v[i] = x;
                        self(self, i + 1, budget - (x < 0 ? -x : x));
                    }
                };
                rec(rec, 0, r);
                return;
            }
            case Family::cube: {
                auto rec = [&](auto&& self, std::size_t i) -> void {
                    if (i == d) {
                        fn(v);
                        return;
                    }
                    for (std::int64_t x = 0; x <= r; ++x) {
                        v[i] = x;
                        self(self, i + 1);
                    }
                };
                rec(rec, 0);
                return;
            }
        }
    }

    // Half-space system: walk the scaled integer bounding box and filter
    // by membership at the leaves.
    std::vector<std::int64_t> lo(d), hi(d);
    for (std::size_t i = 0; i < d; ++i) {
        lo[i] = ceil_div(Int(r) * box_[i].first.num, box_[i].first.den);
        hi[i] = floor_div(Int(r) * box_[i].second.num, box_[i].second.den);
    }
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == d) {
            if (dilation_contains(r, v)) fn(v);
            return;
        }
        for (std::int64_t x = lo[i]; x <= hi[i]; ++x) {
            v[i] = x;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
}

std::vector<LatticePoint> LatticePolytope::enumerate_points(std::int64_t r) const {
    std::vector<LatticePoint> points;
    for_each_point(r, [&](const LatticePoint& v) { points.push_back(v); });
    return points;
}

std::int64_t LatticePolytope::count_points(std::int64_t r) const {
    std::int64_t count = 0;
    for_each_point(r, [&](const LatticePoint&) { ++count; });
    return count;
}

std::int64_t LatticePolytope::sliced_count(std::int64_t r, const WeightVector& a,
                                           std::int64_t k) const {
    check_dim(a.size(), "weight vector");
    std::int64_t count = 0;
    for_each_point(r, [&](const LatticePoint& v) {
        std::int64_t dot = 0;
        for (std::size_t j = 0; j < v.size(); ++j) dot += a[j] * v[j];
        if (dot == k) ++count;
    });
    return count;
}

QLaurent LatticePolytope::slice_polynomial(std::int64_t r, const WeightVector& a) const {
    check_dim(a.size(), "weight vector");
    QLaurent poly;
    for_each_point(r, [&](const LatticePoint& v) {
        std::int64_t dot = 0;
        for (std::size_t j = 0; j < v.size(); ++j) dot += a[j] * v[j];
        poly.add_term(dot, 1);
    });
    return poly;
}

QTSeries LatticePolytope::refined_series_bruteforce(const WeightVector& a,
                                                    std::size_t order) const {
    check_dim(a.size(), "weight vector");
    QTSeries series(order);
    for (std::size_t r = 0; r <= order; ++r)
        series.set(r, slice_polynomial(static_cast<std::int64_t>(r), a));
    return series;
}

}  // namespace ehrq
