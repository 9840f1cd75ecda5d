#include "ehrq/verify.hpp"

#include "ehrq/closed_forms.hpp"
#include "ehrq/lattice.hpp"
#include "ehrq/permstats.hpp"
#include "ehrq/qtrational.hpp"

#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ehrq {

namespace {

std::string weight_str(const WeightVector& a) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < a.size(); ++i) out << (i ? "," : "") << a[i];
    out << ")";
    return out.str();
}

// Deterministic tuple sample: the distinguished tuples plus a few seeded
// random ones from {-3..3}^d.
std::vector<WeightVector> sample_weights(int d, int random_count) {
    const auto n = static_cast<std::size_t>(d);
    std::vector<WeightVector> tuples;
    tuples.emplace_back(n, 0);
    tuples.emplace_back(n, 1);
    WeightVector iota(n);
    std::iota(iota.begin(), iota.end(), 1);
    tuples.push_back(iota);
    WeightVector last_unit(n, 0);
    last_unit.back() = 1;
    tuples.push_back(last_unit);

    std::mt19937 gen(7200u + static_cast<unsigned>(d));
    std::uniform_int_distribution<std::int64_t> dist(-3, 3);
    for (int i = 0; i < random_count; ++i) {
        WeightVector a(n);
        for (auto& w : a) w = dist(gen);
        tuples.push_back(std::move(a));
    }
    return tuples;
}

QTSeries product_formula_series(const WeightVector& a, std::size_t order) {
    QTSeries s(order);
    for (std::size_t r = 0; r <= order; ++r)
        s.set(r, cube_slice_product(static_cast<int>(a.size()), static_cast<std::int64_t>(r), a));
    return s;
}

QTRational square_one_one_display() {
    QTPoly num{Int(1)};
    num.add_term(1, 1, 1);  // 1 + qt
    return QTRational(std::move(num), {0, 1, 2});
}

QTRational cube_symmetric_display() {
    QTPoly num{Int(1)};
    num.add_term(1, 1, 2);
    num.add_term(1, 2, 2);
    num.add_term(2, 3, 1);  // 1 + 2q(1+q)t + q^3 t^2
    return QTRational(std::move(num), {0, 1, 2, 3});
}

QTRational cube_corollary_display(std::int64_t a) {
    QTPoly num{Int(1)};
    num.add_term(1, a + 1, 1);
    num.add_term(1, 1, 1);
    num.add_term(2, a + 3, -2);
    num.add_term(2, a + 2, -2);
    num.add_term(2, a + 1, -2);
    num.add_term(3, 2 * a + 3, 1);
    num.add_term(3, a + 3, 1);
    num.add_term(4, 2 * a + 4, 1);
    return QTRational(std::move(num), {0, 1, 2, a, a + 1, a + 2});
}

QTRational gorenstein_lhs() {
    QTPoly num{Int(1)};
    num.add_term(1, 0, 4);
    num.add_term(2, 0, 1);
    return QTRational(std::move(num), {0, 0, 0, 0});
}

QTRational gorenstein_rhs() {
    QTPoly num{Int(1)};
    num.add_term(2, 0, -9);
    num.add_term(3, 0, 16);
    num.add_term(4, 0, -9);
    num.add_term(6, 0, 1);
    return QTRational(std::move(num), std::vector<std::int64_t>(8, 0));
}

void suite_simplex(std::vector<CheckResult>& results, std::size_t order) {
    for (int d = 1; d <= 4; ++d) {
        const auto polytope = LatticePolytope::family(Family::simplex, d);
        for (const WeightVector& a : sample_weights(d, 5)) {
            const bool pass = series_expand(simplex_series(d, a), order) ==
                              polytope.refined_series_bruteforce(a, order);
            results.push_back({"simplex d=" + std::to_string(d) + " a=" + weight_str(a), pass});
        }
        // Weights (1, 2, ..., d) slice the simplex into Gaussian binomials.
        WeightVector iota(static_cast<std::size_t>(d));
        std::iota(iota.begin(), iota.end(), 1);
        const QTSeries expanded = series_expand(simplex_series(d, iota), order);
        bool gauss = true;
        for (std::size_t r = 0; r <= std::min<std::size_t>(order, 8); ++r)
            gauss = gauss && expanded.at(r) == q_binomial(static_cast<std::int64_t>(r) + d, d);
        results.push_back({"simplex gaussian-binomial slices d=" + std::to_string(d), gauss});
    }
}

void suite_cross(std::vector<CheckResult>& results, std::size_t order) {
    for (int d = 1; d <= 4; ++d) {
        const auto polytope = LatticePolytope::family(Family::cross, d);
        for (const WeightVector& a : sample_weights(d, 5)) {
            const bool pass = series_expand(cross_series(d, a), order) ==
                              polytope.refined_series_bruteforce(a, order);
            results.push_back({"cross d=" + std::to_string(d) + " a=" + weight_str(a), pass});
        }
        bool counts = true;
        for (std::int64_t r = 0; r <= 8; ++r)
            counts = counts && cross_ehrhart_count(d, r) == polytope.count_points(r);
        results.push_back({"cross binomial-sum count d=" + std::to_string(d), counts});
    }
}

void suite_square(std::vector<CheckResult>& results, std::size_t order) {
    const auto polytope = LatticePolytope::family(Family::cube, 2);
    bool oracle = true, corollary = true;
    for (std::int64_t a = -3; a <= 3; ++a) {
        for (std::int64_t b = -3; b <= 3; ++b) {
            const QTSeries expanded = series_expand(square_series(a, b), order);
            oracle = oracle && expanded == polytope.refined_series_bruteforce({a, b}, order);
            corollary = corollary && expanded == product_formula_series({a, b}, order);
        }
    }
    results.push_back({"square closed form vs enumeration, (a,b) in {-3..3}^2", oracle});
    results.push_back({"square q-integer product identity, (a,b) in {-3..3}^2", corollary});
    results.push_back(
        {"square (1,1) simplified form", rational_equal(square_series(1, 1), square_one_one_display())});
    results.push_back({"square (1,1) admits the cancellation", square_series_simplifies(1, 1)});
    results.push_back({"square (1,2) does not simplify", !square_series_simplifies(1, 2)});
}

void suite_cube(std::vector<CheckResult>& results, std::size_t order) {
    const auto polytope = LatticePolytope::family(Family::cube, 3);
    bool oracle = true;
    for (std::int64_t a = -2; a <= 2; ++a)
        for (std::int64_t b = -2; b <= 2; ++b)
            for (std::int64_t c = -2; c <= 2; ++c)
                oracle = oracle && series_expand(cube_series(a, b, c), order) ==
                                       polytope.refined_series_bruteforce({a, b, c}, order);
    results.push_back({"cube closed form vs enumeration, (a,b,c) in {-2..2}^3", oracle});
    results.push_back(
        {"cube (1,1,1) simplified form", rational_equal(cube_series(1, 1, 1), cube_symmetric_display())});
    results.push_back(
        {"cube (0,0,0) classical form", rational_equal(cube_series(0, 0, 0), gorenstein_lhs())});
    bool corollary = true;
    for (std::int64_t a = -3; a <= 3; ++a) {
        corollary = corollary && rational_equal(cube_series(a, 1, 1), cube_corollary_display(a));
        corollary = corollary && series_expand(cube_corollary_display(a), order) ==
                                     product_formula_series({a, 1, 1}, order);
    }
    results.push_back({"cube (a,1,1) corollary, a in {-3..3}", corollary});
}

void suite_macmahon(std::vector<CheckResult>& results, std::size_t order) {
    for (int d = 1; d <= 6; ++d) {
        const WeightVector ones(static_cast<std::size_t>(d), 1);
        const bool pass = series_expand(macmahon_carlitz(d), order) ==
                          product_formula_series(ones, order);
        results.push_back({"macmahon-carlitz d=" + std::to_string(d), pass});
    }
    results.push_back({"macmahon-carlitz d=3 equals cube (1,1,1) form",
                       rational_equal(macmahon_carlitz(3), cube_series(1, 1, 1))});
}

void suite_ring_c3(std::vector<CheckResult>& results, std::size_t) {
    results.push_back(
        {"cube ring series: two presentations agree", rational_equal(gorenstein_lhs(), gorenstein_rhs())});
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names{"simplex", "cross",    "square",
                                                "cube",    "macmahon", "ringC3"};
    return names;
}

std::vector<CheckResult> verify_suite(const std::string& suite, std::size_t order) {
    std::vector<CheckResult> results;
    bool known = false;
    auto want = [&](const std::string& name) {
        if (suite != "all" && suite != name) return false;
        known = true;
        return true;
    };
    if (want("simplex")) suite_simplex(results, order);
    if (want("cross")) suite_cross(results, order);
    if (want("square")) suite_square(results, order);
    if (want("cube")) suite_cube(results, order);
    if (want("macmahon")) suite_macmahon(results, order);
    if (want("ringC3")) suite_ring_c3(results, order);
    if (!known) throw std::invalid_argument("unknown verify suite \"" + suite + "\"");
    return results;
}

}  // namespace ehrq
