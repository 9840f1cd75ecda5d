#include "ehrq/graded_quotient.hpp"

#include "ehrq/permstats.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace ehrq {

namespace {

void check_quotient_dim(int d) {
    if (d < 1 || d > 4)
        throw std::invalid_argument("quotient computations support 1 <= d <= 4");
}

// Lattice points of the r-fold d-cube with coordinate sum k, in
// lexicographic order.
std::vector<LatticePoint> cube_slice_points(int d, std::int64_t r, std::int64_t k) {
    std::vector<LatticePoint> points;
    LatticePoint v(static_cast<std::size_t>(d), 0);
    auto rec = [&](auto&& self, std::size_t i, std::int64_t remaining) -> void {
        const auto left = static_cast<std::int64_t>(v.size() - i);
        if (remaining < 0 || remaining > left * r) return;
        if (i == v.size()) {
            points.push_back(v);
            return;
        }
        for (std::int64_t x = 0; x <= r; ++x) {
            v[i] = x;
            self(self, i + 1, remaining - x);
        }
    };
    rec(rec, 0, k);
    return points;
}

std::size_t row_index(const std::vector<LatticePoint>& rows, const LatticePoint& w) {
    const auto it = std::lower_bound(rows.begin(), rows.end(), w);
    return static_cast<std::size_t>(it - rows.begin());
}

}  // namespace

void BigradedTable::set(std::int64_t r, std::int64_t k, std::int64_t value) {
    if (value < 0) throw std::invalid_argument("BigradedTable entries are nonnegative");
    if (value == 0)
        entries_.erase(Key{r, k});
    else
        entries_[Key{r, k}] = value;
}

std::int64_t BigradedTable::at(std::int64_t r, std::int64_t k) const {
    const auto it = entries_.find(Key{r, k});
    return it == entries_.end() ? 0 : it->second;
}

Int BigradedTable::total() const {
    Int sum = 0;
    for (const auto& [key, value] : entries_) sum += value;
    return sum;
}

BigradedTable BigradedTable::from_coefficients(const QTPoly& p) {
    BigradedTable table;
    for (const auto& [key, c] : p.terms()) {
        if (c < 0) throw std::invalid_argument("coefficient table requires nonnegative values");
        table.set(key.first, key.second, static_cast<std::int64_t>(c));
    }
    return table;
}

std::vector<LatticePoint> y_element_support(int d, int j) {
    if (d < 1) throw std::invalid_argument("dimension must be at least 1");
    if (j < 0 || j > d) throw std::invalid_argument("y_j requires 0 <= j <= d");
    return cube_slice_points(d, 1, j);
}

IntegerMatrix ideal_piece_matrix(int d, std::int64_t r, std::int64_t k) {
    if (d < 1) throw std::invalid_argument("dimension must be at least 1");
    if (r < 1) throw std::invalid_argument("ideal pieces start at degree r = 1");

    const std::vector<LatticePoint> rows = cube_slice_points(d, r, k);

    // Column index pairs (j, u), lexicographic in (j, u).
    std::vector<std::pair<int, LatticePoint>> columns;
    for (int j = 0; j <= d; ++j)
        for (LatticePoint& u : cube_slice_points(d, r - 1, k - j))
            columns.emplace_back(j, std::move(u));

    IntegerMatrix m(rows.size(), columns.size());
    for (std::size_t col = 0; col < columns.size(); ++col) {
        const auto& [j, u] = columns[col];
        // y_j * x_u = sum over zero-one v of weight j of x_{u+v}; every
        // u+v lands in the r-fold cube with coordinate sum k.
        for (const LatticePoint& v : y_element_support(d, j)) {
            LatticePoint w(u);
            for (std::size_t i = 0; i < w.size(); ++i) w[i] += v[i];
            m.at(row_index(rows, w), col) = 1;
        }
    }
    return m;
}

BigradedTable quotient_hilbert(int d, std::int64_t r_max) {
    check_quotient_dim(d);
    if (r_max < 0) throw std::invalid_argument("r_max must be nonnegative");

    struct Block {
        std::int64_t r, k;
        std::int64_t dim = 0;
    };
    std::vector<Block> blocks;
    for (std::int64_t r = 1; r <= r_max; ++r)
        for (std::int64_t k = 0; k <= r * d; ++k) blocks.push_back({r, k});

    // Blocks are independent; workers pull from a shared counter and the
    // table is assembled afterwards in (r, k) order.
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (;;) {
            const std::size_t index = next.fetch_add(1);
            if (index >= blocks.size()) return;
            Block& block = blocks[index];
            const auto basis = cube_slice_points(d, block.r, block.k);
            const auto rank = exact_rank(ideal_piece_matrix(d, block.r, block.k));
            block.dim = static_cast<std::int64_t>(basis.size()) - static_cast<std::int64_t>(rank);
        }
    };
    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i + 1 < workers; ++i) pool.emplace_back(work);
    work();
    pool.clear();

    BigradedTable table;
    table.set(0, 0, 1);
    for (const Block& block : blocks) table.set(block.r, block.k, block.dim);
    return table;
}

RegularSequenceCheck verify_regular_sequence(int d) {
    check_quotient_dim(d);
    RegularSequenceCheck check;
    check.table = quotient_hilbert(d, d + 2);

    const BigradedTable expected = BigradedTable::from_coefficients(refined_eulerian(d));
    bool vanishing = true;
    for (const auto& [key, value] : check.table.entries())
        vanishing = vanishing && key.first < d;
    check.matches =
        vanishing && check.table == expected && check.table.total() == factorial(d);
    return check;
}

}  // namespace ehrq
