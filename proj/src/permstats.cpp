#include "ehrq/permstats.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ehrq {

namespace {

void check_dim(int d) {
    if (d < 1 || d > kMaxEulerianDim)
        throw std::invalid_argument("Eulerian polynomials support 1 <= d <= 9");
}

template <typename Fn>
void for_each_permutation(int d, Fn&& fn) {
    std::vector<int> images(static_cast<std::size_t>(d));
    std::iota(images.begin(), images.end(), 1);
    do {
        fn(images);
    } while (std::next_permutation(images.begin(), images.end()));
}

// desc and maj of an image sequence, without constructing a Permutation.
std::pair<int, int> descent_stats(const std::vector<int>& images) {
    int desc = 0, maj = 0;
    for (std::size_t i = 0; i + 1 < images.size(); ++i) {
        if (images[i] > images[i + 1]) {
            ++desc;
            maj += static_cast<int>(i) + 1;
        }
    }
    return {desc, maj};
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int x : images_) {
        if (x < 1 || x > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(x - 1)])
            throw std::invalid_argument("not a permutation of {1..d}");
        seen[static_cast<std::size_t>(x - 1)] = true;
    }
    if (images_.empty()) throw std::invalid_argument("empty permutation");
}

int descent_count(const Permutation& sigma) { return descent_stats(sigma.images()).first; }

int major_index(const Permutation& sigma) { return descent_stats(sigma.images()).second; }

QLaurent eulerian_polynomial(int d) {
    check_dim(d);
    QLaurent poly;
    for_each_permutation(d, [&](const std::vector<int>& images) {
        poly.add_term(descent_stats(images).first, 1);
    });
    return poly;
}

QTPoly refined_eulerian(int d) {
    check_dim(d);
    QTPoly poly;
    for_each_permutation(d, [&](const std::vector<int>& images) {
        const auto [desc, maj] = descent_stats(images);
        poly.add_term(desc, maj, 1);
    });
    return poly;
}

}  // namespace ehrq
