#pragma once

#include "ehrq/qlaurent.hpp"
#include "ehrq/qtpoly.hpp"

#include <vector>

namespace ehrq {

// Permutations of {1, ..., d}, stored as the image sequence. Positions
// are 1-indexed: sigma(i) is images()[i-1].
class Permutation {
public:
    explicit Permutation(std::vector<int> images);  // validates bijectivity
    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& images() const { return images_; }

private:
    std::vector<int> images_;
};

// Number of positions i < d with sigma(i) > sigma(i+1).
int descent_count(const Permutation& sigma);

// Sum of the descent positions.
int major_index(const Permutation& sigma);

// Enumeration bound for the Eulerian constructors (9! permutations).
inline constexpr int kMaxEulerianDim = 9;

// Eulerian polynomial A_d: coefficient of t^j counts permutations of
// {1..d} with j descents. The returned polynomial is in the variable t.
QLaurent eulerian_polynomial(int d);

// Refined Eulerian polynomial: sum over S_d of q^{maj} t^{desc}. Setting
// q = 1 recovers eulerian_polynomial(d).
QTPoly refined_eulerian(int d);

}  // namespace ehrq
