#pragma once

#include <vector>

#include "permucover/errors.hpp"

namespace permucover {

// A permutation of {0, ..., n-1} stored as its image list.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return img_; }

    // Composition "apply *this first, then next".
    Permutation then(const Permutation& next) const;
    Permutation inverse() const;
    bool is_identity() const;
    // Cycle lengths sorted descending, e.g. a transposition on 4 points is
    // {2, 1, 1}.
    std::vector<int> cycle_type() const;

    bool operator==(const Permutation& o) const = default;
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

private:
    std::vector<int> img_;
};

// Order of the subgroup generated by the given permutations, by
// breadth-first closure under composition. All generators must act on the
// same n, with n <= max_n so the closure stays enumerable.
long long group_order(const std::vector<Permutation>& gens, int max_n = 8);

} // namespace permucover
