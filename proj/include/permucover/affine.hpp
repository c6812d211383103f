#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permucover/rat.hpp"

namespace permucover {

// A point in Q^n.
using Point = std::vector<Rat>;

// Affine hyperplane {x : normal . x = offset} in canonical integer form:
// normal nonzero, gcd of all normal entries and the offset equal to 1, first
// nonzero normal entry positive. Canonical form makes equality and
// deduplication structural.
class Hyperplane {
public:
    Hyperplane(std::vector<BigInt> normal, BigInt offset);
    // Clears denominators first.
    static Hyperplane from_rational(const std::vector<Rat>& normal, const Rat& offset);

    const std::vector<BigInt>& normal() const { return normal_; }
    const BigInt& offset() const { return offset_; }
    std::size_t dim() const { return normal_.size(); }

    // normal . x - offset, exact.
    Rat evaluate(const Point& x) const;
    bool contains(const Point& x) const;

    bool operator==(const Hyperplane& o) const = default;
    // Lexicographic on (normal, offset); a total order used for
    // deterministic tie-breaking and report sorting.
    bool operator<(const Hyperplane& o) const;

    std::string to_string() const;

private:
    std::vector<BigInt> normal_;
    BigInt offset_;
};

// Dimension of the affine hull, exact (0 for a single point). Errors on an
// empty list or mixed coordinate lengths.
int affine_dim(const std::vector<Point>& points);

// Basis of the space of affine functionals vanishing on every input point,
// i.e. all hyperplanes (normal, offset) with normal . p = offset for each p,
// as canonical Hyperplanes sorted ascending. Empty when the points affinely
// span R^n. Computed by fraction-free elimination on the system (p_i, 1).
std::vector<Hyperplane> affine_functionals(const std::vector<Point>& points);

// One canonical hyperplane containing all points: the least element of
// affine_functionals under the canonical order. nullopt when the points span
// all of R^n.
std::optional<Hyperplane> hyperplane_through(const std::vector<Point>& points);

std::string point_to_string(const Point& p);

} // namespace permucover
