#pragma once

#include <vector>

#include "permucover/affine.hpp"

namespace permucover {

// Vertex cap: n! vertices are materialized eagerly.
inline constexpr int kDefaultMaxN = 8;

// The polytope whose vertices are all coordinate permutations of a set A of
// n distinct rationals. Vertices are stored in lexicographic permutation
// order, so indices are deterministic and reports reproducible. Immutable
// after build.
class Permutohedron {
public:
    static Permutohedron build(std::vector<Rat> generators, int max_n = kDefaultMaxN);

    // Sorted ascending.
    const std::vector<Rat>& generators() const { return gens_; }
    const std::vector<Point>& vertices() const { return verts_; }
    int n() const { return static_cast<int>(gens_.size()); }
    // H_A: sum of coordinates = sum of A. The one hyperplane containing
    // every vertex, excluded from covers by definition.
    const Hyperplane& hyperplane() const { return ha_; }
    // True when the generators are exactly {1, 2, ..., n}.
    bool is_standard() const;

private:
    Permutohedron(std::vector<Rat> gens, std::vector<Point> verts, Hyperplane ha);
    std::vector<Rat> gens_;
    std::vector<Point> verts_;
    Hyperplane ha_;
};

struct CoverReport {
    bool covered = false;
    bool contains_HA = false;
    std::vector<std::uint64_t> per_plane_counts;
    // Lexicographic order (= vertex-index order).
    std::vector<Point> uncovered_vertices;
};

// Exact incidence check of every vertex against every plane. If any plane
// canonically equals H_A, contains_HA is set and covered is forced false.
CoverReport verify_cover(const Permutohedron& p, const std::vector<Hyperplane>& planes);

// The n planes {x_1 = a : a in A}; always a cover.
std::vector<Hyperplane> trivial_cover(const Permutohedron& p);

// The n-1 planes {x_1 + x_j = n+1 : j in [n] \ 1} for P_[n]. They cover all
// vertices iff n is even; the caller checks coverage.
std::vector<Hyperplane> even_cover(int n);

// Q_j: the (n-1)! vertices of P_[n] with x_j = n. The coordinate index j is
// 1-based as in x_j. Requires a standard permutohedron.
std::vector<Point> slice_q(const Permutohedron& p, int j);

} // namespace permucover
