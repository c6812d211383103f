#include "permucover/permutope.hpp"

#include <algorithm>

namespace permucover {

Permutohedron::Permutohedron(std::vector<Rat> gens, std::vector<Point> verts, Hyperplane ha)
    : gens_(std::move(gens)), verts_(std::move(verts)), ha_(std::move(ha)) {}

Permutohedron Permutohedron::build(std::vector<Rat> generators, int max_n) {
    const int n = static_cast<int>(generators.size());
    if (n < 2) throw InputError("A must have at least 2 elements");
    std::sort(generators.begin(), generators.end());
    for (int i = 0; i + 1 < n; i++)
        if (generators[static_cast<std::size_t>(i)] == generators[static_cast<std::size_t>(i) + 1])
            throw InputError("A must be distinct");
    if (n > max_n)
        throw LimitError("n = " + std::to_string(n) + " exceeds the vertex limit n <= " +
                         std::to_string(max_n) + " (n! vertices are materialized)");

    std::vector<Point> verts;
    Point p = generators;
    do {
        verts.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    Rat sum{0};
    for (const Rat& a : generators) sum += a;
    Hyperplane ha = Hyperplane::from_rational(std::vector<Rat>(generators.size(), Rat(1)), sum);
    return Permutohedron(std::move(generators), std::move(verts), std::move(ha));
}

bool Permutohedron::is_standard() const {
    for (int i = 0; i < n(); i++)
        if (gens_[static_cast<std::size_t>(i)] != i + 1) return false;
    return true;
}

CoverReport verify_cover(const Permutohedron& p, const std::vector<Hyperplane>& planes) {
    if (planes.empty()) throw InputError("empty plane list");
    for (const Hyperplane& h : planes)
        if (static_cast<int>(h.dim()) != p.n())
            throw InputError("plane dimension " + std::to_string(h.dim()) +
                             " does not match n = " + std::to_string(p.n()));

    CoverReport rep;
    rep.per_plane_counts.assign(planes.size(), 0);
    for (const Hyperplane& h : planes)
        if (h == p.hyperplane()) rep.contains_HA = true;

    for (const Point& v : p.vertices()) {
        bool hit = false;
        for (std::size_t i = 0; i < planes.size(); i++) {
            if (planes[i].contains(v)) {
                rep.per_plane_counts[i]++;
                hit = true;
            }
        }
        if (!hit) rep.uncovered_vertices.push_back(v);
    }
    rep.covered = rep.uncovered_vertices.empty() && !rep.contains_HA;
    return rep;
}

std::vector<Hyperplane> trivial_cover(const Permutohedron& p) {
    std::vector<Hyperplane> planes;
    planes.reserve(p.generators().size());
    for (const Rat& a : p.generators()) {
        std::vector<Rat> normal(p.generators().size(), Rat(0));
        normal[0] = 1;
        planes.push_back(Hyperplane::from_rational(normal, a));
    }
    return planes;
}

std::vector<Hyperplane> even_cover(int n) {
    if (n < 2) throw InputError("even_cover: n >= 2 required");
    std::vector<Hyperplane> planes;
    planes.reserve(static_cast<std::size_t>(n) - 1);
    for (int j = 2; j <= n; j++) {
        std::vector<BigInt> normal(static_cast<std::size_t>(n), BigInt(0));
        normal[0] = 1;
        normal[static_cast<std::size_t>(j) - 1] = 1;
        planes.emplace_back(std::move(normal), BigInt(n + 1));
    }
    return planes;
}

std::vector<Point> slice_q(const Permutohedron& p, int j) {
    if (!p.is_standard())
        throw InputError("slice_q requires the standard permutohedron P_[n]");
    if (j < 1 || j > p.n())
        throw InputError("coordinate index j = " + std::to_string(j) + " out of range [1," +
                         std::to_string(p.n()) + "]");
    std::vector<Point> out;
    const Rat top{p.n()};
    for (const Point& v : p.vertices())
        if (v[static_cast<std::size_t>(j) - 1] == top) out.push_back(v);
    return out;
}

} // namespace permucover
