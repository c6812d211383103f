#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "permucover/permutope.hpp"

namespace permucover {

// A maximal set of vertices whose affine span is a proper flat of H_A
// (dimension <= n-2), together with one exact witness hyperplane containing
// the flat and different from H_A. These are the atoms every cover
// hyperplane reduces to: a hyperplane H != H_A meets the vertex set in
// V n H = V n aff(V n H), and any such trace extends to a maximal flat
// spanned by n-1 affinely independent vertices.
struct IncidenceSet {
    std::vector<std::uint32_t> vertex_indices; // sorted, into P.vertices()
    int flat_dim = 0;
    Hyperplane witness_plane;
};

// Compact result of the flat enumeration: deduplicated canonical vertex
// bitsets (fixed width, `words` 64-bit words per flat), sorted ascending.
// Full IncidenceSet records are materialized on demand.
struct FlatEnumeration {
    int num_vertices = 0;
    int words = 0;
    bool exhaustive = true;
    std::uint64_t subsets_considered = 0;
    std::vector<std::uint64_t> bits;   // size() * words
    std::vector<std::uint32_t> sizes;  // per-flat cardinality

    std::size_t size() const { return sizes.size(); }
    std::span<const std::uint64_t> flat(std::size_t i) const {
        return {bits.data() + i * static_cast<std::size_t>(words), static_cast<std::size_t>(words)};
    }
    std::vector<std::uint32_t> indices_of(std::size_t i) const;
    // flat cardinality -> number of distinct flats
    std::map<int, std::uint64_t> histogram() const;
    int max_size() const;
};

struct EnumOptions {
    bool exhaustive = true;
    std::uint64_t samples = 200000; // sampled mode only
    std::uint64_t seed = 1;
    int threads = 0;                // 0: PERMUCOVER_THREADS or hardware
    bool progress = false;
    int max_n_exhaustive = 5;       // C(n!, n-1) spans are enumerated
};

// Enumerates every maximal incidence flat: for each affinely independent
// (n-1)-subset of vertices, the full vertex set of its affine span, exactly,
// deduplicated on the canonical vertex set. Exhaustive mode is capped at
// max_n_exhaustive; beyond it only seeded sampling is offered.
FlatEnumeration enumerate_flats(const Permutohedron& p, const EnumOptions& opts = {});

// Exact span, dimension, and canonical witness plane (!= H_A) of a vertex
// subset. The subset must span a proper flat of H_A.
IncidenceSet materialize_incidence_set(const Permutohedron& p,
                                       std::span<const std::uint32_t> vertex_indices);

std::vector<IncidenceSet> materialize_all(const Permutohedron& p, const FlatEnumeration& e);

// Largest flat cardinality with one materialized witness.
std::pair<int, IncidenceSet> max_incidence(const Permutohedron& p, const FlatEnumeration& e);

struct SearchOptions {
    double timeout_secs = 600;
};

struct CoverCertificate {
    int n = 0;
    int max_incidence = 0;
    int lower_bound = 0;     // >= ceil(n! / max_incidence)
    int min_cover_size = 0;  // proven minimum when exhaustive, else best found
    std::vector<Hyperplane> achieved_cover;
    bool exhaustive = false; // enumeration exhaustive and minimality proven
    double elapsed_secs = 0; // timing sidecar, excluded from comparisons
};

// Exact minimum set cover over the enumerated flats by branch and bound:
// greedy upper bound first, then depth-first search branching on the least
// covered vertex with the ceil(uncovered / max_size) lower bound. Ties break
// on the canonical vertex-set order for reproducible certificates.
CoverCertificate min_cover(const Permutohedron& p, const FlatEnumeration& e,
                           const SearchOptions& opts = {});

// Worker-count resolution: explicit value, else PERMUCOVER_THREADS, else
// hardware concurrency.
int resolve_threads(int requested);

} // namespace permucover
