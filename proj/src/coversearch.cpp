#include "permucover/coversearch.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <thread>

namespace permucover {

namespace {

constexpr int kMaxEnumN = 6; // beyond this not even sampling is offered

uint64_t binomial(uint64_t v, uint64_t m) {
    if (m > v) return 0;
    uint64_t r = 1;
    for (uint64_t i = 0; i < m; i++) r = r * (v - i) / (i + 1);
    return r;
}

// Lexicographically smallest combination of rank `rank` among m-subsets of
// {0..v-1} (combinatorial number system).
std::vector<int> unrank_combination(uint64_t rank, int v, int m) {
    std::vector<int> c(static_cast<std::size_t>(m));
    int x = 0;
    for (int i = 0; i < m; i++) {
        while (true) {
            uint64_t block = binomial(static_cast<uint64_t>(v - 1 - x), static_cast<uint64_t>(m - 1 - i));
            if (rank < block) break;
            rank -= block;
            x++;
        }
        c[static_cast<std::size_t>(i)] = x++;
    }
    return c;
}

bool next_combination(std::vector<int>& c, int v) {
    int m = static_cast<int>(c.size());
    int i = m - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == v - m + i) i--;
    if (i < 0) return false;
    c[static_cast<std::size_t>(i)]++;
    for (int j = i + 1; j < m; j++) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    return true;
}

// Determinant of a k x k matrix by fraction-free elimination; exact over
// any integral domain scalar.
template <class Z>
Z bareiss_det(std::array<std::array<Z, 8>, 8>& m, int k) {
    Z prev{1};
    int sign = 1;
    for (int c = 0; c + 1 < k; c++) {
        int sel = c;
        while (sel < k && m[static_cast<std::size_t>(sel)][static_cast<std::size_t>(c)] == 0) sel++;
        if (sel == k) return Z{0};
        if (sel != c) {
            std::swap(m[static_cast<std::size_t>(sel)], m[static_cast<std::size_t>(c)]);
            sign = -sign;
        }
        for (int r = c + 1; r < k; r++) {
            for (int cc = c + 1; cc < k; cc++)
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] =
                    (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] *
                         m[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)] -
                     m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] *
                         m[static_cast<std::size_t>(c)][static_cast<std::size_t>(cc)]) /
                    prev;
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
        }
        prev = m[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
    }
    Z det = m[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(k - 1)];
    return sign < 0 ? Z{-det} : det;
}

// Per-subset exact kernel. The flat of an affinely independent (n-1)-subset
// is cut out of H_A by one extra functional a with a . row = 0 for every
// difference row and a . (1,...,1) = 0: the one-dimensional nullspace of the
// (n-1) x n system E, computed as the generalized cross product
// a_i = (-1)^i det(E minus column i). a == 0 exactly when the subset is
// affinely dependent. Membership of vertex v then is a . v == a . v0.
template <class Z, int W>
struct EnumKernel {
    int n = 0;
    std::vector<std::array<Z, 8>> verts;

    bool run(const std::vector<int>& idx, std::array<uint64_t, W>& bits_out, int& count_out) const {
        const int m = n - 1;
        std::array<std::array<Z, 8>, 8> e{};
        for (int r = 0; r + 1 < m; r++)
            for (int c = 0; c < n; c++)
                e[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                    verts[static_cast<std::size_t>(idx[static_cast<std::size_t>(r + 1)])]
                         [static_cast<std::size_t>(c)] -
                    verts[static_cast<std::size_t>(idx[0])][static_cast<std::size_t>(c)];
        for (int c = 0; c < n; c++)
            e[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(c)] = 1;

        std::array<Z, 8> a{};
        bool nonzero = false;
        std::array<std::array<Z, 8>, 8> sub{};
        for (int drop = 0; drop < n; drop++) {
            for (int r = 0; r < m; r++) {
                int cc = 0;
                for (int c = 0; c < n; c++) {
                    if (c == drop) continue;
                    sub[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc++)] =
                        e[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
                }
            }
            Z d = bareiss_det(sub, m);
            if (drop % 2 == 1) d = -d;
            if (d != 0) nonzero = true;
            a[static_cast<std::size_t>(drop)] = d;
        }
        if (!nonzero) return false; // affinely dependent subset

        Z b{0};
        for (int c = 0; c < n; c++)
            b += a[static_cast<std::size_t>(c)] *
                 verts[static_cast<std::size_t>(idx[0])][static_cast<std::size_t>(c)];

        bits_out.fill(0);
        int count = 0;
        for (std::size_t v = 0; v < verts.size(); v++) {
            Z acc{0};
            for (int c = 0; c < n; c++)
                acc += a[static_cast<std::size_t>(c)] * verts[v][static_cast<std::size_t>(c)];
            if (acc == b) {
                bits_out[v / 64] |= (uint64_t{1} << (v % 64));
                count++;
            }
        }
        count_out = count;
        return true;
    }
};

// Scaled integer vertex coordinates. Scaling A by the denominator lcm maps
// P_A to an integer permutohedron with the identical incidence structure.
template <class Z>
std::vector<std::array<Z, 8>> scaled_vertices(const Permutohedron& p, const BigInt& lambda) {
    std::vector<std::array<Z, 8>> out(p.vertices().size());
    for (std::size_t v = 0; v < out.size(); v++) {
        out[v].fill(Z{0});
        for (int c = 0; c < p.n(); c++) {
            const Rat& x = p.vertices()[v][static_cast<std::size_t>(c)];
            BigInt scaled = rat_num(x) * (lambda / rat_den(x));
            if constexpr (std::is_same_v<Z, int64_t>)
                out[v][static_cast<std::size_t>(c)] = scaled.convert_to<int64_t>();
            else
                out[v][static_cast<std::size_t>(c)] = scaled;
        }
    }
    return out;
}

// Conservative bound on every intermediate the kernel can produce; decides
// whether the int64 instantiation is provably overflow-free.
bool int64_kernel_safe(const Permutohedron& p, const BigInt& lambda) {
    BigInt cmax{1};
    for (const Rat& a : p.generators()) {
        BigInt scaled = rat_num(a) * (lambda / rat_den(a));
        if (scaled < 0) scaled = -scaled;
        if (scaled > cmax) cmax = scaled;
    }
    const int n = p.n();
    // Hadamard: minors of E bounded by (2*cmax*sqrt(n))^{n-2} * sqrt(n);
    // take 2*cmax*n as a crude per-row overestimate.
    BigInt minor{1};
    for (int i = 0; i < n - 2; i++) minor *= 2 * cmax * n;
    minor *= n;
    BigInt worst = 2 * minor * minor;               // Bareiss cross product
    BigInt dot = 2 * minor * cmax * n;              // membership evaluation
    BigInt limit = BigInt(1) << 62;
    return worst < limit && dot < limit;
}

struct RawFlats {
    std::vector<uint64_t> bits;
    std::vector<uint32_t> sizes;
};

template <class Z, int W>
RawFlats collect_flats(const Permutohedron& p, const BigInt& lambda,
                       const std::vector<std::vector<int>>& chunks_start,
                       const std::vector<uint64_t>& chunk_counts, int threads, bool progress) {
    EnumKernel<Z, W> kernel;
    kernel.n = p.n();
    kernel.verts = scaled_vertices<Z>(p, lambda);
    const int v_count = static_cast<int>(kernel.verts.size());

    std::vector<std::vector<std::array<uint64_t, W>>> local(chunks_start.size());
    std::atomic<std::size_t> next_chunk{0};
    std::atomic<uint64_t> done_subsets{0};

    auto worker = [&]() {
        while (true) {
            std::size_t ci = next_chunk.fetch_add(1);
            if (ci >= chunks_start.size()) break;
            std::vector<int> idx = chunks_start[ci];
            auto& out = local[ci];
            std::array<uint64_t, W> bits;
            int cnt = 0;
            for (uint64_t k = 0; k < chunk_counts[ci]; k++) {
                if (kernel.run(idx, bits, cnt)) out.push_back(bits);
                if (!next_combination(idx, v_count)) break;
            }
            uint64_t total = done_subsets.fetch_add(chunk_counts[ci]) + chunk_counts[ci];
            if (progress)
                std::fprintf(stderr, "  enumerated %llu subsets...\n",
                             static_cast<unsigned long long>(total));
        }
    };

    std::vector<std::thread> pool;
    for (int t = 1; t < threads; t++) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    std::vector<std::array<uint64_t, W>> all;
    std::size_t total = 0;
    for (auto& l : local) total += l.size();
    all.reserve(total);
    for (auto& l : local) {
        all.insert(all.end(), l.begin(), l.end());
        l.clear();
        l.shrink_to_fit();
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());

    RawFlats out;
    out.bits.reserve(all.size() * W);
    out.sizes.reserve(all.size());
    for (const auto& b : all) {
        uint32_t c = 0;
        for (int w = 0; w < W; w++) {
            out.bits.push_back(b[static_cast<std::size_t>(w)]);
            c += static_cast<uint32_t>(std::popcount(b[static_cast<std::size_t>(w)]));
        }
        out.sizes.push_back(c);
    }
    return out;
}

template <int W>
RawFlats collect_dispatch(const Permutohedron& p, const BigInt& lambda,
                          const std::vector<std::vector<int>>& starts,
                          const std::vector<uint64_t>& counts, int threads, bool progress) {
    if (int64_kernel_safe(p, lambda))
        return collect_flats<int64_t, W>(p, lambda, starts, counts, threads, progress);
    return collect_flats<BigInt, W>(p, lambda, starts, counts, threads, progress);
}

} // namespace

std::vector<std::uint32_t> FlatEnumeration::indices_of(std::size_t i) const {
    std::vector<std::uint32_t> out;
    out.reserve(sizes[i]);
    auto f = flat(i);
    for (int v = 0; v < num_vertices; v++)
        if (f[static_cast<std::size_t>(v / 64)] & (uint64_t{1} << (v % 64)))
            out.push_back(static_cast<std::uint32_t>(v));
    return out;
}

std::map<int, std::uint64_t> FlatEnumeration::histogram() const {
    std::map<int, std::uint64_t> h;
    for (uint32_t s : sizes) h[static_cast<int>(s)]++;
    return h;
}

int FlatEnumeration::max_size() const {
    uint32_t m = 0;
    for (uint32_t s : sizes) m = std::max(m, s);
    return static_cast<int>(m);
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("PERMUCOVER_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

FlatEnumeration enumerate_flats(const Permutohedron& p, const EnumOptions& opts) {
    const int n = p.n();
    if (n > kMaxEnumN)
        throw LimitError("enumerate_flats: n = " + std::to_string(n) +
                         " beyond supported range (sampled mode tops out at n = " +
                         std::to_string(kMaxEnumN) + ")");
    const int v_count = static_cast<int>(p.vertices().size());
    const int m = n - 1;
    const uint64_t total = binomial(static_cast<uint64_t>(v_count), static_cast<uint64_t>(m));

    if (opts.exhaustive && n > opts.max_n_exhaustive)
        throw LimitError("enumerate_flats: exhaustive mode needs n <= " +
                         std::to_string(opts.max_n_exhaustive) + "; n = " + std::to_string(n) +
                         " would enumerate " + std::to_string(total) +
                         " spans — use sampled mode");

    const int threads = resolve_threads(opts.threads);
    const BigInt lambda = common_denominator(p.generators());

    std::vector<std::vector<int>> starts;
    std::vector<uint64_t> counts;
    if (opts.exhaustive) {
        const uint64_t chunk_count = std::min<uint64_t>(std::max(1, threads * 8), total);
        for (uint64_t c = 0; c < chunk_count; c++) {
            uint64_t lo = total * c / chunk_count;
            uint64_t hi = total * (c + 1) / chunk_count;
            if (hi == lo) continue;
            starts.push_back(unrank_combination(lo, v_count, m));
            counts.push_back(hi - lo);
        }
    } else {
        // Seeded sampling: random (n-1)-subsets; duplicates are harmless
        // because flats are deduplicated anyway.
        std::mt19937_64 rng(opts.seed);
        std::vector<std::vector<int>> sample_chunk;
        const uint64_t per_chunk = std::max<uint64_t>(1, opts.samples / std::max(1, threads * 4));
        std::vector<int> pick(static_cast<std::size_t>(m));
        uint64_t emitted = 0;
        while (emitted < opts.samples) {
            uint64_t batch = std::min(per_chunk, opts.samples - emitted);
            for (uint64_t k = 0; k < batch; k++) {
                // Floyd's subset sampling.
                std::vector<int> chosen;
                for (int j = v_count - m; j < v_count; j++) {
                    std::uniform_int_distribution<int> dist(0, j);
                    int t = dist(rng);
                    if (std::find(chosen.begin(), chosen.end(), t) != chosen.end())
                        chosen.push_back(j);
                    else
                        chosen.push_back(t);
                }
                std::sort(chosen.begin(), chosen.end());
                starts.push_back(chosen);
                counts.push_back(1);
            }
            emitted += batch;
        }
    }

    const int words = (v_count + 63) / 64;
    RawFlats raw;
    if (words <= 1)
        raw = collect_dispatch<1>(p, lambda, starts, counts, threads, opts.progress);
    else if (words <= 2)
        raw = collect_dispatch<2>(p, lambda, starts, counts, threads, opts.progress);
    else if (words <= 12)
        raw = collect_dispatch<12>(p, lambda, starts, counts, threads, opts.progress);
    else
        throw LimitError("enumerate_flats: vertex set too large for the bitset layout");

    FlatEnumeration e;
    e.num_vertices = v_count;
    e.exhaustive = opts.exhaustive;
    e.subsets_considered = opts.exhaustive ? total : opts.samples;

    // The fixed-W collectors may carry more words than needed; compact.
    const int raw_words = raw.sizes.empty() ? words
                                            : static_cast<int>(raw.bits.size() / raw.sizes.size());
    e.words = words;
    e.sizes = std::move(raw.sizes);
    e.bits.reserve(e.sizes.size() * static_cast<std::size_t>(words));
    for (std::size_t i = 0; i < e.sizes.size(); i++)
        for (int w = 0; w < words; w++)
            e.bits.push_back(raw.bits[i * static_cast<std::size_t>(raw_words) +
                                      static_cast<std::size_t>(w)]);
    return e;
}

IncidenceSet materialize_incidence_set(const Permutohedron& p,
                                       std::span<const std::uint32_t> vertex_indices) {
    if (vertex_indices.empty()) throw InputError("materialize_incidence_set: empty vertex set");
    std::vector<Point> pts;
    pts.reserve(vertex_indices.size());
    for (uint32_t v : vertex_indices) {
        if (v >= p.vertices().size()) throw InputError("vertex index out of range");
        pts.push_back(p.vertices()[v]);
    }
    std::vector<Hyperplane> fns = affine_functionals(pts);
    // Functionals always include H_A; a proper flat has at least one more.
    Hyperplane const* witness = nullptr;
    for (const Hyperplane& h : fns)
        if (!(h == p.hyperplane())) { witness = &h; break; }
    if (witness == nullptr)
        throw InputError("vertex set spans all of H_A; not a proper incidence flat");

    IncidenceSet s{std::vector<std::uint32_t>(vertex_indices.begin(), vertex_indices.end()),
                   affine_dim(pts), *witness};
    std::sort(s.vertex_indices.begin(), s.vertex_indices.end());
    return s;
}

std::vector<IncidenceSet> materialize_all(const Permutohedron& p, const FlatEnumeration& e) {
    std::vector<IncidenceSet> out;
    out.reserve(e.size());
    for (std::size_t i = 0; i < e.size(); i++)
        out.push_back(materialize_incidence_set(p, e.indices_of(i)));
    return out;
}

std::pair<int, IncidenceSet> max_incidence(const Permutohedron& p, const FlatEnumeration& e) {
    if (e.size() == 0) throw InputError("max_incidence: empty enumeration");
    std::size_t best = 0;
    for (std::size_t i = 1; i < e.size(); i++)
        if (e.sizes[i] > e.sizes[best]) best = i;
    return {static_cast<int>(e.sizes[best]), materialize_incidence_set(p, e.indices_of(best))};
}

namespace {

struct TimeoutSignal {};

struct CoverSearcher {
    const FlatEnumeration& e;
    int words;
    std::vector<uint64_t> full; // universe mask
    int max_size;
    int best;
    std::vector<std::size_t> best_sets;
    std::vector<std::size_t> stack;
    std::chrono::steady_clock::time_point deadline;
    bool completed = true;

    uint64_t covered_count(std::span<const uint64_t> set, std::span<const uint64_t> uncov) const {
        uint64_t c = 0;
        for (int w = 0; w < words; w++)
            c += static_cast<uint64_t>(std::popcount(set[static_cast<std::size_t>(w)] &
                                                     uncov[static_cast<std::size_t>(w)]));
        return c;
    }

    void dfs(std::vector<uint64_t>& uncov, uint64_t uncov_count, int depth) {
        if (std::chrono::steady_clock::now() > deadline) throw TimeoutSignal{};
        if (uncov_count == 0) {
            best = depth;
            best_sets = stack;
            return;
        }
        const int lb = depth + static_cast<int>((uncov_count + static_cast<uint64_t>(max_size) - 1) /
                                                static_cast<uint64_t>(max_size));
        if (lb >= best) return;

        // Branch on the least-covered uncovered vertex; one pass over the
        // sets accumulates per-vertex cover counts.
        std::vector<uint32_t> counts(static_cast<std::size_t>(e.num_vertices), 0);
        for (std::size_t i = 0; i < e.size(); i++) {
            auto set = e.flat(i);
            for (int w = 0; w < words; w++) {
                uint64_t bitsw = set[static_cast<std::size_t>(w)] & uncov[static_cast<std::size_t>(w)];
                while (bitsw) {
                    int b = std::countr_zero(bitsw);
                    counts[static_cast<std::size_t>(w * 64 + b)]++;
                    bitsw &= bitsw - 1;
                }
            }
        }
        int pick = -1;
        uint32_t pick_cnt = UINT32_MAX;
        for (int v = 0; v < e.num_vertices; v++) {
            if (!(uncov[static_cast<std::size_t>(v / 64)] & (uint64_t{1} << (v % 64)))) continue;
            if (counts[static_cast<std::size_t>(v)] < pick_cnt) {
                pick_cnt = counts[static_cast<std::size_t>(v)];
                pick = v;
            }
        }
        if (pick < 0) return;
        std::vector<std::size_t> covering;
        for (std::size_t i = 0; i < e.size(); i++)
            if (e.flat(i)[static_cast<std::size_t>(pick / 64)] & (uint64_t{1} << (pick % 64)))
                covering.push_back(i);
        std::stable_sort(covering.begin(), covering.end(), [&](std::size_t a, std::size_t b) {
            return covered_count(e.flat(a), uncov) > covered_count(e.flat(b), uncov);
        });

        for (std::size_t i : covering) {
            auto set = e.flat(i);
            std::vector<uint64_t> next(uncov);
            uint64_t removed = 0;
            for (int w = 0; w < words; w++) {
                removed += static_cast<uint64_t>(std::popcount(next[static_cast<std::size_t>(w)] &
                                                               set[static_cast<std::size_t>(w)]));
                next[static_cast<std::size_t>(w)] &= ~set[static_cast<std::size_t>(w)];
            }
            stack.push_back(i);
            dfs(next, uncov_count - removed, depth + 1);
            stack.pop_back();
        }
    }
};

} // namespace

CoverCertificate min_cover(const Permutohedron& p, const FlatEnumeration& e,
                           const SearchOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    if (e.size() == 0) throw InputError("min_cover: empty enumeration");

    CoverCertificate cert;
    cert.n = p.n();
    cert.max_incidence = e.max_size();
    const uint64_t universe = static_cast<uint64_t>(e.num_vertices);
    cert.lower_bound = static_cast<int>((universe + static_cast<uint64_t>(cert.max_incidence) - 1) /
                                        static_cast<uint64_t>(cert.max_incidence));

    const int words = e.words;
    std::vector<uint64_t> full(static_cast<std::size_t>(words), 0);
    for (int v = 0; v < e.num_vertices; v++)
        full[static_cast<std::size_t>(v / 64)] |= (uint64_t{1} << (v % 64));

    // Greedy upper bound; flats are in canonical ascending order so ties
    // resolve to the lowest canonical set.
    std::vector<std::size_t> greedy_sets;
    {
        std::vector<uint64_t> uncov = full;
        uint64_t left = universe;
        while (left > 0) {
            std::size_t pick = e.size();
            uint64_t pick_cov = 0;
            for (std::size_t i = 0; i < e.size(); i++) {
                uint64_t c = 0;
                auto set = e.flat(i);
                for (int w = 0; w < words; w++)
                    c += static_cast<uint64_t>(std::popcount(set[static_cast<std::size_t>(w)] &
                                                             uncov[static_cast<std::size_t>(w)]));
                if (c > pick_cov) {
                    pick_cov = c;
                    pick = i;
                }
            }
            if (pick == e.size())
                throw NumericError("min_cover: vertices not coverable by enumerated flats");
            greedy_sets.push_back(pick);
            auto set = e.flat(pick);
            for (int w = 0; w < words; w++) uncov[static_cast<std::size_t>(w)] &= ~set[static_cast<std::size_t>(w)];
            left -= pick_cov;
        }
    }

    CoverSearcher searcher{e,
                           words,
                           full,
                           cert.max_incidence,
                           static_cast<int>(greedy_sets.size()),
                           greedy_sets,
                           {},
                           t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                    std::chrono::duration<double>(opts.timeout_secs)),
                           true};
    if (static_cast<int>(greedy_sets.size()) > cert.lower_bound) {
        try {
            std::vector<uint64_t> uncov = full;
            searcher.dfs(uncov, universe, 0);
        } catch (const TimeoutSignal&) {
            searcher.completed = false;
        }
    }

    cert.min_cover_size = searcher.best;
    cert.exhaustive = e.exhaustive && searcher.completed;
    for (std::size_t i : searcher.best_sets)
        cert.achieved_cover.push_back(
            materialize_incidence_set(p, e.indices_of(i)).witness_plane);
    std::sort(cert.achieved_cover.begin(), cert.achieved_cover.end());
    cert.elapsed_secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return cert;
}

} // namespace permucover
