#pragma once

#include <array>
#include <complex>
#include <span>
#include <string>
#include <vector>

#include "permucover/permutation.hpp"
#include "permucover/symcrit.hpp"

namespace permucover {

using Complex = std::complex<double>;

// The ordered roots of F_A(z) + (-1)^n y = 0 at one path parameter y.
struct FiberState {
    Complex y;
    std::vector<Complex> roots;    // canonical order: sorted by (re, im)
    std::vector<double> residuals; // |F(z_i) + (-1)^n y|
};

// A closed loop in the punctured value plane, discretized into waypoints
// (first == last). kind is "keyhole" (around one critical value) or
// "circle" (around the origin).
struct LoopSpec {
    Complex base;
    std::string kind;
    int around_index = -1; // index into the critical-value list, keyholes only
    double radius = 0.0;
    std::vector<Complex> waypoints;
};

struct TrackOptions {
    double step_init = 0.0;      // 0 = start with the full segment
    double step_max = 0.0;       // 0 = no cap below the segment length
    int max_bisections = 30;
    double tol_res_factor = 1e-9;    // residual bound = factor * scale
    double collision_factor = 1.0 / 3.0;
    std::uint64_t seed = kDefaultSeed;
};

// Fiber at y by direct root finding. Errors when y sits so close to a
// critical value that the fiber has (numerically) colliding roots.
FiberState solve_fiber(const SymData& sym, Complex y, const TrackOptions& opts = {});

// Continues the fiber along the waypoint path by linear prediction in y and
// Newton correction in z. Per accepted step, the greedy nearest-neighbor
// match between consecutive fibers must be a bijection with every matched
// distance below collision_factor times the previous minimum pairwise root
// distance; otherwise the step is bisected. Returns the end fiber in
// canonical order and the permutation match: match(i) is the canonical end
// index of the strand that started at start.roots[i]. For a closed loop
// this is the monodromy permutation.
std::pair<FiberState, Permutation> track_path(const SymData& sym, const FiberState& start,
                                              std::span<const Complex> waypoints,
                                              const TrackOptions& opts = {});

// Winding numbers of the closed waypoint polyline around each puncture, by
// discrete argument summation. Errors when a segment subtends too wide an
// angle for the summation to be unambiguous.
std::vector<int> winding_numbers(std::span<const Complex> waypoints,
                                 std::span<const Complex> punctures);

// Keyhole loop around critical value j (index into cd.values): straight
// corridor from base toward v_j, a counterclockwise circle of radius
// min(gap_j/3, 0.25*scale), corridor back. Winding numbers are verified on
// the emitted waypoints. Errors when the critical values are too clustered
// for the corridor ("insufficient gap").
LoopSpec loop_around_critical(const CriticalData& cd, int j, Complex base,
                              int circle_samples = 48);

// Circle of the given radius centered at the origin through base (base must
// lie on it), counterclockwise.
LoopSpec big_circle_loop(Complex base, int samples = 192);

struct LoopResult {
    LoopSpec spec;
    Permutation sigma;
    std::vector<int> winding;
    std::vector<int> cycle_type;
    LoopResult() : sigma(Permutation::identity(0)) {}
};

struct MonodromyOptions {
    double radius_scale = 2.0;
    double step_div = 16.0;
    double max_step_div = 8.0;
    int max_bisections = 30;
    double tol_res_factor = 1e-9;
    std::uint64_t seed = kDefaultSeed;
};

// Composition conventions for the product check, in priority order.
inline constexpr std::array<const char*, 4> kConventionNames = {
    "forward", "reverse", "forward_inverse", "reverse_inverse"};

struct MonodromyReport {
    Complex base;
    std::vector<LoopResult> loops; // keyholes, visited in increasing Re(v)
    LoopResult big_loop;
    bool big_doubled_ok = false;   // re-run at twice the radius, same cycle type
    bool transpositions_ok = false;
    bool cycle_ok = false;
    std::array<bool, 4> convention_match{};
    std::string product_convention;   // first matching convention, or ""
    bool product_ok = false;
    long long generated_order = 0;
    bool group_ok = false;
    bool passes = false;
    double max_residual = 0.0;
};

// Full verification run: a keyhole per critical value (transpositions), the
// big circle (n-cycle, re-checked at doubled radius), the loop product
// identity under the fixed composition conventions, and the order of the
// generated permutation group. Requires the exact criterion to hold.
MonodromyReport verify_claims(const SymData& sym, const CriticalData& cd,
                              const MonodromyOptions& opts = {});

} // namespace permucover
