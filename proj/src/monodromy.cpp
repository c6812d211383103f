#include "permucover/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "permucover/rootfind.hpp"

namespace permucover {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

// Ascending complex coefficients of F(z) + (-1)^n y.
std::vector<Complex> fiber_coeffs(const RatPoly& f, Complex y) {
    std::vector<double> base = f.double_coeffs();
    std::vector<Complex> c(base.begin(), base.end());
    const double sign = (f.degree() % 2 == 0) ? 1.0 : -1.0;
    c[0] += sign * y;
    return c;
}

double fiber_scale(const std::vector<Complex>& coeffs, Complex y) {
    double s = std::max(1.0, std::abs(y));
    for (const Complex& c : coeffs) s = std::max(s, std::abs(c));
    return s;
}

double min_pairwise(const std::vector<Complex>& z) {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < z.size(); i++)
        for (std::size_t j = i + 1; j < z.size(); j++)
            m = std::min(m, std::abs(z[i] - z[j]));
    return m;
}

bool complex_less(Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

// Greedy nearest-neighbor bijection from `from` onto `to`; returns the
// matching and the largest matched distance.
std::pair<std::vector<int>, double> greedy_match(const std::vector<Complex>& from,
                                                 const std::vector<Complex>& to) {
    const std::size_t n = from.size();
    struct Edge { double d; std::size_t i, j; };
    std::vector<Edge> edges;
    edges.reserve(n * n);
    for (std::size_t i = 0; i < n; i++)
        for (std::size_t j = 0; j < n; j++)
            edges.push_back({std::abs(from[i] - to[j]), i, j});
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.d < b.d; });
    std::vector<int> match(n, -1);
    std::vector<bool> used(n, false);
    double maxd = 0.0;
    std::size_t assigned = 0;
    for (const Edge& e : edges) {
        if (match[e.i] != -1 || used[e.j]) continue;
        match[e.i] = static_cast<int>(e.j);
        used[e.j] = true;
        maxd = std::max(maxd, e.d);
        if (++assigned == n) break;
    }
    return {std::move(match), maxd};
}

} // namespace

FiberState solve_fiber(const SymData& sym, Complex y, const TrackOptions& opts) {
    std::vector<Complex> coeffs = fiber_coeffs(sym.F, y);
    const double scale = fiber_scale(coeffs, y);
    FiberState fs;
    fs.y = y;
    fs.roots = find_roots(coeffs, opts.seed);
    fs.residuals.reserve(fs.roots.size());
    double root_scale = 1.0;
    for (const Complex& z : fs.roots) root_scale = std::max(root_scale, std::abs(z));
    for (const Complex& z : fs.roots) {
        double r = std::abs(poly_eval(coeffs, z));
        if (r > opts.tol_res_factor * scale)
            throw NumericError("fiber residual " + std::to_string(r) + " exceeds tolerance at y = (" +
                               std::to_string(y.real()) + "," + std::to_string(y.imag()) + ")");
        fs.residuals.push_back(r);
    }
    if (fs.roots.size() > 1 && min_pairwise(fs.roots) < 1e-6 * root_scale)
        throw NumericError("near branch point: fiber roots collide at y = (" +
                           std::to_string(y.real()) + "," + std::to_string(y.imag()) + ")");
    return fs;
}

std::pair<FiberState, Permutation> track_path(const SymData& sym, const FiberState& start,
                                              std::span<const Complex> waypoints,
                                              const TrackOptions& opts) {
    if (waypoints.empty()) throw InputError("track_path: empty waypoint list");
    const double sc0 = std::max(1.0, std::abs(start.y));
    if (std::abs(start.y - waypoints[0]) > 1e-9 * sc0)
        throw InputError("track_path: start fiber does not sit on the first waypoint");

    const double sign = (sym.F.degree() % 2 == 0) ? 1.0 : -1.0;
    std::vector<double> fd = sym.F.double_coeffs();
    std::vector<Complex> fc(fd.begin(), fd.end());
    std::vector<Complex> dc = poly_derivative(fc);

    std::vector<Complex> cur = start.roots;
    Complex cur_y = start.y;

    auto correct_at = [&](std::vector<Complex>& z, Complex y_next) -> bool {
        std::vector<Complex> coeffs = fc;
        coeffs[0] += sign * y_next;
        const double tol = opts.tol_res_factor * fiber_scale(coeffs, y_next);
        for (Complex& zi : z) {
            bool converged = false;
            for (int it = 0; it < 25; it++) {
                Complex fp = poly_eval(dc, zi);
                if (std::abs(fp) == 0.0) return false;
                Complex step = poly_eval(coeffs, zi) / fp;
                zi -= step;
                if (std::abs(poly_eval(coeffs, zi)) < tol) { converged = true; break; }
            }
            if (!converged) return false;
        }
        return true;
    };

    for (std::size_t k = 0; k + 1 < waypoints.size(); k++) {
        const Complex a = waypoints[k], b = waypoints[k + 1];
        const double len = std::abs(b - a);
        if (len == 0.0) continue;
        const Complex dir = (b - a) / len;

        double pos = 0.0;
        double step = len;
        if (opts.step_init > 0) step = std::min(step, opts.step_init);
        if (opts.step_max > 0) step = std::min(step, opts.step_max);
        int bisections = 0;

        while (pos < len) {
            const double h = std::min(step, len - pos);
            const Complex y_next = a + dir * (pos + h);

            // Linear predictor from dF/dz * dz + (-1)^n dy = 0.
            std::vector<Complex> pred = cur;
            bool ok = true;
            for (Complex& zi : pred) {
                Complex fp = poly_eval(dc, zi);
                if (std::abs(fp) < 1e-300) { ok = false; break; }
                zi -= sign * (y_next - cur_y) / fp;
            }
            if (ok) ok = correct_at(pred, y_next);
            if (ok) {
                const double guard = opts.collision_factor * min_pairwise(cur);
                auto [match, maxd] = greedy_match(cur, pred);
                bool is_ident = true;
                for (std::size_t i = 0; i < match.size(); i++)
                    if (match[i] != static_cast<int>(i)) { is_ident = false; break; }
                // A non-identity match means strands swapped within one step.
                ok = is_ident && maxd < guard && min_pairwise(pred) > 0.0;
            }

            if (ok) {
                cur = std::move(pred);
                cur_y = y_next;
                pos += h;
                bisections = 0;
                step = std::min(step * 2.0, opts.step_max > 0 ? opts.step_max : len);
            } else {
                if (++bisections > opts.max_bisections)
                    throw NumericError("path too close to branch point near y = (" +
                                       std::to_string(y_next.real()) + "," +
                                       std::to_string(y_next.imag()) + ") after " +
                                       std::to_string(bisections) + " bisections");
                step = h / 2.0;
            }
        }
    }

    // Canonical end order and the strand -> canonical-index match.
    const std::size_t n = cur.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; i++) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return complex_less(cur[i], cur[j]); });

    FiberState end;
    end.y = cur_y;
    end.roots.resize(n);
    std::vector<int> match(n);
    for (std::size_t rank = 0; rank < n; rank++) {
        end.roots[rank] = cur[order[rank]];
        match[order[rank]] = static_cast<int>(rank);
    }
    std::vector<Complex> coeffs = fc;
    coeffs[0] += sign * cur_y;
    end.residuals.reserve(n);
    for (const Complex& z : end.roots) end.residuals.push_back(std::abs(poly_eval(coeffs, z)));

    return {std::move(end), Permutation(std::move(match))};
}

std::vector<int> winding_numbers(std::span<const Complex> waypoints,
                                 std::span<const Complex> punctures) {
    if (waypoints.size() < 2) throw InputError("winding_numbers: need a closed polyline");
    std::vector<int> out;
    out.reserve(punctures.size());
    for (const Complex& q : punctures) {
        double total = 0.0;
        for (std::size_t k = 0; k + 1 < waypoints.size(); k++) {
            Complex u = waypoints[k] - q;
            Complex v = waypoints[k + 1] - q;
            if (std::abs(u) == 0.0 || std::abs(v) == 0.0)
                throw NumericError("winding_numbers: waypoint coincides with a puncture");
            double d = std::arg(v / u);
            if (std::abs(d) > 0.98 * std::numbers::pi)
                throw NumericError("winding_numbers: discretization too coarse near a puncture");
            total += d;
        }
        double w = total / kTau;
        double r = std::round(w);
        if (std::abs(w - r) > 1e-6)
            throw NumericError("winding_numbers: non-integral winding " + std::to_string(w));
        out.push_back(static_cast<int>(r));
    }
    return out;
}

LoopSpec loop_around_critical(const CriticalData& cd, int j, Complex base, int circle_samples) {
    const int m = static_cast<int>(cd.values.size());
    if (j < 0 || j >= m) throw InputError("loop_around_critical: index out of range");
    if (!cd.criterion_numeric)
        throw InputError("criterion fails: critical values not numerically distinct");

    const Complex v = cd.values[static_cast<std::size_t>(j)];
    double scale = 1.0;
    for (const Complex& vk : cd.values) scale = std::max(scale, std::abs(vk));
    double gap = std::numeric_limits<double>::infinity();
    for (int k = 0; k < m; k++)
        if (k != j) gap = std::min(gap, std::abs(v - cd.values[static_cast<std::size_t>(k)]));
    if (!std::isfinite(gap)) gap = scale;

    const double r = std::min(gap / 3.0, 0.25 * scale);
    if (!(r > 0.0)) throw NumericError("insufficient gap: coincident critical values");
    if (std::abs(base - v) <= 2.0 * r)
        throw NumericError("insufficient gap: base point inside the keyhole");

    LoopSpec loop;
    loop.base = base;
    loop.kind = "keyhole";
    loop.around_index = j;
    loop.radius = r;

    const Complex entry = v + r * (base - v) / std::abs(base - v);
    const double corridor_len = std::abs(entry - base);
    const int corridor_steps = std::max(2, static_cast<int>(std::ceil(corridor_len / (r / 2.0))));

    loop.waypoints.push_back(base);
    for (int s = 1; s <= corridor_steps; s++)
        loop.waypoints.push_back(base + (entry - base) *
                                            (static_cast<double>(s) / corridor_steps));
    const double theta0 = std::arg(entry - v);
    for (int s = 1; s <= circle_samples; s++) {
        double t = theta0 + kTau * static_cast<double>(s) / circle_samples;
        loop.waypoints.push_back(v + std::polar(r, t));
    }
    loop.waypoints.back() = entry; // close the circle exactly
    for (int s = 1; s <= corridor_steps; s++)
        loop.waypoints.push_back(entry + (base - entry) *
                                             (static_cast<double>(s) / corridor_steps));
    loop.waypoints.back() = base;

    // Guard-distance invariant: r/2 from every puncture.
    for (const Complex& w : loop.waypoints)
        for (const Complex& vk : cd.values)
            if (std::abs(w - vk) < 0.5 * r)
                throw NumericError("insufficient gap: loop waypoint within guard distance");

    std::vector<int> wind = winding_numbers(loop.waypoints, cd.values);
    for (int k = 0; k < m; k++)
        if (wind[static_cast<std::size_t>(k)] != (k == j ? 1 : 0))
            throw NumericError("keyhole winding check failed");
    return loop;
}

LoopSpec big_circle_loop(Complex base, int samples) {
    const double radius = std::abs(base);
    if (radius == 0.0) throw InputError("big_circle_loop: base at the origin");
    LoopSpec loop;
    loop.base = base;
    loop.kind = "circle";
    loop.radius = radius;
    const double theta0 = std::arg(base);
    loop.waypoints.reserve(static_cast<std::size_t>(samples) + 1);
    for (int s = 0; s <= samples; s++)
        loop.waypoints.push_back(std::polar(radius, theta0 + kTau * static_cast<double>(s) / samples));
    loop.waypoints.front() = base;
    loop.waypoints.back() = base;
    return loop;
}

MonodromyReport verify_claims(const SymData& sym, const CriticalData& cd,
                              const MonodromyOptions& opts) {
    const int n = sym.n();
    if (!cd.criterion_exact)
        throw InputError("criterion fails: repeated critical values (punctured plane has "
                         "multiplicity)");
    if (n > 8)
        throw LimitError("verify_claims: n = " + std::to_string(n) +
                         " exceeds the group enumeration limit n <= 8");

    MonodromyReport rep;
    double maxv = 0.0;
    for (const Complex& v : cd.values) maxv = std::max(maxv, std::abs(v));
    rep.base = Complex(0.0, -(1.0 + opts.radius_scale * maxv));

    double gap = cd.min_value_gap;
    if (!(gap > 0.0)) gap = std::max(1.0, 2.0 * maxv);

    TrackOptions topts;
    topts.step_init = gap / opts.step_div;
    topts.step_max = gap / opts.max_step_div;
    topts.max_bisections = opts.max_bisections;
    topts.tol_res_factor = opts.tol_res_factor;
    topts.seed = opts.seed;

    FiberState f0 = solve_fiber(sym, rep.base, topts);
    for (double r : f0.residuals) rep.max_residual = std::max(rep.max_residual, r);

    // Visit punctures in increasing real order; with the base point below
    // the real axis this realizes the standard loop arrangement.
    std::vector<int> visit(cd.values.size());
    for (std::size_t i = 0; i < visit.size(); i++) visit[i] = static_cast<int>(i);
    std::sort(visit.begin(), visit.end(), [&](int a, int b) {
        return complex_less(cd.values[static_cast<std::size_t>(a)],
                            cd.values[static_cast<std::size_t>(b)]);
    });

    std::vector<int> transposition_type;
    transposition_type.push_back(2);
    for (int i = 0; i < n - 2; i++) transposition_type.push_back(1);

    rep.transpositions_ok = true;
    std::vector<Permutation> sigmas;
    for (int idx : visit) {
        LoopResult lr;
        lr.spec = loop_around_critical(cd, idx, rep.base);
        auto [end, sigma] = track_path(sym, f0, lr.spec.waypoints, topts);
        for (double r : end.residuals) rep.max_residual = std::max(rep.max_residual, r);
        lr.sigma = sigma;
        lr.winding = winding_numbers(lr.spec.waypoints, cd.values);
        lr.cycle_type = sigma.cycle_type();
        if (lr.cycle_type != transposition_type) rep.transpositions_ok = false;
        sigmas.push_back(sigma);
        rep.loops.push_back(std::move(lr));
    }

    {
        LoopResult lr;
        lr.spec = big_circle_loop(rep.base, std::max(192, 32 * n));
        auto [end, sigma] = track_path(sym, f0, lr.spec.waypoints, topts);
        for (double r : end.residuals) rep.max_residual = std::max(rep.max_residual, r);
        lr.sigma = sigma;
        lr.winding = winding_numbers(lr.spec.waypoints, cd.values);
        lr.cycle_type = sigma.cycle_type();
        rep.cycle_ok = (lr.cycle_type == std::vector<int>{n});
        rep.big_loop = std::move(lr);
    }

    {
        // Doubling re-check: the cycle structure must be stable at twice the
        // radius, making "sufficiently large |y|" operational.
        Complex base2 = 2.0 * rep.base;
        FiberState f2 = solve_fiber(sym, base2, topts);
        LoopSpec big2 = big_circle_loop(base2, std::max(192, 32 * n));
        auto [end2, sigma2] = track_path(sym, f2, big2.waypoints, topts);
        rep.big_doubled_ok = (sigma2.cycle_type() == std::vector<int>{n});
    }

    if (!sigmas.empty()) {
        Permutation fwd = sigmas.front();
        for (std::size_t i = 1; i < sigmas.size(); i++) fwd = fwd.then(sigmas[i]);
        Permutation rev = sigmas.back();
        for (std::size_t i = sigmas.size() - 1; i-- > 0;) rev = rev.then(sigmas[i]);
        const Permutation& big = rep.big_loop.sigma;
        Permutation big_inv = big.inverse();
        rep.convention_match = {fwd == big, rev == big, fwd == big_inv, rev == big_inv};
        for (std::size_t i = 0; i < kConventionNames.size(); i++) {
            if (rep.convention_match[i]) {
                rep.product_convention = kConventionNames[i];
                break;
            }
        }
        rep.product_ok = !rep.product_convention.empty();
    }

    rep.generated_order = group_order(sigmas);
    long long fact = 1;
    for (int j = 2; j <= n; j++) fact *= j;
    rep.group_ok = (rep.generated_order == fact);

    rep.passes = rep.transpositions_ok && rep.cycle_ok && rep.big_doubled_ok && rep.product_ok &&
                 rep.group_ok;
    return rep;
}

} // namespace permucover
