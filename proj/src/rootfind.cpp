#include "permucover/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "permucover/errors.hpp"

namespace permucover {

std::complex<double> poly_eval(const std::vector<std::complex<double>>& c, std::complex<double> x) {
    std::complex<double> acc{0.0, 0.0};
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<std::complex<double>> poly_derivative(const std::vector<std::complex<double>>& c) {
    if (c.size() <= 1) return {};
    std::vector<std::complex<double>> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); i++) d[i - 1] = c[i] * static_cast<double>(i);
    return d;
}

std::vector<std::complex<double>> find_roots(const std::vector<std::complex<double>>& coeffs,
                                             std::uint64_t seed, int max_iters) {
    std::vector<std::complex<double>> c = coeffs;
    while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
    if (c.size() < 2) throw NumericError("find_roots: polynomial has no roots");
    const std::size_t deg = c.size() - 1;
    // Make monic.
    for (std::size_t i = 0; i < deg; i++) c[i] /= c.back();
    c.back() = 1.0;

    // Cauchy bound on root magnitude for a monic polynomial.
    double radius = 0.0;
    for (std::size_t i = 0; i < deg; i++) radius = std::max(radius, std::abs(c[i]));
    radius = 1.0 + radius;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> jitter(-0.5, 0.5);
    std::vector<std::complex<double>> z(deg);
    const double tau = 6.283185307179586;
    for (std::size_t k = 0; k < deg; k++) {
        double ang = tau * (static_cast<double>(k) + 0.26) / static_cast<double>(deg) +
                     0.1 * jitter(rng) / static_cast<double>(deg);
        double r = radius * (0.5 + 0.05 * jitter(rng));
        z[k] = std::polar(r, ang);
    }

    double last_update = 0.0;
    int it = 0;
    for (; it < max_iters; it++) {
        double max_update = 0.0;
        for (std::size_t i = 0; i < deg; i++) {
            std::complex<double> denom{1.0, 0.0};
            for (std::size_t j = 0; j < deg; j++)
                if (j != i) denom *= z[i] - z[j];
            if (std::abs(denom) == 0.0) {
                // Coincident iterates; nudge deterministically and retry.
                z[i] += std::complex<double>(1e-8 * radius, 1e-8 * radius);
                max_update = radius;
                continue;
            }
            std::complex<double> delta = poly_eval(c, z[i]) / denom;
            z[i] -= delta;
            max_update = std::max(max_update, std::abs(delta));
        }
        last_update = max_update;
        double scale = 0.0;
        for (const auto& zi : z) scale = std::max(scale, std::abs(zi));
        if (max_update < 1e-14 * std::max(1.0, scale)) break;
    }
    if (it == max_iters)
        throw NumericError("root finder did not converge after " + std::to_string(max_iters) +
                           " iterations (last max update " + std::to_string(last_update) + ")");

    // Newton polish.
    const auto d = poly_derivative(c);
    for (auto& zi : z) {
        for (int k = 0; k < 6; k++) {
            std::complex<double> fp = poly_eval(d, zi);
            if (std::abs(fp) == 0.0) break;
            std::complex<double> step = poly_eval(c, zi) / fp;
            zi -= step;
            if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(zi))) break;
        }
    }
    std::sort(z.begin(), z.end(), [](auto a, auto b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return z;
}

std::vector<std::complex<double>> find_roots(const std::vector<double>& coeffs, std::uint64_t seed,
                                             int max_iters) {
    std::vector<std::complex<double>> c(coeffs.begin(), coeffs.end());
    return find_roots(c, seed, max_iters);
}

} // namespace permucover
