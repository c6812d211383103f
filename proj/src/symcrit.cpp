#include "permucover/symcrit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "permucover/resultant.hpp"
#include "permucover/rootfind.hpp"

namespace permucover {

Rat elem_sym(const std::vector<Rat>& a, int d) {
    const int n = static_cast<int>(a.size());
    if (d < 0 || d > n)
        throw InputError("elem_sym: degree d = " + std::to_string(d) + " out of range [0," +
                         std::to_string(n) + "]");
    // Coefficients of prod (1 + a_i t), built incrementally.
    std::vector<Rat> s(static_cast<std::size_t>(d) + 1, Rat(0));
    s[0] = 1;
    for (const Rat& ai : a)
        for (int k = d; k >= 1; k--)
            s[static_cast<std::size_t>(k)] += ai * s[static_cast<std::size_t>(k) - 1];
    return s[static_cast<std::size_t>(d)];
}

SymData build_fa(std::vector<Rat> a) {
    const int n = static_cast<int>(a.size());
    if (n < 2) throw InputError("A must have at least 2 elements");
    std::sort(a.begin(), a.end());
    for (int i = 0; i + 1 < n; i++)
        if (a[static_cast<std::size_t>(i)] == a[static_cast<std::size_t>(i) + 1])
            throw InputError("A must be distinct");

    SymData sym;
    sym.S.reserve(static_cast<std::size_t>(n) - 1);
    for (int d = 1; d < n; d++) sym.S.push_back(elem_sym(a, d));

    std::vector<Rat> coeffs(static_cast<std::size_t>(n) + 1, Rat(0));
    coeffs[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; d++) {
        Rat c = sym.S[static_cast<std::size_t>(d) - 1];
        if (d % 2 == 1) c = -c;
        coeffs[static_cast<std::size_t>(n - d)] = c;
    }
    sym.F = RatPoly(std::move(coeffs));

    bool standard = true;
    for (int i = 0; i < n; i++)
        if (a[static_cast<std::size_t>(i)] != i + 1) { standard = false; break; }
    if (standard) {
        std::vector<Rat> roots;
        for (int j = 1; j <= n; j++) roots.emplace_back(j);
        RatPoly g = poly_from_roots(roots);
        Rat fact{1};
        for (int j = 2; j <= n; j++) fact *= j;
        if (n % 2 == 1) fact = -fact;
        // G = F + (-1)^n n!; for odd n this is the identity G_n = F_n - n!.
        if (!(sym.F + RatPoly::constant(fact) == g))
            throw NumericError("internal: product identity for G_n failed");
        sym.G = std::move(g);
    }

    sym.generators = std::move(a);
    return sym;
}

CriticalData critical_data(const SymData& sym, double tol, std::uint64_t seed) {
    const int n = sym.n();
    CriticalData cd;

    RatPoly fp = sym.F.derivative();
    cd.points = find_roots(fp.double_coeffs(), seed);

    const double value_sign = (n % 2 == 1) ? 1.0 : -1.0; // (-1)^{n-1}
    cd.values.reserve(cd.points.size());
    for (auto p : cd.points) cd.values.push_back(value_sign * sym.F.eval(p));

    cd.resultant_w = critical_value_resultant(sym.F);
    RatPoly g = poly_gcd(cd.resultant_w, cd.resultant_w.derivative());
    cd.defect_degree = std::max(0, g.degree());
    cd.criterion_exact = (cd.defect_degree == 0) && (cd.resultant_w.degree() == n - 1);

    double scale = 1.0;
    for (auto v : cd.values) scale = std::max(scale, std::abs(v));
    double min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < cd.values.size(); i++)
        for (std::size_t j = i + 1; j < cd.values.size(); j++)
            min_gap = std::min(min_gap, std::abs(cd.values[i] - cd.values[j]));
    if (cd.values.size() < 2) min_gap = 0.0;
    cd.min_value_gap = std::isfinite(min_gap) ? min_gap : 0.0;
    cd.criterion_numeric = cd.values.size() >= 2 && min_gap > tol * scale;

    // Cluster count at tolerance: union of all pairs closer than tol*scale.
    const std::size_t m = cd.values.size();
    std::vector<std::size_t> parent(m);
    for (std::size_t i = 0; i < m; i++) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < m; i++)
        for (std::size_t j = i + 1; j < m; j++)
            if (std::abs(cd.values[i] - cd.values[j]) <= tol * scale) parent[find(i)] = find(j);
    int clusters = 0;
    for (std::size_t i = 0; i < m; i++)
        if (find(i) == i) clusters++;
    cd.numeric_distinct = clusters;

    cd.interlacing_ok = verify_interlacing(sym.generators, cd);

    // Conditioning of the generators themselves.
    double min_a_gap = std::numeric_limits<double>::infinity();
    double lo = rat_to_double(sym.generators.front());
    double hi = rat_to_double(sym.generators.back());
    for (std::size_t i = 0; i + 1 < sym.generators.size(); i++)
        min_a_gap = std::min(min_a_gap, rat_to_double(sym.generators[i + 1] - sym.generators[i]));
    if (hi > lo && min_a_gap < 1e-6 * (hi - lo))
        cd.warnings.push_back("ill-conditioned generators: min gap " + std::to_string(min_a_gap) +
                              " below 1e-6 of spread " + std::to_string(hi - lo));

    return cd;
}

bool verify_interlacing(const std::vector<Rat>& sorted_a, const CriticalData& cd, double imag_tol) {
    if (cd.points.size() + 1 != sorted_a.size()) return false;
    double scale = 1.0;
    for (const Rat& a : sorted_a) scale = std::max(scale, std::abs(rat_to_double(a)));
    for (std::size_t j = 0; j < cd.points.size(); j++) {
        if (std::abs(cd.points[j].imag()) > imag_tol * scale) return false;
        double lo = rat_to_double(sorted_a[j]);
        double hi = rat_to_double(sorted_a[j + 1]);
        double x = cd.points[j].real();
        if (!(lo < x && x < hi)) return false;
    }
    return true;
}

OddCaseReport oddcase_checks(int n, double rel_tol, int max_n) {
    if (n % 2 == 0) throw InputError("oddcase_checks: n must be odd");
    if (n < 3) throw InputError("oddcase_checks: n >= 3 required");
    if (n > max_n)
        throw LimitError("oddcase_checks: n = " + std::to_string(n) + " exceeds limit " +
                         std::to_string(max_n));

    SymData sym = build_fa(standard_generators(n));
    CriticalData cd = critical_data(sym);

    double fact = 1.0;
    for (int j = 2; j <= n; j++) fact *= j;

    OddCaseReport rep;
    rep.n = n;
    // n odd: v_j = F(p_j) and u_j = G_n(p_j) = v_j - n!. Points are sorted
    // by real part, so u_j is the extreme value on (j, j+1).
    for (auto v : cd.values) rep.extreme_values.push_back(v.real() - fact);

    double umax = 0.0;
    for (double u : rep.extreme_values) umax = std::max(umax, std::abs(u));
    double max_err = 0.0;
    for (int j = 1; j <= n - 1; j++) {
        double uj = rep.extreme_values[static_cast<std::size_t>(j) - 1];
        double um = rep.extreme_values[static_cast<std::size_t>(n - j) - 1];
        max_err = std::max(max_err, std::abs(uj + um));
    }
    rep.max_symmetry_err = umax > 0 ? max_err / umax : max_err;
    rep.symmetry_ok = rep.max_symmetry_err <= rel_tol;

    rep.chain_ok = true;
    for (int j = n / 2 + 1; j <= n - 2; j++) {
        double uj = std::abs(rep.extreme_values[static_cast<std::size_t>(j) - 1]);
        double un = std::abs(rep.extreme_values[static_cast<std::size_t>(j)]);
        if (!(uj < un)) rep.chain_ok = false;
    }
    return rep;
}

std::vector<Rat> standard_generators(int n) {
    std::vector<Rat> a;
    a.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; i++) a.emplace_back(i);
    return a;
}

} // namespace permucover
