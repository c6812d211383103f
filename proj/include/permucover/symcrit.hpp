#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permucover/ratpoly.hpp"

namespace permucover {

inline constexpr double kDefaultValueTol = 1e-8;
inline constexpr std::uint64_t kDefaultSeed = 1;

// F_A and the elementary symmetric values it is built from.
// F_A(z) = z^n - S_1 z^{n-1} + S_2 z^{n-2} - ... + (-1)^{n-1} S_{n-1} z,
// with zero constant term. For the standard generators [n], G is
// prod_{j=1..n} (z - j); the exact identity G = F + (-1)^n n! is verified at
// construction (for odd n this reads G_n = F_n - n!).
struct SymData {
    std::vector<Rat> generators; // sorted ascending, distinct
    std::vector<Rat> S;          // S_1 .. S_{n-1}
    RatPoly F;
    std::optional<RatPoly> G;
    int n() const { return static_cast<int>(generators.size()); }
};

// Exact S_d(A) via the coefficient recurrence of prod (1 + a t).
Rat elem_sym(const std::vector<Rat>& a, int d);

// The standard generators {1, ..., n}.
std::vector<Rat> standard_generators(int n);

SymData build_fa(std::vector<Rat> a);

// Critical points p_j (roots of F'), critical values v_j = (-1)^{n-1} F(p_j)
// paired with them, the exact resultant R(w) = Res_z(F', F + (-1)^n w), and
// both forms of the distinct-critical-values criterion. The exact squarefree
// test is authoritative; the numeric distinctness test is advisory.
struct CriticalData {
    std::vector<std::complex<double>> points; // sorted by (re, im)
    std::vector<std::complex<double>> values; // values[j] pairs with points[j]
    RatPoly resultant_w;
    int defect_degree = 0;      // deg gcd(R, R'); 0 iff squarefree
    bool criterion_exact = false;
    bool criterion_numeric = false;
    int numeric_distinct = 0;   // value clusters at tolerance
    double min_value_gap = 0.0;
    bool interlacing_ok = false;
    std::vector<std::string> warnings;
};

CriticalData critical_data(const SymData& sym, double tol = kDefaultValueTol,
                           std::uint64_t seed = kDefaultSeed);

// a_j < Re(p_j) < a_{j+1} for all j, and every |Im(p_j)| below tolerance.
bool verify_interlacing(const std::vector<Rat>& sorted_a, const CriticalData& cd,
                        double imag_tol = 1e-9);

// Odd-n checks on G_n = prod (x - j): u_j is the extreme value of G_n on
// (j, j+1). Point symmetry about (n+1)/2 gives u_j = -u_{n-j}; the strict
// chain |u_j| < |u_{j+1}| is checked for integers n/2 < j <= n-2 (j = n-1
// has no successor value and is the trivially satisfied boundary).
struct OddCaseReport {
    int n = 0;
    std::vector<double> extreme_values; // u_1 .. u_{n-1}
    bool symmetry_ok = false;
    bool chain_ok = false;
    double max_symmetry_err = 0.0; // relative to max |u_j|
};

OddCaseReport oddcase_checks(int n, double rel_tol = kDefaultValueTol, int max_n = 15);

} // namespace permucover
