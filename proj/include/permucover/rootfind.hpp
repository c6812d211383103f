#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace permucover {

// All roots of a complex polynomial (coefficients ascending, leading entry
// nonzero) by Durand-Kerner simultaneous iteration started from a seeded,
// perturbed ring, followed by Newton polishing of each root. Deterministic
// for a fixed seed. Throws NumericError with iteration diagnostics when the
// iteration fails to settle.
std::vector<std::complex<double>> find_roots(const std::vector<double>& ascending_coeffs,
                                             std::uint64_t seed, int max_iters = 600);

std::vector<std::complex<double>> find_roots(const std::vector<std::complex<double>>& ascending_coeffs,
                                             std::uint64_t seed, int max_iters = 600);

// Horner evaluation; used by the polishing and tracking layers.
std::complex<double> poly_eval(const std::vector<std::complex<double>>& ascending_coeffs,
                               std::complex<double> x);

std::vector<std::complex<double>> poly_derivative(const std::vector<std::complex<double>>& ascending_coeffs);

} // namespace permucover
