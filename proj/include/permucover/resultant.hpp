#pragma once

#include <vector>

#include "permucover/ratpoly.hpp"

namespace permucover {

// Resultant in z of p(z) and q(z), where q's z-coefficients are themselves
// polynomials in an auxiliary variable w (ascending in z). The Sylvester
// determinant is expanded by fraction-free elimination over Q[w]; every
// division is exact in the polynomial ring, so the result is a polynomial,
// never an interpolation. Errors when p is constant or q has z-degree < 1.
RatPoly resultant_in_w(const RatPoly& p, const std::vector<RatPoly>& q_z_coeffs);

// R(w) = Res_z(F'(z), F(z) + (-1)^n w) for a degree-n polynomial F. The
// roots of R are exactly the w for which F(z) + (-1)^n w has a multiple
// root, i.e. the critical values of F under the sign convention
// F(p) + (-1)^n v = 0.
RatPoly critical_value_resultant(const RatPoly& f);

} // namespace permucover
