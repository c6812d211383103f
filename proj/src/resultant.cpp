#include "permucover/resultant.hpp"

namespace permucover {

namespace {

// Determinant by fraction-free (Bareiss) elimination over the ring Q[w].
RatPoly poly_matrix_det(std::vector<std::vector<RatPoly>>& m) {
    const std::size_t size = m.size();
    RatPoly prev = RatPoly::constant(Rat(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < size; k++) {
        std::size_t sel = k;
        while (sel < size && m[sel][k].is_zero()) sel++;
        if (sel == size) return RatPoly();
        if (sel != k) {
            std::swap(m[sel], m[k]);
            sign = -sign;
        }
        for (std::size_t r = k + 1; r < size; r++) {
            for (std::size_t c = k + 1; c < size; c++)
                m[r][c] = (m[r][c] * m[k][k] - m[r][k] * m[k][c]).divexact(prev);
            m[r][k] = RatPoly();
        }
        prev = m[k][k];
    }
    RatPoly det = m[size - 1][size - 1];
    return sign < 0 ? -det : det;
}

} // namespace

RatPoly resultant_in_w(const RatPoly& p, const std::vector<RatPoly>& q_z_coeffs) {
    const int dp = p.degree();
    int dq = static_cast<int>(q_z_coeffs.size()) - 1;
    while (dq >= 0 && q_z_coeffs[static_cast<std::size_t>(dq)].is_zero()) dq--;
    if (dp < 1) throw InputError("resultant: p must have degree >= 1");
    if (dq < 1) throw InputError("resultant: q must have z-degree >= 1");

    // Standard Sylvester layout: dq rows of p's coefficients, dp rows of q's,
    // descending in z, each shifted one column right of the previous row.
    const std::size_t size = static_cast<std::size_t>(dp + dq);
    std::vector<std::vector<RatPoly>> syl(size, std::vector<RatPoly>(size));
    for (int r = 0; r < dq; r++)
        for (int k = 0; k <= dp; k++)
            syl[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] =
                RatPoly::constant(p.coeff(static_cast<std::size_t>(dp - k)));
    for (int r = 0; r < dp; r++)
        for (int k = 0; k <= dq; k++)
            syl[static_cast<std::size_t>(dq + r)][static_cast<std::size_t>(r + k)] =
                q_z_coeffs[static_cast<std::size_t>(dq - k)];
    return poly_matrix_det(syl);
}

RatPoly critical_value_resultant(const RatPoly& f) {
    const int n = f.degree();
    if (n < 2) throw InputError("critical_value_resultant: degree >= 2 required");
    std::vector<RatPoly> q(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; k++)
        q[static_cast<std::size_t>(k)] = RatPoly::constant(f.coeff(static_cast<std::size_t>(k)));
    // z^0 coefficient: f's constant term plus (-1)^n * w.
    q[0] = RatPoly{f.coeff(0), (n % 2 == 0) ? Rat(1) : Rat(-1)};
    return resultant_in_w(f.derivative(), q);
}

} // namespace permucover
