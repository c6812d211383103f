#pragma once

#include <complex>
#include <initializer_list>
#include <string>
#include <vector>

#include "permucover/rat.hpp"

namespace permucover {

// Univariate polynomial with exact rational coefficients, stored in
// ascending degree with trailing zeros trimmed. The zero polynomial has an
// empty coefficient list and degree -1.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> ascending_coeffs);
    RatPoly(std::initializer_list<Rat> ascending_coeffs);
    static RatPoly constant(Rat c);
    // c * x^k
    static RatPoly monomial(Rat c, std::size_t k);

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    // Coefficient of x^k, zero beyond the stored range.
    const Rat& coeff(std::size_t k) const;
    const Rat& leading() const;
    const std::vector<Rat>& coeffs() const { return c_; }

    RatPoly operator-() const;
    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator*(const Rat& s) const;
    bool operator==(const RatPoly& o) const { return c_ == o.c_; }

    RatPoly derivative() const;
    Rat eval(const Rat& x) const;
    std::complex<double> eval(std::complex<double> x) const;
    // Coefficients converted to double, ascending. Used by the numeric layer.
    std::vector<double> double_coeffs() const;

    RatPoly monic() const;
    // Quotient and remainder of this / d, d nonzero.
    std::pair<RatPoly, RatPoly> divrem(const RatPoly& d) const;
    // Division known to be exact; throws NumericError on a nonzero remainder.
    RatPoly divexact(const RatPoly& d) const;

    // Human-readable form like "27*w^2 - 324*w + 968".
    std::string to_string(const std::string& var = "z") const;

private:
    void trim();
    std::vector<Rat> c_;
};

// Monic gcd by the Euclidean algorithm; error when both inputs are zero.
RatPoly poly_gcd(const RatPoly& p, const RatPoly& q);

// prod (x - r) over the given roots.
RatPoly poly_from_roots(const std::vector<Rat>& roots);

} // namespace permucover
