#include "permucover/ratpoly.hpp"

#include <utility>

namespace permucover {

namespace {
const Rat kZero{0};
}

RatPoly::RatPoly(std::vector<Rat> ascending_coeffs) : c_(std::move(ascending_coeffs)) { trim(); }

RatPoly::RatPoly(std::initializer_list<Rat> ascending_coeffs) : c_(ascending_coeffs) { trim(); }

RatPoly RatPoly::constant(Rat c) {
    RatPoly p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

RatPoly RatPoly::monomial(Rat c, std::size_t k) {
    RatPoly p;
    if (c != 0) {
        p.c_.assign(k + 1, Rat(0));
        p.c_[k] = std::move(c);
    }
    return p;
}

void RatPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& RatPoly::coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : kZero;
}

const Rat& RatPoly::leading() const {
    if (c_.empty()) throw NumericError("leading coefficient of the zero polynomial");
    return c_.back();
}

RatPoly RatPoly::operator-() const {
    RatPoly r = *this;
    for (Rat& x : r.c_) x = -x;
    return r;
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < r.size(); i++) r[i] = coeff(i) + o.coeff(i);
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < r.size(); i++) r[i] = coeff(i) - o.coeff(i);
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return RatPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); i++)
        for (std::size_t j = 0; j < o.c_.size(); j++)
            r[i + j] += c_[i] * o.c_[j];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const Rat& s) const {
    if (s == 0) return RatPoly();
    RatPoly r = *this;
    for (Rat& x : r.c_) x *= s;
    return r;
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return RatPoly();
    std::vector<Rat> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); i++) r[i - 1] = c_[i] * Rat(BigInt(i));
    return RatPoly(std::move(r));
}

Rat RatPoly::eval(const Rat& x) const {
    Rat acc{0};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::complex<double> RatPoly::eval(std::complex<double> x) const {
    std::complex<double> acc{0.0, 0.0};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + rat_to_double(*it);
    return acc;
}

std::vector<double> RatPoly::double_coeffs() const {
    std::vector<double> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); i++) r[i] = rat_to_double(c_[i]);
    return r;
}

RatPoly RatPoly::monic() const {
    if (is_zero()) return *this;
    Rat inv = Rat(1) / leading();
    return *this * inv;
}

std::pair<RatPoly, RatPoly> RatPoly::divrem(const RatPoly& d) const {
    if (d.is_zero()) throw NumericError("polynomial division by zero");
    RatPoly rem = *this;
    if (degree() < d.degree()) return {RatPoly(), rem};
    std::vector<Rat> q(static_cast<std::size_t>(degree() - d.degree()) + 1, Rat(0));
    const Rat& lead = d.leading();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        std::size_t shift = static_cast<std::size_t>(rem.degree() - d.degree());
        Rat f = rem.leading() / lead;
        q[shift] = f;
        rem = rem - RatPoly::monomial(f, shift) * d;
    }
    return {RatPoly(std::move(q)), rem};
}

RatPoly RatPoly::divexact(const RatPoly& d) const {
    auto [q, r] = divrem(d);
    if (!r.is_zero()) throw NumericError("inexact polynomial division");
    return q;
}

std::string RatPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; k--) {
        const Rat& c = c_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        Rat a = c;
        if (out.empty()) {
            if (a < 0) { out += "-"; a = -a; }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        bool unit = (a == 1) && k > 0;
        if (!unit) out += rat_to_string(a);
        if (k > 0) {
            if (!unit) out += "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

RatPoly poly_gcd(const RatPoly& p, const RatPoly& q) {
    if (p.is_zero() && q.is_zero()) throw InputError("gcd of two zero polynomials");
    RatPoly a = p, b = q;
    while (!b.is_zero()) {
        RatPoly r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

RatPoly poly_from_roots(const std::vector<Rat>& roots) {
    RatPoly p = RatPoly::constant(Rat(1));
    for (const Rat& r : roots) p = p * RatPoly{-r, Rat(1)};
    return p;
}

} // namespace permucover
