#include "permucover/rat.hpp"

#include <cctype>

namespace permucover {

namespace {

bool is_integer_token(std::string_view s) {
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

BigInt parse_bigint(std::string_view text) {
    if (!is_integer_token(text))
        throw InputError("not an integer: \"" + std::string(text) + "\"");
    return BigInt(std::string(text));
}

Rat parse_rat(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rat(parse_bigint(text));
    }
    BigInt num = parse_bigint(text.substr(0, slash));
    BigInt den = parse_bigint(text.substr(slash + 1));
    if (den == 0)
        throw InputError("zero denominator in \"" + std::string(text) + "\"");
    return Rat(num, den);
}

std::string rat_to_string(const Rat& r) {
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1) {
        s += '/';
        s += rat_den(r).str();
    }
    return s;
}

std::string bigint_to_string(const BigInt& z) { return z.str(); }

double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

BigInt lcm(const BigInt& a, const BigInt& b) { return boost::multiprecision::lcm(a, b); }

BigInt common_denominator(const std::vector<Rat>& values) {
    BigInt l = 1;
    for (const Rat& v : values) l = lcm(l, rat_den(v));
    return l;
}

} // namespace permucover
