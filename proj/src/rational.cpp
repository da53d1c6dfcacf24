#include "potts/rational.hpp"

#include <boost/multiprecision/integer.hpp>

namespace potts {

Rational parse_rational(const std::string& text) {
    auto bad = [&] { throw std::invalid_argument("malformed rational: '" + text + "'"); };
    if (text.empty()) bad();
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt n(text.substr(0, slash));
        BigInt d(text.substr(slash + 1));
        if (d == 0) bad();
        return Rational(n, d);
    } catch (const std::runtime_error&) {
        bad();
    }
    return Rational();  // unreachable
}

std::string to_string(const Rational& r) {
    std::string s = num(r).str();
    if (den(r) != 1) s += "/" + den(r).str();
    return s;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    BigInt sn = boost::multiprecision::sqrt(num(r));
    BigInt sd = boost::multiprecision::sqrt(den(r));
    if (sn * sn != num(r) || sd * sd != den(r)) return std::nullopt;
    return Rational(sn, sd);
}

}  // namespace potts
