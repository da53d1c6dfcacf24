#include "potts/cyclotomic.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace potts {

namespace {

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

/// Exact polynomial long division; the divisor must be monic.
/// Returns the quotient and requires zero remainder.
std::vector<Rational> exact_div(std::vector<Rational> num, const std::vector<Rational>& div) {
    const std::size_t dn = div.size() - 1;
    if (num.size() < div.size()) throw std::logic_error("cyclotomic division underflow");
    std::vector<Rational> quot(num.size() - dn, Rational(0));
    for (std::size_t i = num.size(); i-- >= div.size();) {
        const Rational c = num[i];
        if (c == 0) continue;
        quot[i - dn] = c;
        for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * div[j];
    }
    for (const auto& c : num)
        if (c != 0) throw std::logic_error("cyclotomic division not exact");
    return quot;
}

}  // namespace

std::vector<Rational> cyclotomic_polynomial(unsigned n) {
    static std::map<unsigned, std::vector<Rational>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // x^n - 1
    std::vector<Rational> poly(n + 1, Rational(0));
    poly[0] = -1;
    poly[n] = 1;
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) poly = exact_div(std::move(poly), cyclotomic_polynomial(d));
    cache[n] = poly;
    return poly;
}

CycScalar::CycScalar(unsigned order) : order_(order), coeff_(euler_phi(order), Rational(0)) {
    if (order == 0) throw std::invalid_argument("cyclotomic order must be positive");
}

CycScalar::CycScalar(unsigned order, const Rational& constant) : CycScalar(order) {
    coeff_[0] = constant;
}

void CycScalar::reduce(std::vector<Rational>& raw) const {
    const auto phi_poly = cyclotomic_polynomial(order_);
    const std::size_t deg = phi_poly.size() - 1;
    for (std::size_t i = raw.size(); i-- > deg;) {
        const Rational c = raw[i];
        if (c == 0) continue;
        raw[i] = 0;
        for (std::size_t j = 0; j < deg; ++j) raw[i - deg + j] -= c * phi_poly[j];
    }
    raw.resize(deg, Rational(0));
    if (raw.size() < deg) raw.resize(deg, Rational(0));
}

CycScalar CycScalar::from_raw(unsigned order, std::vector<Rational> raw) {
    CycScalar out(order);
    if (raw.size() < out.coeff_.size()) raw.resize(out.coeff_.size(), Rational(0));
    out.reduce(raw);
    out.coeff_ = std::move(raw);
    return out;
}

CycScalar CycScalar::root_of_unity(unsigned order, long k) {
    k %= static_cast<long>(order);
    if (k < 0) k += order;
    std::vector<Rational> raw(static_cast<std::size_t>(k) + 1, Rational(0));
    raw[static_cast<std::size_t>(k)] = 1;
    return from_raw(order, std::move(raw));
}

CycScalar CycScalar::operator+(const CycScalar& rhs) const {
    if (order_ != rhs.order_) {
        const unsigned m = std::lcm(order_, rhs.order_);
        return embed(*this, m) + embed(rhs, m);
    }
    CycScalar out(*this);
    for (std::size_t i = 0; i < coeff_.size(); ++i) out.coeff_[i] += rhs.coeff_[i];
    return out;
}

CycScalar CycScalar::operator-(const CycScalar& rhs) const { return *this + (-rhs); }

CycScalar CycScalar::operator-() const {
    CycScalar out(*this);
    for (auto& c : out.coeff_) c = -c;
    return out;
}

CycScalar CycScalar::operator*(const CycScalar& rhs) const {
    if (order_ != rhs.order_) {
        const unsigned m = std::lcm(order_, rhs.order_);
        return embed(*this, m) * embed(rhs, m);
    }
    std::vector<Rational> raw(2 * coeff_.size(), Rational(0));
    for (std::size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeff_.size(); ++j)
            raw[i + j] += coeff_[i] * rhs.coeff_[j];
    }
    return from_raw(order_, std::move(raw));
}

bool CycScalar::operator==(const CycScalar& rhs) const {
    if (order_ != rhs.order_) {
        const unsigned m = std::lcm(order_, rhs.order_);
        return embed(*this, m) == embed(rhs, m);
    }
    return coeff_ == rhs.coeff_;
}

bool CycScalar::is_zero() const {
    for (const auto& c : coeff_)
        if (c != 0) return false;
    return true;
}

bool CycScalar::is_one() const {
    if (coeff_[0] != 1) return false;
    for (std::size_t i = 1; i < coeff_.size(); ++i)
        if (coeff_[i] != 0) return false;
    return true;
}

CycScalar CycScalar::pow(unsigned long e) const {
    CycScalar acc(order_, Rational(1));
    CycScalar base(*this);
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

unsigned CycScalar::multiplicative_order() const {
    CycScalar acc(order_, Rational(1));
    // Roots of unity in Q(zeta_N) have order dividing lcm(2, N).
    const unsigned bound = 2 * order_;
    for (unsigned k = 1; k <= bound; ++k) {
        acc = acc * *this;
        if (acc.is_one()) return k;
    }
    return 0;
}

std::string CycScalar::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i] == 0) continue;
        Rational c = coeff_[i];
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        } else if (c < 0 && i > 0) {
            os << "-";
            c = -c;
        }
        if (i == 0) {
            os << to_string(c);
        } else {
            if (c != 1) os << to_string(c) << "*";
            os << "z" << order_;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

CycScalar embed(const CycScalar& v, unsigned new_order) {
    if (new_order == v.order()) return v;
    if (new_order % v.order() != 0)
        throw std::invalid_argument("cyclotomic embedding requires divisible orders");
    const unsigned step = new_order / v.order();
    const auto& c = v.coefficients();
    // zeta_N^i maps to zeta_M^(i*step); resum in the larger field.
    CycScalar sum(new_order);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        sum = sum + CycScalar(new_order, c[i]) * CycScalar::root_of_unity(new_order, static_cast<long>(i * step));
    }
    return sum;
}

}  // namespace potts
