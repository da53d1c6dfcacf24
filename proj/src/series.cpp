#include "potts/series.hpp"

#include <numeric>
#include <sstream>

namespace potts {

FracSeries::FracSeries(long scale, const Rational& cutoff) : scale_(scale), cutoff_(cutoff) {
    if (scale <= 0) throw std::invalid_argument("series scale must be positive");
}

long FracSeries::key_of(const Rational& e) const {
    const Rational scaled = e * scale_;
    if (!is_integer(scaled))
        throw std::invalid_argument("exponent " + to_string(e) + " not representable at scale " +
                                    std::to_string(scale_));
    return static_cast<long>(num(scaled));
}

void FracSeries::add_term(const Rational& e, const Rational& coeff) {
    if (coeff == 0 || e > cutoff_) return;
    const long k = key_of(e);
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational FracSeries::coeff(const Rational& e) const {
    if (e > cutoff_)
        throw TruncationError("coefficient at exponent " + to_string(e) +
                              " is beyond the series cutoff " + to_string(cutoff_));
    const Rational scaled = e * scale_;
    if (!is_integer(scaled)) return Rational(0);
    auto it = terms_.find(static_cast<long>(num(scaled)));
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational FracSeries::leading_exponent() const {
    if (terms_.empty()) throw std::logic_error("leading exponent of the zero series");
    return Rational(terms_.begin()->first, scale_);
}

bool FracSeries::is_zero() const { return terms_.empty(); }

FracSeries FracSeries::rescaled(long new_scale) const {
    if (new_scale == scale_) return *this;
    if (new_scale % scale_ != 0)
        throw std::invalid_argument("new scale must be a multiple of the old one");
    FracSeries out(new_scale, cutoff_);
    const long f = new_scale / scale_;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k * f, c);
    return out;
}

FracSeries FracSeries::operator+(const FracSeries& rhs) const {
    const long m = std::lcm(scale_, rhs.scale_);
    const FracSeries a = rescaled(m), b = rhs.rescaled(m);
    FracSeries out(m, std::min(cutoff_, rhs.cutoff_));
    for (const auto& [k, c] : a.terms_) out.add_term(Rational(k, m), c);
    for (const auto& [k, c] : b.terms_) out.add_term(Rational(k, m), c);
    return out;
}

FracSeries FracSeries::operator-(const FracSeries& rhs) const { return *this + rhs.scaled(Rational(-1)); }

FracSeries FracSeries::scaled(const Rational& c) const {
    FracSeries out(scale_, cutoff_);
    if (c == 0) return out;
    for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
    return out;
}

FracSeries FracSeries::mul(const FracSeries& rhs, const Rational& cutoff) const {
    // The product is only trustworthy up to min of the operand cutoffs
    // shifted by the other operand's leading exponent; enforcing the
    // simpler min-of-cutoffs rule keeps reasoning local and is sufficient
    // for every series in this project (all leading exponents are >= 0).
    if (cutoff > cutoff_ && !is_zero() && leading_exponent() < 0)
        throw TruncationError("product cutoff exceeds operand support");
    const long m = std::lcm(scale_, rhs.scale_);
    const FracSeries a = rescaled(m), b = rhs.rescaled(m);
    FracSeries out(m, cutoff);
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            const Rational e(ka + kb, m);
            if (e > cutoff) break;  // kb ascends, so later terms only grow
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

FracSeries FracSeries::operator*(const FracSeries& rhs) const {
    return mul(rhs, std::min(cutoff_, rhs.cutoff_));
}

std::string FracSeries::str() const {
    std::ostringstream os;
    for (const auto& [k, c] : terms_)
        os << "q^{" << to_string(Rational(k, scale_)) << "}: " << to_string(c) << "\n";
    return os.str();
}

FracSeries series_one(long scale, const Rational& cutoff) {
    FracSeries s(scale, cutoff);
    s.add_term(Rational(0), Rational(1));
    return s;
}

}  // namespace potts
