#include "potts/fock/vector.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace potts::fock {

long FockState::total_level() const {
    long s = 0;
    for (const auto& m : modes) s += m.level;
    return s;
}

Rational FockState::degree(const Lattice& lat) const {
    return Rational(total_level()) + lat.half_norm(exponent);
}

FockVector FockVector::exponential(CosetVector beta, Rational coeff) {
    FockVector v;
    v.add_term(FockState{{}, std::move(beta)}, coeff);
    return v;
}

FockVector FockVector::vacuum(std::size_t rank) {
    return exponential(CosetVector(rank, Rational(0)));
}

void FockVector::add_term(const FockState& st, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(st);
    if (it == terms_.end()) {
        terms_.emplace(st, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void FockVector::add_scaled(const FockVector& v, const Rational& c) {
    if (c == 0) return;
    for (const auto& [st, cf] : v.terms_) add_term(st, cf * c);
}

Rational FockVector::coeff(const FockState& st) const {
    auto it = terms_.find(st);
    return it == terms_.end() ? Rational(0) : it->second;
}

FockVector FockVector::operator+(const FockVector& o) const {
    FockVector r = *this;
    r.add_scaled(o, 1);
    return r;
}

FockVector FockVector::operator-(const FockVector& o) const {
    FockVector r = *this;
    r.add_scaled(o, -1);
    return r;
}

FockVector FockVector::operator*(const Rational& c) const {
    FockVector r;
    r.add_scaled(*this, c);
    return r;
}

namespace {
constexpr const char* kAxisNames[2] = {"x", "y"};
}

std::string FockVector::serialize() const {
    std::ostringstream os;
    for (const auto& [st, c] : terms_) {
        if (st.exponent.size() != 2)
            throw std::invalid_argument("serialization supports rank-2 states only");
        os << to_string(c) << "  ";
        for (const auto& m : st.modes) {
            if (m.axis < 0 || m.axis > 1) throw std::invalid_argument("axis out of range");
            os << kAxisNames[m.axis] << "(-" << m.level << ")";
        }
        if (st.modes.empty()) os << "1";
        os << "  exp(" << to_string(st.exponent[0]) << "," << to_string(st.exponent[1]) << ")\n";
    }
    return os.str();
}

FockVector FockVector::parse(const std::string& text) {
    FockVector out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::string coeff_tok, modes_tok, exp_tok;
        if (!(ls >> coeff_tok >> modes_tok >> exp_tok))
            throw std::invalid_argument("malformed state line: " + line);
        const Rational c = parse_rational(coeff_tok);
        FockState st;
        if (modes_tok != "1") {
            std::size_t pos = 0;
            while (pos < modes_tok.size()) {
                int axis;
                if (modes_tok.compare(pos, 1, "x") == 0)
                    axis = 0;
                else if (modes_tok.compare(pos, 1, "y") == 0)
                    axis = 1;
                else
                    throw std::invalid_argument("bad mode axis in: " + line);
                pos += 1;
                if (modes_tok.compare(pos, 2, "(-") != 0)
                    throw std::invalid_argument("bad mode syntax in: " + line);
                pos += 2;
                const std::size_t close = modes_tok.find(')', pos);
                if (close == std::string::npos)
                    throw std::invalid_argument("unterminated mode in: " + line);
                const long level = std::stol(modes_tok.substr(pos, close - pos));
                if (level <= 0) throw std::invalid_argument("mode level must be positive");
                st.modes.push_back(Mode{axis, level});
                pos = close + 1;
            }
            std::sort(st.modes.begin(), st.modes.end());
        }
        if (exp_tok.size() < 5 || exp_tok.compare(0, 4, "exp(") != 0 || exp_tok.back() != ')')
            throw std::invalid_argument("bad exponent syntax in: " + line);
        const std::string inner = exp_tok.substr(4, exp_tok.size() - 5);
        const std::size_t comma = inner.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("bad exponent in: " + line);
        st.exponent = {parse_rational(inner.substr(0, comma)),
                       parse_rational(inner.substr(comma + 1))};
        out.add_term(st, c);
    }
    return out;
}

}  // namespace potts::fock
