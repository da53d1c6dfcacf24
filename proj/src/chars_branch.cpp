#include "potts/chars/branch.hpp"

#include "potts/linalg.hpp"

#include <algorithm>
#include <set>

namespace potts::chars {

namespace {

Rational frac_part(const Rational& r) { return r - Rational(rational_floor(r)); }

}  // namespace

BranchResult branch_solver(const CharacterSeries& target,
                           const std::vector<CharacterSeries>& candidates) {
    BranchResult res;
    res.multiplicities.assign(candidates.size(), 0);

    Rational cutoff = target.series.cutoff();
    for (const auto& c : candidates) cutoff = std::min(cutoff, c.series.cutoff());

    // exponent classes mod 1 present in the target
    std::set<Rational> classes;
    for (const auto& [key, coeff] : target.series) {
        (void)coeff;
        classes.insert(frac_part(target.series.exponent_of(key)));
    }
    std::vector<std::size_t> allowed;
    for (std::size_t j = 0; j < candidates.size(); ++j) {
        if (candidates[j].series.is_zero()) continue;
        if (classes.count(frac_part(candidates[j].series.leading_exponent())))
            allowed.push_back(j);
    }

    // row exponents: union of all supports up to the common cutoff
    std::set<Rational> exps;
    for (const auto& [key, coeff] : target.series) {
        (void)coeff;
        const Rational e = target.series.exponent_of(key);
        if (e <= cutoff) exps.insert(e);
    }
    for (std::size_t j : allowed)
        for (const auto& [key, coeff] : candidates[j].series) {
            (void)coeff;
            const Rational e = candidates[j].series.exponent_of(key);
            if (e <= cutoff) exps.insert(e);
        }

    Mat a;
    Vec b;
    for (const auto& e : exps) {
        Vec row;
        for (std::size_t j : allowed) row.push_back(candidates[j].series.coeff(e));
        a.push_back(std::move(row));
        b.push_back(target.series.coeff(e));
    }

    const auto particular = solve(a, b);
    if (!particular) {
        res.diagnosis = "inconsistent: target is not a combination of the candidates";
        return res;
    }
    const auto kernel = nullspace(a, allowed.size());

    std::vector<Vec> solutions;
    auto admissible = [](const Vec& x) {
        for (const auto& v : x)
            if (v < 0 || !is_integer(v)) return false;
        return true;
    };
    if (kernel.empty()) {
        if (admissible(*particular)) solutions.push_back(*particular);
    } else if (kernel.size() == 1) {
        // one free direction: bound it through a pair of opposite-sign
        // coordinates of the null vector, then enumerate integer values of
        // a pinned coordinate
        const Vec& nv = kernel[0];
        std::size_t ip = allowed.size(), in = allowed.size();
        for (std::size_t i = 0; i < nv.size(); ++i) {
            if (nv[i] > 0 && ip == allowed.size()) ip = i;
            if (nv[i] < 0 && in == allowed.size()) in = i;
        }
        if (ip == allowed.size() || in == allowed.size()) {
            res.diagnosis = "underdetermined: unbounded free direction in the candidate set";
            return res;
        }
        // x[ip] >= 0 gives t >= -x0[ip]/nv[ip]; x[in] >= 0 gives
        // t <= x0[in]/(-nv[in])
        const Rational thi = (*particular)[in] / -nv[in];
        // x[ip] must be a nonnegative integer; enumerate its value k,
        // which fixes t = (k - x0[ip]) / nv[ip], increasing with k
        for (long k = 0;; ++k) {
            const Rational t = (Rational(k) - (*particular)[ip]) / nv[ip];
            if (t > thi) break;
            Vec x = *particular;
            for (std::size_t i = 0; i < x.size(); ++i) x[i] += t * nv[i];
            if (admissible(x) && std::find(solutions.begin(), solutions.end(), x) == solutions.end())
                solutions.push_back(x);
        }
    } else {
        res.diagnosis = "underdetermined: multiple free directions in the candidate set";
        return res;
    }

    if (solutions.empty()) {
        res.diagnosis = "inconsistent: no nonnegative integer multiplicities fit";
        return res;
    }
    if (solutions.size() > 1) {
        res.diagnosis = "ambiguous: several nonnegative integer solutions fit up to the cutoff";
        return res;
    }
    for (std::size_t k = 0; k < allowed.size(); ++k)
        res.multiplicities[allowed[k]] = num(solutions[0][k]).convert_to<long>();
    res.success = true;
    return res;
}

std::vector<TripleCandidate> triple_candidates(const Rational& cutoff, long scale) {
    const std::vector<Rational> h1s = {Rational(0), Rational(1, 2), Rational(1, 16)};
    const std::vector<Rational> h2s = {Rational(0),     Rational(7, 16), Rational(3, 2),
                                       Rational(1, 10), Rational(3, 5),  Rational(3, 80)};
    const std::vector<Rational> h3s = {Rational(0),    Rational(3),    Rational(2, 5),
                                       Rational(7, 5), Rational(2, 3), Rational(1, 15)};

    auto chars_for = [&](long p, long q, const std::vector<Rational>& hs) {
        std::vector<CharacterSeries> out(hs.size(), CharacterSeries{FracSeries(scale, cutoff), ""});
        for (long r = 1; r < p; ++r)
            for (long s = 1; s < q; ++s) {
                const Rational h = minimal_weight(p, q, r, s);
                const auto it = std::find(hs.begin(), hs.end(), h);
                if (it == hs.end()) continue;
                const std::size_t i = static_cast<std::size_t>(it - hs.begin());
                if (out[i].provenance.empty()) out[i] = minimal_char(p, q, r, s, cutoff, scale);
            }
        for (const auto& c : out)
            if (c.provenance.empty()) throw std::logic_error("missing minimal-model weight");
        return out;
    };
    const auto c12 = chars_for(3, 4, h1s);
    const auto c710 = chars_for(4, 5, h2s);
    const auto c45 = chars_for(5, 6, h3s);

    std::vector<TripleCandidate> out;
    for (std::size_t i = 0; i < h1s.size(); ++i)
        for (std::size_t j = 0; j < h2s.size(); ++j)
            for (std::size_t k = 0; k < h3s.size(); ++k) {
                FracSeries prod = c12[i].series * c710[j].series;
                prod = prod * c45[k].series;
                out.push_back(
                    TripleCandidate{{h1s[i], h2s[j], h3s[k]}, {std::move(prod), "product"}});
            }
    return out;
}

ModuleBranching branch_module(const fock::Lattice& lat, const fock::CosetVector& rep,
                              const Rational& cutoff, long scale) {
    const auto target = graded_dim_module(lat, rep, cutoff, scale);
    const auto cands = triple_candidates(cutoff, scale);
    std::vector<CharacterSeries> chis;
    for (const auto& c : cands) chis.push_back(c.chi);
    const auto res = branch_solver(target, chis);
    ModuleBranching out;
    out.success = res.success;
    out.diagnosis = res.diagnosis;
    if (res.success)
        for (std::size_t j = 0; j < cands.size(); ++j)
            if (res.multiplicities[j] != 0)
                out.components.emplace_back(cands[j].weights, res.multiplicities[j]);
    return out;
}

}  // namespace potts::chars
