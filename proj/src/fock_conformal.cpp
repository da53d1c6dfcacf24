#include "potts/fock/conformal.hpp"

#include "potts/fock/evidence.hpp"
#include "potts/fock/vertex.hpp"
#include "potts/linalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

namespace potts::fock {

FockVector apply_lattice_map(const FockVector& v, const std::array<std::array<long, 2>, 2>& m) {
    FockVector out;
    for (const auto& [st, c] : v.terms()) {
        if (st.exponent.size() != 2) throw std::invalid_argument("rank-2 vectors only");
        CosetVector e2 = {Rational(m[0][0]) * st.exponent[0] + Rational(m[0][1]) * st.exponent[1],
                          Rational(m[1][0]) * st.exponent[0] + Rational(m[1][1]) * st.exponent[1]};
        // expand each mode along the image of its axis vector
        std::vector<std::pair<std::vector<Mode>, Rational>> terms = {{{}, c}};
        for (const auto& mode : st.modes) {
            std::vector<std::pair<std::vector<Mode>, Rational>> next;
            for (int k = 0; k < 2; ++k) {
                const long img = m[k][mode.axis];
                if (img == 0) continue;
                for (const auto& [ms, cc] : terms) {
                    auto ms2 = ms;
                    ms2.push_back(Mode{k, mode.level});
                    next.emplace_back(std::move(ms2), cc * img);
                }
            }
            terms = std::move(next);
        }
        for (auto& [ms, cc] : terms) {
            std::sort(ms.begin(), ms.end());
            out.add_term(FockState{std::move(ms), e2}, cc);
        }
    }
    return out;
}

namespace {

/// Coordinates of v over an indexed state list; states of v outside the
/// list are collected into `index` on demand when extend is true.
struct StateIndex {
    std::vector<FockState> states;
    std::map<FockState, std::size_t> index;

    std::size_t at(const FockState& st, bool extend) {
        auto it = index.find(st);
        if (it != index.end()) return it->second;
        if (!extend) throw std::logic_error("state outside indexed space");
        index.emplace(st, states.size());
        states.push_back(st);
        return states.size() - 1;
    }
};

Vec coords(const FockVector& v, StateIndex& ix, bool extend) {
    Vec out(ix.states.size(), Rational(0));
    for (const auto& [st, c] : v.terms()) {
        const std::size_t i = ix.at(st, extend);
        if (i >= out.size()) out.resize(ix.states.size(), Rational(0));
        out[i] = c;
    }
    out.resize(ix.states.size(), Rational(0));
    return out;
}

/// Kernel of the linear map b -> constraint(b) over a span of vectors,
/// returned as combinations of the span.
std::vector<FockVector> constrained_span(
    const std::vector<FockVector>& span,
    const std::vector<std::function<FockVector(const FockVector&)>>& constraints) {
    StateIndex ix;
    std::vector<Vec> cols;
    for (const auto& b : span) {
        Vec col;
        for (const auto& f : constraints) {
            const Vec part = coords(f(b), ix, true);
            col.insert(col.end(), part.begin(), part.end());
        }
        cols.push_back(std::move(col));
    }
    // pad all columns to the final row count, respecting per-constraint
    // blocks: recompute cleanly now that the index is stable
    cols.clear();
    for (const auto& b : span) {
        Vec col;
        for (const auto& f : constraints) {
            const Vec part = coords(f(b), ix, false);
            col.insert(col.end(), part.begin(), part.end());
        }
        cols.push_back(std::move(col));
    }
    const std::size_t rows = cols.empty() ? 0 : cols[0].size();
    Mat m(rows, Vec(span.size(), Rational(0)));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) m[i][j] = cols[j][i];
    std::vector<FockVector> out;
    for (const auto& ker : nullspace(m, span.size())) {
        FockVector v;
        for (std::size_t j = 0; j < span.size(); ++j) v.add_scaled(span[j], ker[j]);
        out.push_back(std::move(v));
    }
    return out;
}

/// Solves sum_j c_j span_j = target exactly; nullopt when target is
/// outside the span.
std::optional<Vec> decompose_in(const std::vector<FockVector>& span, const FockVector& target) {
    StateIndex ix;
    for (const auto& b : span) (void)coords(b, ix, true);
    for (const auto& [st, c] : target.terms()) {
        (void)c;
        if (!ix.index.count(st)) return std::nullopt;
    }
    Mat m(ix.states.size(), Vec(span.size(), Rational(0)));
    for (std::size_t j = 0; j < span.size(); ++j) {
        const Vec col = coords(span[j], ix, false);
        for (std::size_t i = 0; i < col.size(); ++i) m[i][j] = col[i];
    }
    Vec rhs = coords(target, ix, false);
    auto sol = solve(m, rhs);
    if (!sol) return std::nullopt;
    // verify exactly (solve leaves free variables at zero)
    FockVector recon;
    for (std::size_t j = 0; j < span.size(); ++j) recon.add_scaled(span[j], (*sol)[j]);
    if (recon != target) return std::nullopt;
    return sol;
}

/// Candidate w2 solutions of v_1 v = 2v over v = alpha u + beta d, where
/// u_1 u = 2u, u_1 d = 2d, d_1 d = p u + q d.
std::vector<std::pair<Rational, Rational>> idempotent_coefficients(const Rational& p,
                                                                   const Rational& q) {
    std::vector<std::pair<Rational, Rational>> out;
    // beta = 0: 2 alpha^2 = 2 alpha
    out.emplace_back(Rational(1), Rational(0));
    if (q != 0) {
        // 4 alpha + q beta = 2, then 2 alpha^2 + p beta^2 = 2 alpha
        const Rational pq2 = 16 * p / (q * q);
        const Rational A = 2 + pq2, B = -2 - pq2, C = 4 * p / (q * q);
        if (A == 0) {
            if (B != 0) {
                const Rational alpha = -C / B;
                out.emplace_back(alpha, (2 - 4 * alpha) / q);
            }
        } else {
            const Rational disc = B * B - 4 * A * C;
            if (auto root = rational_sqrt(disc)) {
                const Rational neg = -*root;
                for (const Rational& s : {*root, neg}) {
                    const Rational alpha = (-B + s) / (2 * A);
                    const Rational beta = (2 - 4 * alpha) / q;
                    if (beta != 0) out.emplace_back(alpha, beta);
                }
            }
        }
    } else if (p != 0) {
        // alpha = 1/2, beta^2 = 1/(2p)
        if (auto root = rational_sqrt(Rational(1) / (2 * p))) {
            out.emplace_back(Rational(1, 2), *root);
            out.emplace_back(Rational(1, 2), -*root);
        }
    }
    return out;
}

/// Positive divisors of |n| by trial division (inputs here are tiny).
std::vector<BigInt> divisors(BigInt n) {
    if (n < 0) n = -n;
    std::vector<BigInt> out;
    for (BigInt i = 1; i * i <= n; ++i) {
        if (n % i != 0) continue;
        out.push_back(i);
        if (i * i != n) out.push_back(n / i);
    }
    return out;
}

/// All rational roots of c3 s^3 + c2 s^2 + c1 s + c0 = 0.  The caller
/// handles the identically-zero polynomial separately.
std::vector<Rational> cubic_rational_roots(const Rational& c3, const Rational& c2,
                                           const Rational& c1, const Rational& c0) {
    std::vector<Rational> roots;
    auto push = [&roots](const Rational& r) {
        if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    };
    if (c3 == 0) {
        if (c2 == 0) {
            if (c1 != 0) push(-c0 / c1);
        } else if (auto root = rational_sqrt(c1 * c1 - 4 * c2 * c0)) {
            push((-c1 + *root) / (2 * c2));
            push((-c1 - *root) / (2 * c2));
        }
        return roots;
    }
    if (c0 == 0) {
        push(Rational(0));
        for (const auto& r : cubic_rational_roots(Rational(0), c3, c2, c1)) push(r);
        return roots;
    }
    // clear denominators, then test candidates +-p/q with p | n0, q | n3
    const BigInt lcm = boost::multiprecision::lcm(
        boost::multiprecision::lcm(den(c3), den(c2)), boost::multiprecision::lcm(den(c1), den(c0)));
    const BigInt n3 = num(c3 * lcm), n0 = num(c0 * lcm);
    for (const BigInt& p : divisors(n0))
        for (const BigInt& q : divisors(n3))
            for (int sg : {1, -1}) {
                const Rational s = Rational(p * sg) / Rational(q);
                if (((c3 * s + c2) * s + c1) * s + c0 == 0) push(s);
            }
    return roots;
}

}  // namespace

std::array<ConformalVector, 3> conformal_triple_search(const Lattice& lat) {
    if (lat.gram != sqrt2_a2().gram)
        throw std::invalid_argument("conformal_triple_search supports the default lattice only");

    const FockVector omega = virasoro_vector(lat);
    const FockVector vac = FockVector::vacuum(2);
    const std::vector<FockState> deg2 = graded_basis(lat, coset_rep(0), 2);
    std::vector<FockVector> deg2_basis;
    for (const auto& st : deg2) {
        FockVector b;
        b.add_term(st, 1);
        deg2_basis.push_back(std::move(b));
    }

    std::string failure = "no candidate with charge 7/10 found; charges seen:";
    for (const Rational sign : {Rational(-1), Rational(1)}) {
        // seed: (1/16) x(-1)^2 e^0 +- (1/4)(e^x + e^{-x})
        FockVector w1;
        {
            CosetVector xv = {Rational(1), Rational(0)};
            w1.add_scaled(heisenberg_mode(lat, xv, -1, heisenberg_mode(lat, xv, -1, vac)),
                          Rational(1, 16));
            w1.add_scaled(FockVector::exponential({Rational(1), Rational(0)}), sign / 4);
            w1.add_scaled(FockVector::exponential({Rational(-1), Rational(0)}), sign / 4);
        }
        if (conformal_check(lat, w1) != std::make_pair(true, Rational(1, 2))) continue;

        // commutant of w1 in degree 2: (w1)_n b = 0 for n = 0..4
        std::vector<std::function<FockVector(const FockVector&)>> comm;
        for (long n = 0; n <= 4; ++n)
            comm.emplace_back([&lat, &w1, n](const FockVector& b) {
                return vertex_mode(lat, w1, Rational(n), b);
            });
        const auto commutant = constrained_span(deg2_basis, comm);

        // intersect with invariance under nu: a -> -a and psi: x -> x,
        // y -> -x-y
        const std::array<std::array<long, 2>, 2> NU = {{{-1, 0}, {0, -1}}};
        const std::array<std::array<long, 2>, 2> PSI = {{{1, -1}, {0, -1}}};
        std::vector<std::function<FockVector(const FockVector&)>> sym = {
            [&NU](const FockVector& b) { return apply_lattice_map(b, NU) - b; },
            [&PSI](const FockVector& b) { return apply_lattice_map(b, PSI) - b; },
        };
        const auto slice = constrained_span(commutant, sym);
        if (slice.empty() || slice.size() > 3) continue;

        const FockVector u = omega - w1;
        if (!decompose_in(slice, u)) continue;
        if (griess_product(lat, u, u) != u * 2) continue;

        // split v = alpha u + w against the invariant pairing
        // <x,y> = constant coefficient of x_3 y; W = u-orthogonal part
        const FockState vac_state{{}, {Rational(0), Rational(0)}};
        auto pairing = [&](const FockVector& x, const FockVector& y) {
            return vertex_mode(lat, x, Rational(3), y).coeff(vac_state);
        };
        const Rational uu = pairing(u, u);
        if (uu == 0) continue;
        std::vector<FockVector> wbasis;
        for (const auto& s : slice) {
            FockVector w = s - u * (pairing(u, s) / uu);
            if (w.is_zero() || decompose_in(wbasis, w)) continue;
            if (griess_product(lat, u, w) != w * 2) continue;
            wbasis.push_back(std::move(w));
        }

        // directions w in W with the W-part of w_1 w parallel to w
        std::vector<FockVector> dirs;
        if (wbasis.size() == 1) {
            dirs.push_back(wbasis[0]);
        } else if (wbasis.size() == 2) {
            const FockVector &wa = wbasis[0], &wb = wbasis[1];
            const std::vector<FockVector> uab = {u, wa, wb};
            const auto paa = decompose_in(uab, griess_product(lat, wa, wa));
            const auto pab = decompose_in(uab, griess_product(lat, wa, wb));
            const auto pbb = decompose_in(uab, griess_product(lat, wb, wb));
            if (!paa || !pab || !pbb) continue;
            // for w = s wa + t wb, the parallel condition is the binary
            // cubic t X(s,t) - s Y(s,t) = 0, X/Y the wa/wb components of
            // w_1 w
            const Rational c3 = -(*paa)[2];
            const Rational c2 = (*paa)[1] - 2 * (*pab)[2];
            const Rational c1 = 2 * (*pab)[1] - (*pbb)[2];
            const Rational c0 = (*pbb)[1];
            if (c3 == 0 && c2 == 0 && c1 == 0 && c0 == 0) continue;
            if (c3 == 0) dirs.push_back(wa);  // the root at t = 0
            for (const auto& s : cubic_rational_roots(c3, c2, c1, c0))
                dirs.push_back(wa * s + wb);
        } else {
            continue;
        }

        std::vector<std::pair<FockVector, Vec>> found;  // (w2, coords for tie-break)
        for (const auto& w0 : dirs) {
            const auto pq = decompose_in({u, w0}, griess_product(lat, w0, w0));
            if (!pq) continue;
            for (const auto& [alpha, beta] : idempotent_coefficients((*pq)[0], (*pq)[1])) {
                FockVector cand = u * alpha + w0 * beta;
                const auto [ok, charge] = conformal_check(lat, cand);
                if (!ok) continue;
                if (charge != Rational(7, 10)) {
                    failure += " " + to_string(charge);
                    continue;
                }
                Vec cv(deg2.size(), Rational(0));
                for (std::size_t i = 0; i < deg2.size(); ++i) cv[i] = cand.coeff(deg2[i]);
                found.emplace_back(std::move(cand), std::move(cv));
            }
        }
        if (found.empty()) continue;
        std::sort(found.begin(), found.end(),
                  [](const auto& a, const auto& b) { return a.second < b.second; });
        const FockVector& w2 = found.front().first;
        const FockVector w3 = omega - w1 - w2;

        const auto [ok3, c3] = conformal_check(lat, w3);
        if (!ok3 || c3 != Rational(4, 5))
            throw ConformalSearchError("residual vector has charge " + to_string(c3));
        if (!griess_product(lat, w1, w2).is_zero() || !griess_product(lat, w1, w3).is_zero() ||
            !griess_product(lat, w2, w3).is_zero())
            throw ConformalSearchError("triple not pairwise orthogonal");
        return {ConformalVector{w1, Rational(1, 2)}, ConformalVector{w2, Rational(7, 10)},
                ConformalVector{w3, Rational(4, 5)}};
    }
    throw ConformalSearchError(failure);
}

std::optional<std::array<Rational, 3>> l0_eigentriple(
    const Lattice& lat, const FockVector& v, const std::array<ConformalVector, 3>& triple) {
    if (v.is_zero()) return std::nullopt;
    std::array<Rational, 3> out;
    for (int i = 0; i < 3; ++i) {
        const FockVector r = vertex_mode(lat, triple[i].vector, 1, v);
        Rational h = 0;
        if (!r.is_zero()) {
            const auto& [st0, c0] = *r.terms().begin();
            const Rational base = v.coeff(st0);
            if (base == 0) return std::nullopt;
            h = c0 / base;
        }
        if (r != v * h) return std::nullopt;
        out[i] = h;
    }
    return out;
}

std::pair<bool, Rational> highest_weight_check(const Lattice& lat, const ConformalVector& e,
                                               const FockVector& v) {
    if (v.is_zero()) return {false, 0};
    Rational dmax = 0;
    for (const auto& [st, c] : v.terms()) {
        (void)c;
        dmax = std::max(dmax, st.degree(lat));
    }
    const long bound = rational_floor(dmax).convert_to<long>() + 2;
    for (long n = 2; n <= bound; ++n)
        if (!vertex_mode(lat, e.vector, Rational(n), v).is_zero()) return {false, 0};
    const FockVector r = vertex_mode(lat, e.vector, 1, v);
    const auto& [st0, c0] = *v.terms().begin();
    (void)c0;
    const Rational h = r.coeff(st0) / v.coeff(st0);
    if (r != v * h) return {false, 0};
    return {true, h};
}

}  // namespace potts::fock
