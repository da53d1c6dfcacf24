#include "potts/fock/evidence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace potts::fock {

namespace {

/// All coset points rep + L with half-norm <= bound, via the coordinate
/// box |c_i| <= sqrt(2 bound (gram^{-1})_{ii}).
std::vector<CosetVector> coset_points(const Lattice& lat, const CosetVector& rep,
                                      const Rational& bound) {
    std::vector<long> box(lat.rank);
    for (std::size_t i = 0; i < lat.rank; ++i) {
        const double b = std::sqrt(2.0 * num(bound).convert_to<double>() /
                                   den(bound).convert_to<double>() *
                                   num(lat.gram_inv[i][i]).convert_to<double>() /
                                   den(lat.gram_inv[i][i]).convert_to<double>());
        box[i] = static_cast<long>(std::ceil(b)) + 1;
    }
    std::vector<CosetVector> out;
    std::vector<long> offs(lat.rank, 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == lat.rank) {
            CosetVector v(lat.rank);
            for (std::size_t j = 0; j < lat.rank; ++j) v[j] = rep[j] + offs[j];
            if (lat.half_norm(v) <= bound) out.push_back(std::move(v));
            return;
        }
        for (long o = -box[i] - 1; o <= box[i]; ++o) {
            offs[i] = o;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

/// All sorted mode multisets with total level `rem`, in non-increasing
/// (axis, level) order during generation for canonical uniqueness.
void mode_multisets(std::size_t rank, long rem, std::vector<Mode>& cur,
                    std::vector<std::vector<Mode>>& out) {
    if (rem == 0) {
        out.push_back(cur);
        return;
    }
    const Mode limit = cur.empty() ? Mode{static_cast<int>(rank) - 1, rem} : cur.back();
    for (int ax = limit.axis; ax >= 0; --ax) {
        const long top = ax == limit.axis ? std::min(rem, limit.level) : rem;
        for (long lev = top; lev >= 1; --lev) {
            cur.push_back(Mode{ax, lev});
            mode_multisets(rank, rem - lev, cur, out);
            cur.pop_back();
        }
    }
}

}  // namespace

std::vector<FockState> graded_basis(const Lattice& lat, const CosetVector& rep,
                                    const Rational& degree) {
    std::vector<FockState> out;
    for (auto& p : coset_points(lat, rep, degree)) {
        const Rational rem = degree - lat.half_norm(p);
        if (rem < 0 || !is_integer(rem)) continue;
        std::vector<std::vector<Mode>> multisets;
        std::vector<Mode> cur;
        mode_multisets(lat.rank, num(rem).convert_to<long>(), cur, multisets);
        for (auto& ms : multisets) {
            std::sort(ms.begin(), ms.end());
            out.push_back(FockState{std::move(ms), p});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<EigenComponent> simultaneous_eigenspaces(const Lattice& lat,
                                                     const std::array<ConformalVector, 3>& triple,
                                                     const CosetVector& rep,
                                                     const Rational& degree) {
    const std::vector<FockState> basis = graded_basis(lat, rep, degree);
    const std::size_t n = basis.size();
    std::array<Mat, 3> mats;
    for (int w = 0; w < 3; ++w) {
        mats[w] = Mat(n, Vec(n, Rational(0)));
        for (std::size_t j = 0; j < n; ++j) {
            FockVector b;
            b.add_term(basis[j], 1);
            const FockVector r = vertex_mode(lat, triple[w].vector, 1, b);
            for (const auto& [st, c] : r.terms()) {
                const auto it = std::lower_bound(basis.begin(), basis.end(), st);
                if (it == basis.end() || *it != st)
                    throw std::logic_error("mode action left the graded piece");
                mats[w][static_cast<std::size_t>(it - basis.begin())][j] = c;
            }
        }
    }

    const std::vector<Rational> h1s = {Rational(0), Rational(1, 2), Rational(1, 16)};
    const std::vector<Rational> h3s = {Rational(0),     Rational(3),      Rational(2, 5),
                                       Rational(7, 5),  Rational(2, 3),   Rational(1, 15),
                                       Rational(1, 8),  Rational(13, 8),  Rational(1, 40),
                                       Rational(21, 40)};
    std::vector<Rational> cands1, cands3;
    for (const auto& h : h1s)
        for (long k = 0; Rational(k) + h <= degree + 1; ++k) cands1.push_back(h + k);
    for (const auto& h : h3s)
        for (long k = 0; Rational(k) + h <= degree + 1; ++k) cands3.push_back(h + k);
    std::sort(cands1.begin(), cands1.end());
    cands1.erase(std::unique(cands1.begin(), cands1.end()), cands1.end());
    std::sort(cands3.begin(), cands3.end());
    cands3.erase(std::unique(cands3.begin(), cands3.end()), cands3.end());

    std::vector<EigenComponent> out;
    std::size_t total = 0;
    for (const auto& l1 : cands1) {
        for (const auto& l3 : cands3) {
            Mat stacked(2 * n, Vec(n, Rational(0)));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    stacked[i][j] = mats[0][i][j] - (i == j ? l1 : Rational(0));
                    stacked[n + i][j] = mats[2][i][j] - (i == j ? l3 : Rational(0));
                }
            auto ker = nullspace(stacked, n);
            if (ker.empty()) continue;
            const Rational l2 = degree - l1 - l3;
            for (const auto& v : ker) {
                const Vec mv = mat_vec(mats[1], v);
                for (std::size_t i = 0; i < n; ++i)
                    if (mv[i] != l2 * v[i])
                        throw std::logic_error("middle eigenvalue inconsistent");
            }
            total += ker.size();
            out.push_back(EigenComponent{{l1, l2, l3}, std::move(ker)});
        }
    }
    if (total != n) throw std::logic_error("eigenspaces do not exhaust the graded piece");
    return out;
}

namespace {

Rational frac_part(const Rational& r) { return r - Rational(rational_floor(r)); }

/// Classify a homogeneous vector into its (coset representative, degree);
/// throws std::invalid_argument for mixed input.
std::pair<CosetVector, Rational> classify_piece(const Lattice& lat, const FockVector& v) {
    std::optional<Rational> degree;
    std::optional<CosetVector> frac;
    for (const auto& [st, c] : v.terms()) {
        (void)c;
        const Rational d = st.degree(lat);
        CosetVector f(lat.rank);
        for (std::size_t i = 0; i < lat.rank; ++i) f[i] = frac_part(st.exponent[i]);
        if (!degree) {
            degree = d;
            frac = f;
        } else if (*degree != d || *frac != f) {
            throw std::invalid_argument("vector is not homogeneous within one coset piece");
        }
    }
    return {*frac, *degree};
}

}  // namespace

bool fusion_evidence(const Lattice& lat, const FockVector& u, const FockVector& v,
                     const Rational& n, const std::array<Rational, 3>& target,
                     const std::array<ConformalVector, 3>& triple, const Cutoff& cutoff) {
    const FockVector r = vertex_mode(lat, u, n, v, cutoff);
    if (r.is_zero()) return false;
    const auto [rep, degree] = classify_piece(lat, r);
    const std::vector<FockState> basis = graded_basis(lat, rep, degree);
    const std::size_t nn = basis.size();
    const auto spaces = simultaneous_eigenspaces(lat, triple, rep, degree);

    // full eigenbasis and the coordinates of r in it
    Mat eig(nn, Vec(nn, Rational(0)));
    std::vector<const EigenComponent*> col_comp;
    std::size_t col = 0;
    for (const auto& comp : spaces)
        for (const auto& vec : comp.vectors) {
            for (std::size_t i = 0; i < nn; ++i) eig[i][col] = vec[i];
            col_comp.push_back(&comp);
            ++col;
        }
    Vec rhs(nn, Rational(0));
    for (std::size_t i = 0; i < nn; ++i) {
        const auto it = r.terms().find(basis[i]);
        if (it != r.terms().end()) rhs[i] = it->second;
    }
    const auto coords = solve(eig, rhs);
    if (!coords) throw std::logic_error("eigenbasis does not span the graded piece");
    Vec proj(nn, Rational(0));
    for (std::size_t j = 0; j < nn; ++j) {
        if (col_comp[j]->triple != target) continue;
        for (std::size_t i = 0; i < nn; ++i) proj[i] += (*coords)[j] * eig[i][j];
    }
    for (const auto& c : proj)
        if (c != 0) return true;
    return false;
}

std::vector<EvidenceOutcome> compute_evidence_items(const Lattice& lat,
                                                    const std::array<ConformalVector, 3>& triple,
                                                    const Cutoff& cutoff) {
    const FockVector vac = FockVector::vacuum(2);
    const FockVector t2gen =
        heisenberg_mode(lat, {Rational(1), Rational(2)}, -1, vac);  // (x+2y)(-1) e^0
    const auto ex = [](const Rational& a, const Rational& b) {
        return FockVector::exponential({a, b});
    };
    const FockVector e1 = ex({1, 3}, {2, 3}), e2 = ex({1, 3}, {-1, 3}), e3 = ex({-2, 3}, {-1, 3});
    const FockVector f1 = ex({-1, 3}, {-2, 3}), f2 = ex({-1, 3}, {1, 3}), f3 = ex({2, 3}, {1, 3});
    const FockVector s = e1 + e2 + e3;
    const FockVector d = e1 * 2 - e2 - e3;
    const FockVector sm = f1 + f2 + f3;
    const FockVector dm = f1 * 2 - f2 - f3;

    const std::array<Rational, 3> T0 = {0, 0, 0};
    const std::array<Rational, 3> T25 = {Rational(0), Rational(3, 5), Rational(7, 5)};
    const std::array<Rational, 3> T115 = {Rational(0), Rational(3, 5), Rational(1, 15)};
    const std::array<Rational, 3> T23 = {Rational(0), Rational(0), Rational(2, 3)};

    struct Comp {
        const FockVector* u;
        const FockVector* v;
        Rational n;
        std::array<Rational, 3> target;
        std::array<std::string, 3> labels;
    };
    struct Item {
        const char* id;
        std::vector<Comp> comps;
    };
    const std::vector<Item> items = {
        {"2.1",
         {{&vac, &vac, Rational(-1), T0, {"W(0)", "W(0)", "W(0)"}},
          {&t2gen, &t2gen, Rational(1), T0, {"W(2/5)", "W(2/5)", "W(0)"}},
          {&s, &sm, Rational(1, 3), T0, {"W(2/3,+)", "W(2/3,-)", "W(0)"}},
          {&d, &dm, Rational(1, 3), T0, {"W(1/15,+)", "W(1/15,-)", "W(0)"}}}},
        {"2.2", {{&t2gen, &t2gen, Rational(-1), T25, {"W(2/5)", "W(2/5)", "W(2/5)"}}}},
        {"2.3", {{&t2gen, &s, Rational(0), T115, {"W(2/5)", "W(2/3,+)", "W(1/15,+)"}}}},
        {"2.4", {{&t2gen, &d, Rational(0), T115, {"W(2/5)", "W(1/15,+)", "W(1/15,+)"}}}},
        {"2.5", {{&t2gen, &sm, Rational(0), T115, {"W(2/5)", "W(2/3,-)", "W(1/15,-)"}}}},
        {"2.6", {{&t2gen, &dm, Rational(0), T115, {"W(2/5)", "W(1/15,-)", "W(1/15,-)"}}}},
        {"2.7",
         {{&s, &s, Rational(-1, 3), T23, {"W(2/3,+)", "W(2/3,+)", "W(2/3,-)"}},
          {&sm, &sm, Rational(-1, 3), T23, {"W(2/3,-)", "W(2/3,-)", "W(2/3,+)"}}}},
        {"2.8",
         {{&s, &d, Rational(-1, 3), T115, {"W(2/3,+)", "W(1/15,+)", "W(1/15,-)"}},
          {&d, &d, Rational(-1, 3), T23, {"W(1/15,+)", "W(1/15,+)", "W(2/3,-)"}},
          {&sm, &dm, Rational(-1, 3), T115, {"W(2/3,-)", "W(1/15,-)", "W(1/15,+)"}},
          {&dm, &dm, Rational(-1, 3), T23, {"W(1/15,-)", "W(1/15,-)", "W(2/3,+)"}}}},
        {"2.9",
         {{&d, &d, Rational(-1, 3), T115, {"W(1/15,+)", "W(1/15,+)", "W(1/15,-)"}},
          {&dm, &dm, Rational(-1, 3), T115, {"W(1/15,-)", "W(1/15,-)", "W(1/15,+)"}}}},
    };

    std::vector<EvidenceOutcome> out;
    for (const auto& item : items) {
        EvidenceOutcome o;
        o.id = item.id;
        o.established = true;
        for (const auto& comp : item.comps) {
            o.triples.push_back(comp.labels);
            if (!fusion_evidence(lat, *comp.u, *comp.v, comp.n, comp.target, triple, cutoff))
                o.established = false;
        }
        out.push_back(std::move(o));
    }
    return out;
}

}  // namespace potts::fock
