#include "potts/fock/vertex.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace potts::fock {

namespace {

CosetVector basis_vector(const Lattice& lat, int axis) {
    CosetVector v(lat.rank, Rational(0));
    v[axis] = 1;
    return v;
}

CosetVector vec_add(const CosetVector& a, const CosetVector& b) {
    CosetVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

/// All partitions of n, parts descending.
std::vector<std::vector<long>> partitions(long n) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    auto gen = [&](auto&& self, long rem, long maxp) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (long p = std::min(rem, maxp); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    gen(gen, n, n);
    return out;
}

/// 1 / (prod_p p^{c_p} c_p!) over the part multiplicities c_p.
Rational sym_factor(const std::vector<long>& parts) {
    std::map<long, long> mult;
    for (long p : parts) ++mult[p];
    Rational f = 1;
    for (const auto& [p, c] : mult) {
        for (long i = 0; i < c; ++i) f /= Rational(p) * Rational(i + 1);
    }
    return f;
}

/// binom(m+i-1, i) as a rational.
Rational binom_neg(long m, long i) {
    Rational r = 1;
    for (long k = 0; k < i; ++k) r = r * Rational(m + i - 1 - k) / Rational(k + 1);
    return r;
}

/// Coefficient of z^k in exp(sum_{p>0} a(-p)/p z^p) applied to v.
FockVector exp_minus(const Lattice& lat, const CosetVector& a, long k, const FockVector& v) {
    FockVector out;
    for (const auto& parts : partitions(k)) {
        FockVector w = v;
        for (long p : parts) w = heisenberg_mode(lat, a, -p, w);
        out.add_scaled(w, sym_factor(parts));
    }
    return out;
}

/// Coefficient of z^{-j} in exp(sum_{p>0} a(p)/(-p) z^{-p}) applied to v.
FockVector exp_plus(const Lattice& lat, const CosetVector& a, long j, const FockVector& v) {
    FockVector out;
    for (const auto& parts : partitions(j)) {
        FockVector w = v;
        for (long p : parts) {
            w = heisenberg_mode(lat, a, p, w);
            if (w.is_zero()) break;
        }
        if (w.is_zero()) continue;
        const Rational sgn = parts.size() % 2 ? -1 : 1;
        out.add_scaled(w, sym_factor(parts) * sgn);
    }
    return out;
}

FockVector exp_mode_raw(const Lattice& lat, const CosetVector& a, const Rational& n,
                        const FockVector& v) {
    FockVector out;
    for (const auto& [st, c] : v.terms()) {
        const Rational tb = lat.inner(a, st.exponent);
        const long tl = st.total_level();
        FockVector term;
        term.add_term(st, c);
        for (long j = 0; j <= tl; ++j) {
            FockVector u = exp_plus(lat, a, j, term);
            if (u.is_zero()) continue;
            FockVector shifted;
            for (const auto& [st2, c2] : u.terms())
                shifted.add_term(FockState{st2.modes, vec_add(st2.exponent, a)}, c2);
            const Rational k = -n - 1 - tb + Rational(j);
            if (k < 0 || !is_integer(k)) continue;
            out.add_scaled(exp_minus(lat, a, num(k).convert_to<long>(), shifted), 1);
        }
    }
    return out;
}

FockVector vertex_state(const Lattice& lat, const FockState& st, const Rational& n,
                        const FockVector& v);

FockVector vertex_term(const Lattice& lat, const FockState& st, const Rational& n,
                       const FockState& vst, const Rational& vc) {
    FockVector v1;
    v1.add_term(vst, vc);
    if (st.modes.empty()) {
        bool zero_exp = true;
        for (const auto& c : st.exponent)
            if (c != 0) zero_exp = false;
        if (zero_exp) return n == -1 ? v1 : FockVector{};
        return exp_mode_raw(lat, st.exponent, n, v1);
    }
    const Mode head = st.modes.front();
    const CosetVector a = basis_vector(lat, head.axis);
    const long m = head.level;
    FockState w{std::vector<Mode>(st.modes.begin() + 1, st.modes.end()), st.exponent};
    const Rational dw = w.degree(lat);
    const Rational dv = vst.degree(lat);

    FockVector out;
    // first sum: binom(m+i-1,i) a(-m-i) (w_{n+i} v), bounded because
    // w_{n+i} v vanishes once its degree drops below the coset minimum
    const Rational imax = dw + dv - n - 1;
    for (long i = 0; Rational(i) <= imax; ++i) {
        const FockVector r = vertex_state(lat, w, n + Rational(i), v1);
        if (!r.is_zero()) out.add_scaled(heisenberg_mode(lat, a, -m - i, r), binom_neg(m, i));
    }
    // second sum: -(-1)^m binom(m+i-1,i) w_{n-m-i} (a(i) v), bounded by
    // the highest creation level present in v
    const Rational sgn = m % 2 ? 1 : -1;
    const long maxlev = vst.total_level();
    for (long i = 0; i <= maxlev; ++i) {
        const FockVector av = heisenberg_mode(lat, a, i, v1);
        if (av.is_zero()) continue;
        const FockVector r = vertex_state(lat, w, n - Rational(m) - Rational(i), av);
        if (!r.is_zero()) out.add_scaled(r, sgn * binom_neg(m, i));
    }
    return out;
}

FockVector vertex_state(const Lattice& lat, const FockState& st, const Rational& n,
                        const FockVector& v) {
    FockVector out;
    for (const auto& [vst, vc] : v.terms()) out.add_scaled(vertex_term(lat, st, n, vst, vc), 1);
    return out;
}

void check_cutoff(const Lattice& lat, const FockState& ust, const Rational& n,
                  const FockVector& v, const Cutoff& cutoff) {
    if (!cutoff) return;
    const Rational du = ust.degree(lat);
    for (const auto& [vst, vc] : v.terms()) {
        (void)vc;
        const Rational d = du + vst.degree(lat) - n - 1;
        if (d > *cutoff)
            throw TruncationError("mode result at degree " + to_string(d) +
                                  " exceeds cutoff " + to_string(*cutoff));
    }
}

}  // namespace

FockVector heisenberg_mode(const Lattice& lat, const CosetVector& a, long n,
                           const FockVector& v) {
    FockVector out;
    for (const auto& [st, c] : v.terms()) {
        if (n < 0) {
            for (std::size_t ax = 0; ax < lat.rank; ++ax) {
                if (a[ax] == 0) continue;
                FockState ns = st;
                const Mode mode{static_cast<int>(ax), -n};
                ns.modes.insert(std::upper_bound(ns.modes.begin(), ns.modes.end(), mode), mode);
                out.add_term(ns, c * a[ax]);
            }
        } else if (n == 0) {
            out.add_term(st, c * lat.inner(a, st.exponent));
        } else {
            for (std::size_t i = 0; i < st.modes.size(); ++i) {
                if (st.modes[i].level != n) continue;
                FockState ns = st;
                ns.modes.erase(ns.modes.begin() + static_cast<long>(i));
                out.add_term(ns, c * Rational(n) *
                                     lat.inner(a, basis_vector(lat, st.modes[i].axis)));
            }
        }
    }
    return out;
}

FockVector exp_mode(const Lattice& lat, const CosetVector& a, const Rational& n,
                    const FockVector& v, const Cutoff& cutoff) {
    check_cutoff(lat, FockState{{}, a}, n, v, cutoff);
    return exp_mode_raw(lat, a, n, v);
}

FockVector vertex_mode(const Lattice& lat, const FockVector& u, const Rational& n,
                       const FockVector& v, const Cutoff& cutoff) {
    FockVector out;
    for (const auto& [ust, uc] : u.terms()) {
        check_cutoff(lat, ust, n, v, cutoff);
        for (const auto& [vst, vc] : v.terms())
            out.add_scaled(vertex_term(lat, ust, n, vst, vc), uc);
    }
    return out;
}

FockVector virasoro_vector(const Lattice& lat) {
    const FockVector vac = FockVector::vacuum(lat.rank);
    FockVector omega;
    for (std::size_t i = 0; i < lat.rank; ++i)
        for (std::size_t j = 0; j < lat.rank; ++j) {
            const auto t = heisenberg_mode(lat, basis_vector(lat, static_cast<int>(i)), -1,
                                           heisenberg_mode(lat, basis_vector(lat, static_cast<int>(j)), -1, vac));
            omega.add_scaled(t, lat.gram_inv[i][j] / 2);
        }
    return omega;
}

FockVector griess_product(const Lattice& lat, const FockVector& u, const FockVector& v) {
    return vertex_mode(lat, u, 1, v);
}

std::pair<bool, Rational> conformal_check(const Lattice& lat, const FockVector& e) {
    if (e.is_zero()) return {false, 0};
    if (vertex_mode(lat, e, 1, e) - e * 2 != FockVector{}) return {false, 0};
    if (!vertex_mode(lat, e, 2, e).is_zero()) return {false, 0};
    const FockVector r3 = vertex_mode(lat, e, 3, e);
    Rational c = 0;
    for (const auto& [st, cf] : r3.terms()) {
        if (!st.modes.empty()) return {false, 0};
        for (const auto& x : st.exponent)
            if (x != 0) return {false, 0};
        c = 2 * cf;
    }
    for (long n = 4; n <= 7; ++n)
        if (!vertex_mode(lat, e, n, e).is_zero()) return {false, 0};
    return {true, c};
}

}  // namespace potts::fock
