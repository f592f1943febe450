#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "wzw/autoeq.hpp"
#include "wzw/fusion.hpp"
#include "wzw/modular.hpp"
#include "wzw/simple_current.hpp"

namespace wzw {

// ---------------------------------------------------------------------------
// Charge conjugation (type A): lambda_i -> lambda_{r+1-i}.
// ---------------------------------------------------------------------------

inline std::vector<int> charge_conjugation(const FusionRing& ring) {
    if (ring.spec.family != Family::A) throw UsageError("charge conjugation is a type A construction");
    std::vector<int> pi(ring.n);
    for (int i = 0; i < ring.n; ++i) {
        Weight w = ring.basis[i];
        std::reverse(w.begin(), w.end());
        pi[i] = ring.index_of(w);
    }
    require_ring_automorphism(ring, pi, "charge conjugation");
    if (perm_compose(pi, pi) != perm_identity(ring.n))
        throw InvariantViolation("charge conjugation is not an involution");
    return pi;
}

// ---------------------------------------------------------------------------
// Level-rank transpose of C(sp_{2r}, r): partition transpose on Young diagrams
// mu_i = sum_{j>=i} lambda_j, with an exhaustive-search fallback.
// ---------------------------------------------------------------------------

struct TransposeResult {
    std::vector<int> perm;
    bool used_fallback = false;
};

inline TransposeResult sp_levelrank_transpose(const FusionRing& ring) {
    if (ring.spec.family != Family::C || ring.spec.rank != ring.spec.level || ring.spec.rank < 2)
        throw UsageError("level-rank transpose needs sp(2r) at level k = r >= 2");
    int r = ring.spec.rank;
    TransposeResult res;
    res.perm.assign(ring.n, -1);
    bool ok = true;
    for (int i = 0; i < ring.n && ok; ++i) {
        const Weight& lam = ring.basis[i];
        std::vector<int> mu(r, 0);
        for (int a = r - 1; a >= 0; --a) mu[a] = lam[a] + (a + 1 < r ? mu[a + 1] : 0);
        std::vector<int> mt(r, 0);  // transpose, at most r rows since mu_1 <= k = r
        for (int j = 0; j < r; ++j)
            for (int a = 0; a < r; ++a)
                if (mu[a] >= j + 1) ++mt[j];
        Weight out(r);
        for (int j = 0; j < r; ++j) out[j] = mt[j] - (j + 1 < r ? mt[j + 1] : 0);
        if (std::any_of(out.begin(), out.end(), [](int x) { return x < 0; })) {
            ok = false;
            break;
        }
        try {
            res.perm[i] = ring.index_of(out);
        } catch (const NotFound&) {
            ok = false;
        }
    }
    if (ok && is_ring_automorphism(ring, res.perm)) return res;

    // fallback: the unique non-identity automorphism fixing Lambda_1
    res.used_fallback = true;
    Weight l1(r, 0);
    l1[0] = 1;
    int idx1 = ring.index_of(l1);
    PermGroup all = enumerate_fusion_autos(ring);
    for (const auto& p : all.elems) {
        if (p[idx1] != idx1) continue;
        if (p == perm_identity(ring.n)) continue;
        res.perm = p;
        return res;
    }
    throw NotFound("no non-gauge automorphism fixing Lambda_1");
}

// ---------------------------------------------------------------------------
// so(2r+1) level 2: the hand presentation {1, Z, X1, X2, Y_i} and its label
// map onto the Kac-Walton ring.
// ---------------------------------------------------------------------------

struct SoLevel2 {
    FusionRing presentation;       // basis order: 1, Z, X1, X2, Y_1..Y_r
    std::vector<RationalPhase> twists;  // presentation-side closed-form twists
    std::vector<double> dims;
    std::vector<int> to_kw;        // presentation index -> KW basis index
};

inline int so2_fold(int j, int m) {
    j %= m;
    if (j < 0) j += m;
    return std::min(j, m - j);
}

inline FusionRing so_level2_presentation_ring(int r) {
    if (r < 2) throw UsageError("so(2r+1) level 2 presentation needs r >= 2");
    int m = 2 * r + 1;
    int n = r + 4;
    std::vector<std::string> names{"1", "Z", "X1", "X2"};
    for (int i = 1; i <= r; ++i) names.push_back("Y" + std::to_string(i));
    auto Y = [&](int i) { return 3 + i; };
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> tab;
    auto set = [&](int a, int b, std::vector<std::pair<int, int>> ch) {
        if (a > b) std::swap(a, b);
        tab[{a, b}] = std::move(ch);
    };
    for (int x = 0; x < n; ++x) set(0, x, {{x, 1}});
    set(1, 1, {{0, 1}});
    set(1, 2, {{3, 1}});
    set(1, 3, {{2, 1}});
    for (int i = 1; i <= r; ++i) set(1, Y(i), {{Y(i), 1}});
    std::vector<std::pair<int, int>> xsq{{0, 1}};
    for (int i = 1; i <= r; ++i) xsq.emplace_back(Y(i), 1);
    std::vector<std::pair<int, int>> xx{{1, 1}};
    for (int i = 1; i <= r; ++i) xx.emplace_back(Y(i), 1);
    set(2, 2, xsq);
    set(3, 3, xsq);
    set(2, 3, xx);
    // X (x) Y_i = X1 + X2 (forced by the Z-action and dimension count)
    for (int i = 1; i <= r; ++i) {
        set(2, Y(i), {{2, 1}, {3, 1}});
        set(3, Y(i), {{2, 1}, {3, 1}});
    }
    for (int i = 1; i <= r; ++i)
        for (int j = i; j <= r; ++j) {
            if (i == j) {
                set(Y(i), Y(i), {{0, 1}, {1, 1}, {Y(so2_fold(2 * i, m)), 1}});
            } else {
                int s = so2_fold(i + j, m), dlt = so2_fold(j - i, m);
                if (s == dlt) set(Y(i), Y(j), {{Y(s), 2}});
                else set(Y(i), Y(j), {{Y(s), 1}, {Y(dlt), 1}});
            }
        }
    return ring_from_table(names, 0, tab);
}

inline SoLevel2 so_level2_presentation(int r) {
    SoLevel2 out;
    out.presentation = so_level2_presentation_ring(r);
    int m = 2 * r + 1;
    int n = out.presentation.n;
    out.twists.assign(n, RationalPhase::zero());
    out.dims.assign(n, 1.0);
    out.twists[2] = RationalPhase(r, 8);
    out.twists[3] = RationalPhase(r, 8) + RationalPhase::half();
    out.dims[2] = out.dims[3] = std::sqrt(static_cast<double>(m));
    for (int i = 1; i <= r; ++i) {
        out.twists[3 + i] = RationalPhase(static_cast<long long>(i) * i * r, m);
        out.dims[3 + i] = 2.0;
    }

    AlgebraSpec spec{Family::B, r, 2};
    FusionRing kw = build_ring(spec);
    TwistTable tt = twist_table(kw);
    std::vector<double> kwdims = qdim_table(spec, kw.basis);
    // candidates must match the closed-form twist exactly and the dimension
    // within float tolerance
    std::vector<std::vector<int>> cand(n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < kw.n; ++q)
            if (tt.of(q) == out.twists[p] && std::abs(kwdims[q] - out.dims[p]) < 1e-6)
                cand[p].push_back(q);

    std::vector<int> map(n, -1), used(kw.n, 0);
    std::function<bool(int)> rec = [&](int p) -> bool {
        if (p == n) {
            // full ring isomorphism check
            for (int a = 0; a < n; ++a)
                for (int b = a; b < n; ++b)
                    for (auto [c, mult] : out.presentation.channels(a, b))
                        if (kw.N(map[a], map[b], map[c]) != mult) return false;
            return true;
        }
        for (int q : cand[p]) {
            if (used[q]) continue;
            map[p] = q;
            used[q] = 1;
            bool ok = true;
            for (int a = 0; a <= p && ok; ++a)
                for (auto [c, mult] : out.presentation.channels(a, p)) {
                    if (c > p) continue;
                    if (kw.N(map[a], map[p], map[c]) != mult) {
                        ok = false;
                        break;
                    }
                }
            if (ok && rec(p + 1)) return true;
            map[p] = -1;
            used[q] = 0;
        }
        return false;
    };
    if (!rec(0)) throw NoConsistentLabeling("no twist/dim-consistent ring isomorphism onto C(so_{2r+1},2)");
    out.to_kw = map;
    return out;
}

// Galois automorphism Y_i -> Y_{n i mod (2r+1)} (folded) on the presentation
// ring; fixes 1, Z, X1, X2.
inline std::vector<int> so_level2_galois(const FusionRing& presentation, int r, int n_unit) {
    int m = 2 * r + 1;
    if (std::gcd(n_unit, m) != 1) throw UsageError("Galois parameter must be a unit mod 2r+1");
    std::vector<int> pi(presentation.n);
    std::iota(pi.begin(), pi.end(), 0);
    for (int i = 1; i <= r; ++i) pi[3 + i] = 3 + so2_fold(n_unit * i, m);
    require_ring_automorphism(presentation, pi, "so level-2 Galois map");
    return pi;
}

inline bool so_level2_galois_twist_preserving(int r, int n_unit) {
    int m = 2 * r + 1;
    return (static_cast<long long>(n_unit) * n_unit - 1) % m == 0;
}

// The simple current of the boson Z: X moves by Z exactly on the spinor
// pieces (monodromy 1), i.e. X1 <-> X2 via fusion with Z, all else fixed.
inline std::vector<int> so_level2_xswap(const FusionRing& presentation) {
    std::vector<int> pi = perm_identity(presentation.n);
    for (int x : {2, 3}) {
        const auto& ch = presentation.channels(1, x);
        if (ch.size() != 1 || ch[0].second != 1) throw InvariantViolation("Z not invertible");
        pi[x] = ch[0].first;
    }
    require_ring_automorphism(presentation, pi, "X swap");
    return pi;
}

// ---------------------------------------------------------------------------
// Tambara-Yamagami TY(Z_m, chi, tau), chi(i,j) = phase(coeff * i * j / m).
// ---------------------------------------------------------------------------

struct TYCategory {
    int m = 1;                 // group order
    long long coeff = 1;       // chi(i,j) = e^{2 pi i coeff*i*j/m}
    int tau = +1;
    std::vector<std::vector<RationalPhase>> chi;  // exponent matrix

    static TYCategory cyclic(int m, long long coeff, int tau) {
        TYCategory ty;
        ty.m = m;
        ty.coeff = ((coeff % m) + m) % m;
        ty.tau = tau;
        ty.chi.assign(m, std::vector<RationalPhase>(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                ty.chi[i][j] = RationalPhase(static_cast<long long>(i) * j * ty.coeff, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                if (!(ty.chi[i][j] == ty.chi[j][i])) throw InvariantViolation("chi not symmetric");
                if (!(ty.chi[(i + 1) % m][j] == ty.chi[i][j] + ty.chi[1 % m][j]))
                    throw InvariantViolation("chi not a bicharacter");
            }
        return ty;
    }

    // the chi of the de-equivariantized so(2r+1) level 2 (m = 2r+1, coeff = r)
    static TYCategory so_level2(int r, int tau) { return cyclic(2 * r + 1, r, tau); }
};

// Units n with chi(n i, n j) = chi(i, j).
inline std::vector<int> ty_autgroup(const TYCategory& ty) {
    if (ty.m == 1) return {0};
    std::vector<int> out;
    for (int n = 1; n < ty.m; ++n) {
        if (std::gcd(n, ty.m) != 1) continue;
        bool ok = true;
        for (int i = 0; i < ty.m && ok; ++i)
            for (int j = 0; j < ty.m && ok; ++j)
                if (!(ty.chi[n * i % ty.m][n * j % ty.m] == ty.chi[i][j])) ok = false;
        if (ok) out.push_back(n);
    }
    return out;
}

// True iff i -> n i carries chi to chi^{-1}.
inline bool ty_chi_inverse_map(const TYCategory& ty, int n_unit) {
    if (ty.m > 1 && std::gcd(n_unit, ty.m) != 1) throw UsageError("n must be a unit mod m");
    for (int i = 0; i < ty.m; ++i)
        for (int j = 0; j < ty.m; ++j)
            if (!(ty.chi[n_unit * i % ty.m][n_unit * j % ty.m] == -ty.chi[i][j])) return false;
    return true;
}

// Pentagon check for the TY associator data (float, because of sqrt|G|).
inline bool ty_pentagon_check(const TYCategory& ty, double tol = 1e-9, int bound = 9) {
    if (ty.m > bound) throw BoundExceeded("pentagon check bound exceeded");
    using C = std::complex<double>;
    int m = ty.m;
    int M = m;  // label of the non-invertible object; group elements are 0..m-1
    auto is_grp = [&](int x) { return x < m; };
    auto fuse_set = [&](int a, int b) {
        std::vector<int> out;
        if (is_grp(a) && is_grp(b)) out = {(a + b) % m};
        else if (!is_grp(a) && !is_grp(b))
            for (int g = 0; g < m; ++g) out.push_back(g);
        else out = {M};
        return out;
    };
    auto chi = [&](int i, int j) {
        return std::polar(1.0, 2 * M_PI * ty.chi[i % m][j % m].value());
    };
    double root = std::sqrt(static_cast<double>(m));
    auto in_set = [&](int x, const std::vector<int>& s) {
        return std::find(s.begin(), s.end(), x) != s.end();
    };
    // [F^{abc}_d]_{ef}: e in ab, f in bc; zero on inadmissible labelings
    auto F = [&](int a, int b, int c, int d, int e, int f) -> C {
        if (!in_set(e, fuse_set(a, b)) || !in_set(d, fuse_set(e, c)) ||
            !in_set(f, fuse_set(b, c)) || !in_set(d, fuse_set(a, f)))
            return C(0.0);
        int nm = (!is_grp(a)) + (!is_grp(b)) + (!is_grp(c));
        if (nm == 3) return C(ty.tau / root) * std::conj(chi(e, f));
        if (nm == 1 && !is_grp(b)) return chi(a, c);  // F^{a m c}_m
        if (nm == 2 && is_grp(b)) return chi(b, d);   // F^{m b m}_d
        return C(1.0);
    };
    std::vector<int> labels(m + 1);
    std::iota(labels.begin(), labels.end(), 0);
    double worst = 0;
    for (int a : labels)
        for (int b : labels)
            for (int c : labels)
                for (int d : labels) {
                    auto ab = fuse_set(a, b);
                    auto cd = fuse_set(c, d);
                    auto bc = fuse_set(b, c);
                    for (int f : ab)
                        for (int g : fuse_set(f, c))
                            for (int l : cd) {
                                auto bl = fuse_set(b, l);
                                for (int k : bl) {
                                    auto ak = fuse_set(a, k);
                                    for (int e : fuse_set(g, d)) {
                                        if (!in_set(e, ak)) continue;
                                        C lhs = F(f, c, d, e, g, l) * F(a, b, l, e, f, k);
                                        C rhs(0, 0);
                                        for (int h : bc) {
                                            if (!in_set(g, fuse_set(a, h))) continue;
                                            if (!in_set(k, fuse_set(h, d))) continue;
                                            rhs += F(a, b, c, g, f, h) * F(a, h, d, e, g, k) *
                                                   F(b, c, d, k, h, l);
                                        }
                                        worst = std::max(worst, std::abs(lhs - rhs));
                                    }
                                }
                            }
                }
    return worst < tol;
}

// ---------------------------------------------------------------------------
// C(g2,4): the exceptional permutation and the algebra object A_F.
// ---------------------------------------------------------------------------

inline std::vector<int> g2_exceptional_perm(const FusionRing& ring) {
    if (ring.spec.family != Family::G2 || ring.spec.level != 4)
        throw UsageError("exceptional automorphism lives in C(g2,4)");
    std::vector<int> pi = perm_identity(ring.n);
    int l1 = ring.index_of({1, 0}), l2 = ring.index_of({0, 1});
    int w22 = ring.index_of({0, 2}), w41 = ring.index_of({4, 0});
    std::swap(pi[l1], pi[w22]);
    std::swap(pi[l2], pi[w41]);
    require_ring_automorphism(ring, pi, "g2 level-4 exceptional map");
    return pi;
}

// A_F = (+)_X X (x) F^{-1}(X^*): multiplicity vector over the basis.
inline std::vector<long long> g2_full_algebra(const FusionRing& ring, const std::vector<int>& F) {
    std::vector<int> Finv = perm_inverse(F);
    std::vector<long long> mult(ring.n, 0);
    for (int X = 0; X < ring.n; ++X) {
        int target = Finv[ring.dual[X]];
        for (auto [c, mv] : ring.channels(X, target)) mult[c] += mv;
    }
    return mult;
}

// The nine candidate simple algebras of C(g2,4), as multiplicity vectors over
// the lexicographic basis.
inline std::vector<std::vector<long long>> g2_candidate_algebras(const FusionRing& ring) {
    if (ring.spec.family != Family::G2 || ring.spec.level != 4)
        throw UsageError("candidate list is specific to C(g2,4)");
    auto vec = [&](std::map<Weight, long long> mm) {
        std::vector<long long> v(ring.n, 0);
        for (auto& [w, c] : mm) v[ring.index_of(w)] = c;
        return v;
    };
    Weight w0{0, 0}, l1{1, 0}, l1x2{2, 0}, l1x3{3, 0}, l1x4{4, 0}, l2{0, 1}, l1l2{1, 1},
        l1x2l2{2, 1}, l2x2{0, 2};
    return {
        vec({{w0, 1}, {l1x3, 1}, {l1x4, 1}, {l2, 1}}),
        vec({{w0, 1}, {l1x2, 1}, {l1x3, 1}, {l1x4, 1}, {l2, 1}, {l1l2, 2}, {l1x2l2, 1}}),
        vec({{w0, 1}, {l1x2, 2}, {l1x3, 1}, {l1x4, 1}, {l2, 1}, {l1l2, 2}, {l1x2l2, 2}}),
        vec({{w0, 1}, {l1, 1}, {l1x2, 1}, {l1x3, 1}, {l1x4, 1}, {l2, 1}, {l1l2, 2}, {l1x2l2, 2}, {l2x2, 1}}),
        vec({{w0, 1}, {l1, 1}, {l1x2, 2}, {l1x3, 3}, {l1x4, 1}, {l2, 1}, {l1l2, 3}, {l1x2l2, 2}, {l2x2, 1}}),
        vec({{w0, 1}, {l1, 1}, {l1x2, 3}, {l1x3, 3}, {l1x4, 2}, {l2, 2}, {l1l2, 4}, {l1x2l2, 3}, {l2x2, 1}}),
        vec({{w0, 1}, {l1, 2}, {l1x2, 4}, {l1x3, 5}, {l1x4, 3}, {l2, 3}, {l1l2, 4}, {l1x2l2, 4}, {l2x2, 2}}),
        vec({{w0, 1}, {l1, 2}, {l1x2, 4}, {l1x3, 5}, {l1x4, 3}, {l2, 3}, {l1l2, 5}, {l1x2l2, 4}, {l2x2, 2}}),
        vec({{w0, 1}, {l1, 2}, {l1x2, 5}, {l1x3, 5}, {l1x4, 3}, {l2, 3}, {l1l2, 6}, {l1x2l2, 5}, {l2x2, 2}}),
    };
}

struct G2Decomposition {
    long long search_space = 0;                 // number of size-5 multisets
    std::vector<std::vector<int>> solutions;    // candidate indices (0-based), sorted
};

// Every size-5 multiset is visited so the reported search-space size is the
// full count (1287 for nine candidates).
inline G2Decomposition g2_decompose(const std::vector<long long>& target,
                                    const std::vector<std::vector<long long>>& candidates) {
    G2Decomposition out;
    int nc = static_cast<int>(candidates.size());
    size_t dim = target.size();
    std::vector<int> pick;
    std::vector<long long> acc(dim, 0);
    std::function<void(int)> rec = [&](int start) {
        if (pick.size() == 5) {
            ++out.search_space;
            if (std::equal(acc.begin(), acc.end(), target.begin())) out.solutions.push_back(pick);
            return;
        }
        for (int i = start; i < nc; ++i) {
            pick.push_back(i);
            for (size_t j = 0; j < dim; ++j) acc[j] += candidates[i][j];
            rec(i);
            for (size_t j = 0; j < dim; ++j) acc[j] -= candidates[i][j];
            pick.pop_back();
        }
    };
    rec(0);
    return out;
}

}  // namespace wzw
