#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "wzw/groups.hpp"
#include "wzw/lie.hpp"

namespace wzw {

struct WeightHash {
    size_t operator()(const Weight& w) const {
        size_t h = 1469598103934665603ull;
        for (int x : w) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

inline std::string weight_str(const Weight& w) {
    std::string s = "[";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s + "]";
}

// All weights of the irrep with highest weight mu, with multiplicities.
// Generated by full string lowering; multiplicities by Freudenthal with the
// exact integer form L0*m*( , ).
struct WeightSystem {
    std::vector<std::pair<Weight, long long>> weights;
};

class FusionContext {
  public:
    explicit FusionContext(const AlgebraSpec& spec) : d_(lie_data(spec)), roots_(root_system(d_)) {}

    const LieData& lie() const { return d_; }
    const RootSystem& roots() const { return roots_; }

    const WeightSystem& weight_system(const Weight& mu) {
        auto it = cache_.find(mu);
        if (it != cache_.end()) return *it->second;
        auto ws = std::make_shared<WeightSystem>(compute_weight_system(mu));
        auto& ref = *ws;
        cache_.emplace(mu, std::move(ws));
        return ref;
    }

    // Kac-Walton fusion product at the context's level.
    std::map<Weight, long long> fuse(const Weight& lam, const Weight& mu) {
        const Weight* a = &lam;
        const Weight* b = &mu;
        // iterate over the smaller weight system
        if (classical_dim_bound(lam) < classical_dim_bound(mu)) std::swap(a, b);
        const WeightSystem& ws = weight_system(*b);
        long long L = d_.spec.level + d_.hdual;
        std::map<Weight, long long> out;
        Weight v(d_.r);
        for (const auto& [xi, mult] : ws.weights) {
            for (int i = 0; i < d_.r; ++i) v[i] = (*a)[i] + xi[i] + 1;
            Weight target;
            int sign = affine_dominantize(v, L, target);
            if (sign) {
                auto [it, fresh] = out.emplace(target, 0);
                it->second += sign * mult;
                if (it->second == 0) out.erase(it);
            }
        }
        for (const auto& [w, c] : out)
            if (c < 0) throw InvariantViolation("negative fusion multiplicity at " + weight_str(w));
        return out;
    }

    // Reflect v (already shifted by rho) into the interior of the level-L
    // affine alcove; returns the sign, or 0 if v lies on a wall.
    int affine_dominantize(Weight v, long long L, Weight& out) const {
        int sign = 1;
        for (long long guard = 0;; ++guard) {
            if (guard > 100000) throw InvariantViolation("affine reflection does not terminate");
            int neg = -1;
            bool zero = false;
            for (int i = 0; i < d_.r; ++i) {
                if (v[i] == 0) {
                    zero = true;
                    break;
                }
                if (v[i] < 0 && neg < 0) neg = i;
            }
            if (zero) return 0;
            if (neg >= 0) {
                int vi = v[neg];
                for (int m = 0; m < d_.r; ++m) v[m] -= vi * d_.cartan[m][neg];
                sign = -sign;
                continue;
            }
            long long lvl = d_.level_of(v);
            if (lvl == L) return 0;
            if (lvl < L) {
                out.resize(d_.r);
                for (int i = 0; i < d_.r; ++i) out[i] = v[i] - 1;
                return sign;
            }
            long long c = L - lvl;
            for (int i = 0; i < d_.r; ++i) v[i] += static_cast<int>(c) * d_.theta[i];
            sign = -sign;
        }
    }

    // Weyl dimension of the classical irrep (used only to pick the smaller
    // tensor factor; exactness is irrelevant).
    double classical_dim_bound(const Weight& mu) {
        auto it = dim_cache_.find(mu);
        if (it != dim_cache_.end()) return it->second;
        double num = 1, den = 1;
        Weight murho(d_.r);
        for (int i = 0; i < d_.r; ++i) murho[i] = mu[i] + 1;
        for (size_t idx : roots_.positive) {
            const auto& al = roots_.labels[idx];
            num *= static_cast<double>(d_.form(murho, al));
            den *= static_cast<double>(d_.form(d_.rho, al));
        }
        double dim = num / den;
        dim_cache_[mu] = dim;
        return dim;
    }

  private:
    WeightSystem compute_weight_system(const Weight& mu) {
        // string lowering from mu
        std::unordered_map<Weight, long long, WeightHash> height{{mu, 0}};
        std::vector<Weight> queue{mu};
        for (size_t h = 0; h < queue.size(); ++h) {
            Weight xi = queue[h];
            long long hh = height[xi];
            for (int i = 0; i < d_.r; ++i) {
                if (xi[i] <= 0) continue;
                Weight cur = xi;
                for (int t = 1; t <= xi[i]; ++t) {
                    for (int m = 0; m < d_.r; ++m) cur[m] -= d_.cartan[m][i];
                    if (height.emplace(cur, hh + t).second) queue.push_back(cur);
                }
            }
        }
        std::sort(queue.begin(), queue.end(), [&](const Weight& x, const Weight& y) {
            long long hx = height[x], hy = height[y];
            if (hx != hy) return hx < hy;
            return x < y;
        });

        Weight murho(d_.r);
        for (int i = 0; i < d_.r; ++i) murho[i] = mu[i] + 1;
        long long mm = d_.form(murho, murho);

        std::unordered_map<Weight, long long, WeightHash> mult;
        mult[mu] = 1;
        Weight zeta(d_.r), xirho(d_.r);
        for (size_t qi = 1; qi < queue.size(); ++qi) {
            const Weight& xi = queue[qi];
            boost::multiprecision::int128_t num = 0;
            for (size_t idx : roots_.positive) {
                const auto& al = roots_.labels[idx];
                zeta = xi;
                for (int t = 1;; ++t) {
                    for (int m = 0; m < d_.r; ++m) zeta[m] += al[m];
                    auto it = mult.find(zeta);
                    if (it == mult.end()) {
                        if (height.find(zeta) == height.end()) break;
                        throw InvariantViolation("Freudenthal order violated");
                    }
                    num += static_cast<boost::multiprecision::int128_t>(it->second) * d_.form(zeta, al);
                }
            }
            for (int i = 0; i < d_.r; ++i) xirho[i] = xi[i] + 1;
            long long den = mm - d_.form(xirho, xirho);
            if (den <= 0) throw InvariantViolation("Freudenthal denominator not positive");
            boost::multiprecision::int128_t m2 = 2 * num;
            if (m2 % den != 0) throw InvariantViolation("Freudenthal division not exact");
            mult[xi] = static_cast<long long>(m2 / den);
        }

        WeightSystem ws;
        ws.weights.reserve(queue.size());
        for (const auto& xi : queue) ws.weights.emplace_back(xi, mult[xi]);
        return ws;
    }

    LieData d_;
    RootSystem roots_;
    std::unordered_map<Weight, std::shared_ptr<WeightSystem>, WeightHash> cache_;
    std::unordered_map<Weight, double, WeightHash> dim_cache_;
};

// The fusion ring of C(g,k): ordered basis, unit, dual permutation, sparse N.
struct FusionRing {
    bool has_spec = false;
    AlgebraSpec spec;
    std::vector<Weight> basis;        // empty for presentation-style rings
    std::vector<std::string> names;
    int n = 0;
    int unit = 0;
    std::vector<int> dual;
    std::vector<std::vector<std::pair<int, int>>> prod;  // upper triangle, (c, mult) sorted by c
    std::vector<long long> totals;                       // sum_c N_{ab}^c per pair

    size_t pair_index(int a, int b) const {
        if (a > b) std::swap(a, b);
        // row-major upper triangle
        return static_cast<size_t>(a) * n - static_cast<size_t>(a) * (a - 1) / 2 + (b - a);
    }
    const std::vector<std::pair<int, int>>& channels(int a, int b) const { return prod[pair_index(a, b)]; }
    long long total(int a, int b) const { return totals[pair_index(a, b)]; }

    int N(int a, int b, int c) const {
        const auto& ch = channels(a, b);
        auto it = std::lower_bound(ch.begin(), ch.end(), std::make_pair(c, 0));
        if (it != ch.end() && it->first == c) return it->second;
        return 0;
    }

    int index_of(const Weight& w) const {
        auto it = std::lower_bound(basis.begin(), basis.end(), w);
        if (it == basis.end() || *it != w) throw NotFound("weight not in alcove: " + weight_str(w));
        return static_cast<int>(it - basis.begin());
    }

    // Frobenius-Perron dimensions (positive eigenvector of the total fusion
    // matrix, normalized at the unit).
    std::vector<double> fp_dims() const {
        std::vector<double> v(n, 1.0), w(n, 0.0);
        for (int iter = 0; iter < 500; ++iter) {
            std::fill(w.begin(), w.end(), 0.0);
            for (int a = 0; a < n; ++a)
                for (int b = a; b < n; ++b)
                    for (auto [c, m] : channels(a, b)) {
                        w[b] += m * v[c];
                        if (a != b) w[a] += m * v[c];
                    }
            double mx = 0;
            for (double x : w) mx = std::max(mx, x);
            double delta = 0;
            for (int i = 0; i < n; ++i) {
                double nv = w[i] / mx;
                delta = std::max(delta, std::abs(nv - v[i]));
                v[i] = nv;
            }
            if (delta < 1e-14 && iter > 30) break;
        }
        double u = v[unit];
        std::vector<double> out(n);
        for (int i = 0; i < n; ++i) out[i] = v[i] / u;
        return out;
    }
};

namespace detail {

inline void finish_ring(FusionRing& ring, bool verify_assoc, int assoc_full_threshold) {
    int n = ring.n;
    ring.totals.assign(ring.prod.size(), 0);
    for (size_t i = 0; i < ring.prod.size(); ++i) {
        long long t = 0;
        for (auto [c, m] : ring.prod[i]) {
            if (m < 0) throw InvariantViolation("negative multiplicity");
            t += m;
        }
        ring.totals[i] = t;
    }
    // unit row: N_{0,b}^c = delta_{b,c}
    for (int b = 0; b < n; ++b) {
        const auto& ch = ring.channels(ring.unit, b);
        if (ch.size() != 1 || ch[0].first != b || ch[0].second != 1)
            throw InvariantViolation("unit row violated");
    }
    // duality: N_{a,b}^0 = delta_{b,a*}
    ring.dual.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            int m = ring.N(a, b, ring.unit);
            if (m > 1) throw InvariantViolation("unit multiplicity > 1");
            if (m == 1) {
                if (ring.dual[a] != -1) throw InvariantViolation("multiple duals");
                ring.dual[a] = b;
            }
        }
        if (ring.dual[a] == -1) throw InvariantViolation("missing dual");
    }
    for (int a = 0; a < n; ++a)
        if (ring.dual[ring.dual[a]] != a) throw InvariantViolation("dual not involutive");
    // Frobenius reciprocity: N_{a,b}^c = N_{a,c*}^{b*}
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
            for (auto [c, m] : ring.channels(a, b))
                if (ring.N(a, ring.dual[c], ring.dual[b]) != m)
                    throw InvariantViolation("Frobenius reciprocity fails");
    if (!verify_assoc) return;
    // associativity: full scan for small rank, random sample beyond
    auto check_triple = [&](int a, int b, int c) {
        std::map<int, long long> lhs, rhs;
        for (auto [d, m] : ring.channels(a, b))
            for (auto [e, m2] : ring.channels(d, c)) lhs[e] += static_cast<long long>(m) * m2;
        for (auto [d, m] : ring.channels(b, c))
            for (auto [e, m2] : ring.channels(a, d)) rhs[e] += static_cast<long long>(m) * m2;
        if (lhs != rhs) throw InvariantViolation("associativity fails");
    };
    if (n <= assoc_full_threshold) {
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b)
                for (int c = b; c < n; ++c) check_triple(a, b, c);
    } else {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int t = 0; t < 600; ++t) check_triple(pick(rng), pick(rng), pick(rng));
    }
}

}  // namespace detail

// Public fuse operation.
inline std::vector<std::pair<Weight, int>> fuse(const AlgebraSpec& spec, const Weight& lam, const Weight& mu) {
    FusionContext ctx(spec);
    if (ctx.lie().level_of(lam) > spec.level || ctx.lie().level_of(mu) > spec.level)
        throw UsageError("weight outside the level-k alcove");
    auto prod = ctx.fuse(lam, mu);
    std::vector<std::pair<Weight, int>> out;
    for (const auto& [w, m] : prod) out.emplace_back(w, static_cast<int>(m));
    return out;
}

struct BuildOptions {
    long long alcove_bound = 2000;
    int assoc_full_threshold = 90;
    bool verify = true;
    bool direct = false;  // force the all-pairs Racah-Speiser route
};

namespace detail {

// All-pairs Kac-Walton; cost grows with the weight systems of every basis
// element, so this is reserved for small ranks and cross-checks.
inline void fill_products_direct(FusionRing& ring, FusionContext& ctx) {
    for (int a = 0; a < ring.n; ++a)
        for (int b = a; b < ring.n; ++b) {
            auto prod = ctx.fuse(ring.basis[a], ring.basis[b]);
            auto& ch = ring.prod[ring.pair_index(a, b)];
            ch.reserve(prod.size());
            for (const auto& [w, m] : prod) ch.emplace_back(ring.index_of(w), static_cast<int>(m));
            std::sort(ch.begin(), ch.end());
        }
}

// Generator recursion: Kac-Walton only against the fundamental weights, then
// N_a = N_{L_i} N_{a'} - sum_{c != a} N_{L_i a'}^c N_c for a = L_i + a'.
// Valid because finite reflections preserve |nu+rho|^2, the affine reflection
// strictly decreases it, and classical constituents below the top strictly
// decrease the Casimir: every c != a has smaller Casimir and is built first.
inline void fill_products_generator(FusionRing& ring, FusionContext& ctx) {
    const LieData& d = ctx.lie();
    int n = ring.n;
    int r = d.r;
    // full sparse rows: rows[a][b] = sorted channels of a (x) b
    std::vector<std::vector<std::vector<std::pair<int, int>>>> rows(n);

    auto casimir = [&](const Weight& w) {
        Weight s(r);
        for (int i = 0; i < r; ++i) s[i] = w[i] + 2;
        return d.form(w, s);
    };
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<long long> ekey(n);
    for (int i = 0; i < n; ++i) ekey[i] = casimir(ring.basis[i]);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (ekey[x] != ekey[y]) return ekey[x] < ekey[y];
        return ring.basis[x] < ring.basis[y];
    });

    // fundamental indices present in the alcove
    std::vector<int> fundamental(r, -1);
    for (int i = 0; i < r; ++i) {
        Weight f(r, 0);
        f[i] = 1;
        if (d.level_of(f) <= ring.spec.level) fundamental[i] = ring.index_of(f);
    }
    // unit row
    rows[ring.unit].resize(n);
    for (int b = 0; b < n; ++b) rows[ring.unit][b] = {{b, 1}};
    // fundamental rows by Kac-Walton
    for (int i = 0; i < r; ++i) {
        int fi = fundamental[i];
        if (fi < 0 || !rows[fi].empty()) continue;
        rows[fi].resize(n);
        for (int b = 0; b < n; ++b) {
            auto prod = ctx.fuse(ring.basis[fi], ring.basis[b]);
            auto& ch = rows[fi][b];
            ch.reserve(prod.size());
            for (const auto& [w, m] : prod) ch.emplace_back(ring.index_of(w), static_cast<int>(m));
            std::sort(ch.begin(), ch.end());
        }
    }

    std::vector<long long> acc(n);
    for (int idx : order) {
        if (!rows[idx].empty()) continue;  // unit or fundamental
        const Weight& a = ring.basis[idx];
        int pick = -1;
        for (int i = 0; i < r; ++i)
            if (a[i] > 0) {
                pick = i;
                break;
            }
        if (pick < 0) throw InvariantViolation("composite weight without positive label");
        Weight ap = a;
        ap[pick] -= 1;
        int api = ring.index_of(ap);
        int fi = fundamental[pick];
        if (rows[api].empty() || rows[fi].empty())
            throw InvariantViolation("generator recursion ordered incorrectly");
        // corrections: c != a in supp(L_i (x) a'), all with smaller Casimir
        const auto& supp = rows[fi][api];
        int top_mult = 0;
        for (auto [c, m] : supp) {
            if (c == idx) top_mult = m;
            else if (rows[c].empty())
                throw InvariantViolation("Casimir order violated in generator recursion");
        }
        if (top_mult != 1) throw InvariantViolation("top constituent multiplicity != 1");
        rows[idx].resize(n);
        for (int b = 0; b < n; ++b) {
            std::fill(acc.begin(), acc.end(), 0);
            for (auto [dd, m1] : rows[fi][b])
                for (auto [c, m2] : rows[api][dd]) acc[c] += static_cast<long long>(m1) * m2;
            for (auto [c, m] : supp) {
                if (c == idx) continue;
                for (auto [e, m2] : rows[c][b]) acc[e] -= static_cast<long long>(m) * m2;
            }
            auto& ch = rows[idx][b];
            for (int c = 0; c < n; ++c) {
                if (acc[c] == 0) continue;
                if (acc[c] < 0) throw InvariantViolation("negative multiplicity in recursion");
                ch.emplace_back(c, static_cast<int>(acc[c]));
            }
        }
    }
    // write the upper triangle, checking commutativity across the two slots
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            if (rows[a][b] != rows[b][a]) throw InvariantViolation("recursion broke commutativity");
            ring.prod[ring.pair_index(a, b)] = rows[a][b];
        }
}

}  // namespace detail

inline FusionRing build_ring(const AlgebraSpec& spec, const BuildOptions& opt = {}) {
    spec.validate();
    if (spec.family == Family::B && spec.rank < 2)
        throw UsageError("so(3) fusion is not supported; use family A rank 1");
    FusionRing ring;
    ring.has_spec = true;
    ring.spec = spec;
    ring.basis = alcove(spec, opt.alcove_bound);
    ring.n = static_cast<int>(ring.basis.size());
    for (const auto& w : ring.basis) ring.names.push_back(weight_str(w));
    ring.unit = ring.index_of(Weight(spec.rank, 0));

    FusionContext ctx(spec);
    ring.prod.resize(static_cast<size_t>(ring.n) * (ring.n + 1) / 2);
    if (opt.direct) detail::fill_products_direct(ring, ctx);
    else detail::fill_products_generator(ring, ctx);
    detail::finish_ring(ring, opt.verify, opt.assoc_full_threshold);
    return ring;
}

// Ring given by an explicit table (used for hand presentations). channels[a][b]
// lists (c, mult) for a <= b.
inline FusionRing ring_from_table(std::vector<std::string> names, int unit,
                                  const std::map<std::pair<int, int>, std::vector<std::pair<int, int>>>& table,
                                  bool verify = true) {
    FusionRing ring;
    ring.names = std::move(names);
    ring.n = static_cast<int>(ring.names.size());
    ring.unit = unit;
    ring.prod.resize(static_cast<size_t>(ring.n) * (ring.n + 1) / 2);
    for (int a = 0; a < ring.n; ++a)
        for (int b = a; b < ring.n; ++b) {
            auto it = table.find({a, b});
            if (it == table.end()) throw Error("missing table entry");
            auto ch = it->second;
            std::sort(ch.begin(), ch.end());
            ring.prod[ring.pair_index(a, b)] = std::move(ch);
        }
    detail::finish_ring(ring, verify, 64);
    return ring;
}

// x is invertible iff x (x) x* = 1 exactly.
inline std::vector<int> invertibles(const FusionRing& ring) {
    std::vector<int> out;
    for (int x = 0; x < ring.n; ++x) {
        const auto& ch = ring.channels(x, ring.dual[x]);
        if (ch.size() == 1 && ch[0].first == ring.unit && ch[0].second == 1) out.push_back(x);
    }
    return out;
}

struct Grading {
    FiniteGroup group;
    std::vector<int> grade;  // basis index -> group element
};

// Universal grading: classes of the equivalence generated by
// "c, c' in supp(a (x) b)  =>  grade(c) = grade(c')".
inline Grading grading_group(const FusionRing& ring) {
    std::vector<int> uf(ring.n);
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
    auto unite = [&](int a, int b) { uf[find(a)] = find(b); };
    for (int a = 0; a < ring.n; ++a)
        for (int b = a; b < ring.n; ++b) {
            const auto& ch = ring.channels(a, b);
            for (size_t i = 1; i < ch.size(); ++i) unite(ch[0].first, ch[i].first);
        }
    std::map<int, int> comp;
    std::vector<int> grade(ring.n);
    for (int i = 0; i < ring.n; ++i) {
        int root = find(i);
        auto [it, fresh] = comp.emplace(root, static_cast<int>(comp.size()));
        grade[i] = it->second;
    }
    int g = static_cast<int>(comp.size());
    FiniteGroup grp;
    grp.n = g;
    grp.id = grade[ring.unit];
    grp.table.assign(g, std::vector<int>(g, -1));
    for (int a = 0; a < ring.n; ++a)
        for (int b = a; b < ring.n; ++b) {
            const auto& ch = ring.channels(a, b);
            if (ch.empty()) continue;
            int v = grade[ch[0].first];
            int& slot = grp.table[grade[a]][grade[b]];
            if (slot == -1) slot = v;
            else if (slot != v)
                throw InvariantViolation("grading not well defined");
            grp.table[grade[b]][grade[a]] = v;
        }
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            if (grp.table[i][j] == -1) throw InvariantViolation("grading table incomplete");
    grp.check();
    for (int i = 0; i < g; ++i) grp.labels.push_back("g" + std::to_string(i));
    return {grp, grade};
}

}  // namespace wzw
