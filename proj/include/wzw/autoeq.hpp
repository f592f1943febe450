#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "wzw/fusion.hpp"
#include "wzw/groups.hpp"
#include "wzw/modular.hpp"

namespace wzw {

// pi is a based-ring automorphism: fixes the unit, commutes with duals,
// preserves every structure constant.
inline bool is_ring_automorphism(const FusionRing& ring, const std::vector<int>& pi) {
    if (static_cast<int>(pi.size()) != ring.n) return false;
    std::vector<char> hit(ring.n, 0);
    for (int x : pi) {
        if (x < 0 || x >= ring.n || hit[x]) return false;
        hit[x] = 1;
    }
    if (pi[ring.unit] != ring.unit) return false;
    for (int a = 0; a < ring.n; ++a)
        if (pi[ring.dual[a]] != ring.dual[pi[a]]) return false;
    for (int a = 0; a < ring.n; ++a)
        for (int b = a; b < ring.n; ++b) {
            const auto& ch = ring.channels(a, b);
            const auto& im = ring.channels(pi[a], pi[b]);
            if (ch.size() != im.size()) return false;
            for (auto [c, m] : ch)
                if (ring.N(pi[a], pi[b], pi[c]) != m) return false;
        }
    return true;
}

inline void require_ring_automorphism(const FusionRing& ring, const std::vector<int>& pi,
                                      const std::string& what) {
    if (!is_ring_automorphism(ring, pi))
        throw InvariantViolation(what + ": not a fusion ring automorphism");
}

// Complete group of based-ring automorphisms by backtracking. Candidate
// images are bucketed by Frobenius-Perron dimension; assignments are pruned
// with dual-compatibility, channel totals, and all fully-assigned triples.
inline PermGroup enumerate_fusion_autos(const FusionRing& ring, long long node_bound = 50000000) {
    int n = ring.n;
    std::vector<double> dims = ring.fp_dims();
    double dmax = *std::max_element(dims.begin(), dims.end());
    double tol = 1e-8 * std::max(1.0, dmax);

    // candidate sets per index
    std::vector<std::vector<int>> cand(n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (std::abs(dims[a] - dims[b]) > tol) continue;
            bool sa = ring.dual[a] == a, sb = ring.dual[b] == b;
            if (sa != sb) continue;
            if (ring.N(a, a, a) != ring.N(b, b, b)) continue;  // cheap invariant
            cand[a].push_back(b);
        }
    }
    // assignment order: rarest candidates first, unit pinned
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (x == ring.unit) return true;
        if (y == ring.unit) return false;
        if (cand[x].size() != cand[y].size()) return cand[x].size() < cand[y].size();
        return x < y;
    });

    std::vector<int> pi(n, -1), used(n, 0);
    std::vector<std::vector<int>> found;
    long long nodes = 0;

    // check partial consistency after assigning pi[x] (and possibly pi[x*])
    auto consistent_with = [&](int x) {
        for (int a = 0; a < n; ++a) {
            if (pi[a] < 0) continue;
            if (ring.total(a, x) != ring.total(pi[a], pi[x])) return false;
            const auto& ch = ring.channels(a, x);
            const auto& im = ring.channels(pi[a], pi[x]);
            if (ch.size() != im.size()) return false;
            for (auto [c, m] : ch)
                if (pi[c] >= 0 && ring.N(pi[a], pi[x], pi[c]) != m) return false;
            for (auto [c, m] : im) {
                if (!used[c]) continue;
                // preimage of c is assigned; covered by the forward pass
            }
        }
        return true;
    };

    std::function<void(int)> rec = [&](int depth) {
        if (++nodes > node_bound) throw BoundExceeded("automorphism search bound exceeded");
        if (depth == n) {
            if (is_ring_automorphism(ring, pi)) found.push_back(pi);
            return;
        }
        int x = order[depth];
        if (pi[x] >= 0) {
            rec(depth + 1);
            return;
        }
        int xd = ring.dual[x];
        for (int y : cand[x]) {
            if (used[y]) continue;
            int yd = ring.dual[y];
            bool set_dual = (xd != x) && pi[xd] < 0;
            if (xd == x && yd != y) continue;
            if (!set_dual && xd != x && pi[xd] != yd) continue;
            if (set_dual && used[yd]) continue;
            pi[x] = y;
            used[y] = 1;
            if (set_dual) {
                pi[xd] = yd;
                used[yd] = 1;
            }
            bool ok = consistent_with(x) && (!set_dual || consistent_with(xd));
            if (ok) rec(depth + 1);
            pi[x] = -1;
            used[y] = 0;
            if (set_dual) {
                pi[xd] = -1;
                used[yd] = 0;
            }
        }
    };
    pi[ring.unit] = ring.unit;
    used[ring.unit] = 1;
    rec(0);

    std::sort(found.begin(), found.end());
    PermGroup g;
    g.elems = std::move(found);
    // generators: all elements (small groups); closure sanity
    g.generators = g.elems;
    for (const auto& p : g.elems)
        for (const auto& q : g.elems)
            if (!g.contains(perm_compose(p, q))) throw InvariantViolation("automorphism set not closed");
    return g;
}

// Subgroup of twist-preserving automorphisms.
inline PermGroup twist_preserving_subgroup(const PermGroup& g, const TwistTable& tt) {
    PermGroup out;
    for (const auto& p : g.elems) {
        bool ok = true;
        for (size_t i = 0; i < p.size() && ok; ++i)
            if (!(tt.t[p[i]] == tt.t[i])) ok = false;
        if (ok) out.elems.push_back(p);
    }
    std::sort(out.elems.begin(), out.elems.end());
    for (const auto& p : out.elems)
        for (const auto& q : out.elems)
            if (!out.contains(perm_compose(p, q))) throw InvariantViolation("twist filter not a subgroup");
    out.generators = out.elems;
    return out;
}

inline bool preserves_twists(const std::vector<int>& p, const TwistTable& tt) {
    for (size_t i = 0; i < p.size(); ++i)
        if (!(tt.t[p[i]] == tt.t[i])) return false;
    return true;
}

}  // namespace wzw
