#pragma once

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "wzw/groups.hpp"
#include "wzw/lie.hpp"

namespace wzw {

// gcd(n, k^infinity): the largest divisor of n whose prime factors all divide k.
inline long long gcd_power(long long n, long long k) {
    long long out = 1, m = n;
    for (;;) {
        long long g = std::gcd(m, k);
        if (g <= 1) break;
        m /= g;
        out *= g;
    }
    return out;
}

inline int omega(long long n) {
    int w = 0;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        ++w;
        while (n % p == 0) n /= p;
    }
    if (n > 1) ++w;
    return w;
}

// G = {a in Z_n : gcd(1+ka, n) = 1} with a.a' = a + a' + a a' k (mod n).
struct AppendixGroup {
    long long n = 1, k = 1, d = 1;
    std::vector<long long> elements;  // values of a
    FiniteGroup group;                // indices into elements, identity = position of 0
};

inline AppendixGroup appendix_group(long long n, long long k) {
    if (n < 1 || k < 1) throw UsageError("appendix group needs n, k >= 1");
    AppendixGroup ag;
    ag.n = n;
    ag.k = k;
    ag.d = std::gcd(n, k);
    std::map<long long, int> idx;
    for (long long a = 0; a < n; ++a)
        if (std::gcd((1 + k * a) % n + n, n) == 1) {
            idx[a] = static_cast<int>(ag.elements.size());
            ag.elements.push_back(a);
        }
    int m = static_cast<int>(ag.elements.size());
    ag.group.n = m;
    ag.group.id = idx.at(0);
    ag.group.table.assign(m, std::vector<int>(m, -1));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            long long a = ag.elements[i], b = ag.elements[j];
            long long c = (a + b + a * b % n * (k % n)) % n;
            auto it = idx.find(c);
            if (it == idx.end()) throw InvariantViolation("appendix group not closed");
            ag.group.table[i][j] = it->second;
        }
    for (long long a : ag.elements) ag.group.labels.push_back(std::to_string(a));
    ag.group.check();
    if (!ag.group.abelian()) throw InvariantViolation("appendix group not abelian");
    return ag;
}

// G(n,d) = {b in Z_{dn}^x : b = 1 (mod d)} under multiplication mod dn.
struct GndGroup {
    long long n = 1, d = 1;
    std::vector<long long> elements;  // residues mod dn
    FiniteGroup group;
};

inline GndGroup gnd_subgroup(long long n, long long d) {
    if (n < 1 || d < 1) throw UsageError("G(n,d) needs n, d >= 1");
    GndGroup g;
    g.n = n;
    g.d = d;
    long long mod = d * n;
    std::map<long long, int> idx;
    for (long long b = 0; b < mod; ++b)
        if (std::gcd(b, mod) == 1 && b % d == 1 % d) {
            idx[b] = static_cast<int>(g.elements.size());
            g.elements.push_back(b);
        }
    int m = static_cast<int>(g.elements.size());
    g.group.n = m;
    g.group.id = idx.at(1 % mod);
    g.group.table.assign(m, std::vector<int>(m, -1));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            long long c = g.elements[i] * g.elements[j] % mod;
            g.group.table[i][j] = idx.at(c);
        }
    for (long long b : g.elements) g.group.labels.push_back(std::to_string(b));
    g.group.check();
    return g;
}

struct IsoCheckResult {
    bool ok = false;
    long long ell = 0;
    AbelianInvariants inv_appendix, inv_gnd;
    std::string detail;
};

// Appendix recipe: d = ell*k + m*n with ell adjusted (ell' = ell + L n/d) to be
// coprime to n; then 1 + d b -> ell * b is an isomorphism G(n,d) -> G.
inline IsoCheckResult iso_check(long long n, long long k) {
    IsoCheckResult res;
    long long d = std::gcd(n, k);
    // extended gcd: ell*k + m*n = d
    long long a0 = k, b0 = n, x0 = 1, x1 = 0;
    while (b0) {
        long long q = a0 / b0;
        long long t = a0 - q * b0;
        a0 = b0;
        b0 = t;
        long long xt = x0 - q * x1;
        x0 = x1;
        x1 = xt;
    }
    long long ell = x0 % n;  // ell*k = d (mod n)
    if (ell < 0) ell += n;
    // ell' = ell + t*(n/d) keeps ell'*k = d (mod n) because d | k; candidates
    // have period d in t, and one of them is coprime to n (appendix CRT step)
    long long step = n / d;
    long long ell2 = -1;
    for (long long t = 0; t < d; ++t) {
        long long cand = (ell + t * step) % n;
        if (std::gcd(cand, n) == 1) {
            ell2 = cand;
            break;
        }
    }
    if (ell2 < 0) {
        res.detail = "no coprime ell found";
        return res;
    }
    res.ell = ell2;
    if ((ell2 % n) * (k % n) % n != d % n) {
        res.detail = "ell construction failed";
        return res;
    }

    AppendixGroup G = appendix_group(n, k);
    GndGroup H = gnd_subgroup(n, d);
    if (G.elements.size() != H.elements.size()) {
        res.detail = "orders differ";
        return res;
    }
    // map b' = 1 + d*b  |->  a = ell*b (mod n)
    std::map<long long, int> gidx;
    for (size_t i = 0; i < G.elements.size(); ++i) gidx[G.elements[i]] = static_cast<int>(i);
    std::vector<int> phi(H.elements.size());
    std::vector<char> hit(G.elements.size(), 0);
    for (size_t i = 0; i < H.elements.size(); ++i) {
        long long bp = H.elements[i];
        long long b = ((bp - 1) / d) % n;
        long long a = ell2 % n * (b % n) % n;
        auto it = gidx.find(a);
        if (it == gidx.end()) {
            res.detail = "image " + std::to_string(a) + " not in G";
            return res;
        }
        if (hit[it->second]) {
            res.detail = "map not injective";
            return res;
        }
        hit[it->second] = 1;
        phi[i] = it->second;
    }
    for (size_t i = 0; i < H.elements.size(); ++i)
        for (size_t j = 0; j < H.elements.size(); ++j) {
            int lhs = phi[H.group.table[i][j]];
            int rhs = G.group.table[phi[i]][phi[j]];
            if (lhs != rhs) {
                res.detail = "not a homomorphism";
                return res;
            }
        }
    res.inv_appendix = abelian_invariants(G.group);
    res.inv_gnd = abelian_invariants(H.group);
    if (!(res.inv_appendix == res.inv_gnd)) {
        res.detail = "invariant factors differ";
        return res;
    }
    res.ok = true;
    return res;
}

// Cyclic decomposition of Z_{p^e}^x.
inline void unit_group_cyclics(long long p, int e, std::vector<long long>& out) {
    if (p == 2) {
        if (e == 1) return;
        if (e == 2) {
            out.push_back(2);
            return;
        }
        out.push_back(2);
        long long q = 1;
        for (int i = 0; i < e - 2; ++i) q *= 2;
        out.push_back(q);
        return;
    }
    long long q = p - 1;
    long long pe1 = 1;
    for (int i = 0; i < e - 1; ++i) pe1 *= p;
    out.push_back(q * pe1);
}

inline std::vector<long long> unit_group_invariants(long long n) {
    std::vector<long long> cyc;
    for (long long p = 2; p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        unit_group_cyclics(p, e, cyc);
    }
    return invariant_factors_from_cyclics(cyc);
}

struct TheoremPrediction {
    AlgebraSpec spec;
    long long tenaut = 1;
    long long braut = 1;
    std::vector<long long> tenaut_factors;  // predicted invariant factors (abelian cases)
    // type A parameters
    long long nprime = 1, ndblprime = 1, dd = 1;
    int c = 0, p = 0, t = 0;
    bool has_factors = false;
};

// Theorem 1.1 order (and, for type A, shape) predictions.
inline TheoremPrediction theorem_order(const AlgebraSpec& spec) {
    spec.validate();
    long long r = spec.rank, k = spec.level;
    TheoremPrediction out;
    out.spec = spec;
    switch (spec.family) {
        case Family::A: {
            long long n = r + 1;
            out.dd = std::gcd(n, k);
            out.ndblprime = gcd_power(n, k);
            out.nprime = n / out.ndblprime;
            out.c = (k >= 3 && r != 1) ? 1 : 0;
            // p: odd primes dividing r+1 but not k
            long long m = n;
            for (long long q = 3; q <= m; ++q) {
                if (m % q) continue;
                if (q % 2 == 1 && k % q != 0) ++out.p;
                while (m % q == 0) m /= q;
            }
            if (r % 2 == 0) out.t = 0;
            else if (k % 4 == 0) out.t = 0;
            else if (k % 2 == 1 && r % 4 == 1) out.t = 0;
            else out.t = 1;
            if (r == 1 && k == 2) {
                out.tenaut = 1;
                out.braut = 1;
                out.tenaut_factors = {};
                out.has_factors = true;
                return out;
            }
            std::vector<long long> cyc;
            for (int i = 0; i < out.c; ++i) cyc.push_back(2);
            {
                // Z_{n'}^x as cyclic pieces
                long long np = out.nprime;
                for (long long q = 2; q <= np; ++q) {
                    if (np % q) continue;
                    int e = 0;
                    while (np % q == 0) {
                        np /= q;
                        ++e;
                    }
                    unit_group_cyclics(q, e, cyc);
                }
            }
            if (out.dd % 4 == 2) {
                cyc.push_back(2);
                if (out.ndblprime / 2 > 1) cyc.push_back(out.ndblprime / 2);
            } else if (out.ndblprime > 1) {
                cyc.push_back(out.ndblprime);
            }
            out.tenaut_factors = invariant_factors_from_cyclics(cyc);
            out.has_factors = true;
            out.tenaut = 1;
            for (long long f : out.tenaut_factors) out.tenaut *= f;
            out.braut = 1LL << (out.c + out.p + out.t);
            return out;
        }
        case Family::B: {
            if (r < 2) throw UsageError("Theorem rows for so(2r+1) need r >= 2");
            if (k == 1) {
                out.tenaut = out.braut = 1;
            } else if (k == 2) {
                long long m = 2 * r + 1;
                int w = omega(m);
                bool all1mod4 = true;
                long long mm = m;
                for (long long q = 3; q <= mm; ++q) {
                    if (mm % q) continue;
                    if (q % 4 != 1) all1mod4 = false;
                    while (mm % q == 0) mm /= q;
                }
                out.tenaut = 1LL << (all1mod4 ? w + 1 : w);
                out.braut = 1LL << (w - 1);
            } else {
                out.tenaut = 2;
                out.braut = (k % 2) ? 2 : 1;
            }
            return out;
        }
        case Family::C: {
            if (r < 2) throw UsageError("Theorem rows for sp(2r) need r >= 2");
            if (r == 2 && k == 1) {
                out.tenaut = out.braut = 1;
            } else if (r == k) {
                out.tenaut = (r % 2 == 0) ? 4 : 2;
                out.braut = 1;
                if (r % 2 == 0) {
                    out.tenaut_factors = {2, 2};
                    out.has_factors = true;
                }
            } else if ((r * k) % 2 == 1) {
                out.tenaut = out.braut = 1;
            } else {
                out.tenaut = 2;
                out.braut = (r * k % 4 == 2) ? 2 : 1;
            }
            return out;
        }
        case Family::G2: {
            out.tenaut = (k == 4) ? 2 : 1;
            out.braut = (k == 4) ? 2 : 1;
            return out;
        }
    }
    return out;
}

// Closed-form |FusEq| counts.
inline long long fuseq_closed_form(const AlgebraSpec& spec) {
    long long r = spec.rank, k = spec.level;
    switch (spec.family) {
        case Family::A: {
            long long n = r + 1;
            long long cnt = 0;
            for (long long a = 0; a <= r; ++a)
                if (std::gcd((1 + k * a) % n + n, n) == 1) ++cnt;
            if (r == 1 && k == 2) return 1;
            if (r >= 2 && k >= 3) return 2 * cnt;
            return cnt;
        }
        case Family::B: {
            if (k == 1) return 1;
            if (k == 2) {
                // 2 * |Z_{2r+1}^x / (+-)|
                long long m = 2 * r + 1, phi = 0;
                for (long long x = 1; x < m; ++x)
                    if (std::gcd(x, m) == 1) ++phi;
                return phi;  // = 2 * phi/2
            }
            return 2;
        }
        case Family::C: {
            if (r == 2 && k == 1) return 1;
            if (r == k) return (r % 2 == 0) ? 4 : 2;
            if ((r * k) % 2 == 1) return 1;
            return 2;
        }
        case Family::G2: {
            if (k == 3) return 3;
            if (k == 4) return 2;
            return 1;
        }
    }
    return 1;
}

}  // namespace wzw
