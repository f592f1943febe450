#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "wzw/error.hpp"

namespace wzw {

// A finite group given by its Cayley table. Elements are 0..n-1, id is 0
// after normalization.
struct FiniteGroup {
    int n = 0;
    int id = 0;
    std::vector<std::vector<int>> table;  // table[a][b] = a*b
    std::vector<std::string> labels;

    int op(int a, int b) const { return table[a][b]; }

    int inv(int a) const {
        for (int b = 0; b < n; ++b)
            if (op(a, b) == id) return b;
        throw InvariantViolation("element without inverse");
    }

    bool abelian() const {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (op(a, b) != op(b, a)) return false;
        return true;
    }

    int element_order(int a) const {
        int x = a, k = 1;
        while (x != id) {
            x = op(x, a);
            ++k;
            if (k > n) throw InvariantViolation("order exceeds group size");
        }
        return k;
    }

    int center_size() const {
        int c = 0;
        for (int a = 0; a < n; ++a) {
            bool central = true;
            for (int b = 0; b < n && central; ++b)
                if (op(a, b) != op(b, a)) central = false;
            if (central) ++c;
        }
        return c;
    }

    void check() const {
        if (n <= 0 || static_cast<int>(table.size()) != n) throw InvariantViolation("bad Cayley table");
        for (int a = 0; a < n; ++a) {
            if (static_cast<int>(table[a].size()) != n) throw InvariantViolation("bad Cayley row");
            if (op(id, a) != a || op(a, id) != a) throw InvariantViolation("identity fails");
            std::vector<char> hit(n, 0);
            for (int b = 0; b < n; ++b) {
                int v = op(a, b);
                if (v < 0 || v >= n || hit[v]) throw InvariantViolation("not a Latin square");
                hit[v] = 1;
            }
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (op(op(a, b), c) != op(a, op(b, c))) throw InvariantViolation("associativity fails");
    }
};

struct AbelianInvariants {
    bool abelian = true;
    long long order = 1;
    std::vector<long long> factors;  // invariant factors d_1 | d_2 | ... (abelian case)
    int center = 0;                  // set in the nonabelian case

    std::string str() const {
        if (!abelian) return "nonabelian(order=" + std::to_string(order) + ",center=" + std::to_string(center) + ")";
        if (factors.empty()) return "[1]";
        std::string s = "[";
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(factors[i]);
        }
        return s + "]";
    }

    friend bool operator==(const AbelianInvariants& a, const AbelianInvariants& b) {
        return a.abelian == b.abelian && a.order == b.order && a.factors == b.factors;
    }
};

// Combine a multiset of cyclic orders into the invariant factor decomposition.
inline std::vector<long long> invariant_factors_from_cyclics(std::vector<long long> cyc) {
    std::map<long long, std::vector<long long>> by_prime;  // prime -> prime powers, descending later
    for (long long c : cyc) {
        long long m = c;
        for (long long p = 2; p * p <= m; ++p) {
            if (m % p) continue;
            long long q = 1;
            while (m % p == 0) {
                m /= p;
                q *= p;
            }
            by_prime[p].push_back(q);
        }
        if (m > 1) by_prime[m].push_back(m);
    }
    size_t slots = 0;
    for (auto& [p, v] : by_prime) {
        std::sort(v.rbegin(), v.rend());
        slots = std::max(slots, v.size());
    }
    std::vector<long long> fac(slots, 1);
    for (auto& [p, v] : by_prime)
        for (size_t i = 0; i < v.size(); ++i) fac[i] *= v[i];
    std::sort(fac.begin(), fac.end());
    fac.erase(std::remove(fac.begin(), fac.end(), 1LL), fac.end());
    return fac;
}

// Invariant factors via the order profile: the number of cyclic p-factors of
// order >= p^i is log_p( #{x : x^{p^i} = e} / #{x : x^{p^{i-1}} = e} ).
inline AbelianInvariants abelian_invariants(const FiniteGroup& g) {
    AbelianInvariants out;
    out.order = g.n;
    if (!g.abelian()) {
        out.abelian = false;
        out.center = g.center_size();
        return out;
    }
    std::vector<long long> cyclics;
    long long n = g.n;
    for (long long p = 2; p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        // count solutions of x^{p^i} = e
        std::vector<long long> f{1};
        for (long long q = p;; q *= p) {
            long long cnt = 0;
            for (int x = 0; x < g.n; ++x) {
                int y = x;
                long long e = q % g.element_order(x);
                // x^q: compute by fast scan (orders are tiny)
                y = g.id;
                for (long long t = 0; t < e; ++t) y = g.op(y, x);
                if (y == g.id) ++cnt;
            }
            f.push_back(cnt);
            if (cnt == f[f.size() - 2]) break;  // profile saturated
        }
        std::vector<int> kk;  // k_i = #factors of order >= p^i
        for (size_t i = 1; i < f.size(); ++i) {
            long long ratio = f[i] / f[i - 1];
            int k = 0;
            while (ratio > 1) {
                ratio /= p;
                ++k;
            }
            kk.push_back(k);
        }
        for (size_t i = 0; i < kk.size(); ++i) {
            int next = (i + 1 < kk.size()) ? kk[i + 1] : 0;
            int exactly = kk[i] - next;
            long long q = 1;
            for (size_t t = 0; t <= i; ++t) q *= p;
            for (int c = 0; c < exactly; ++c) cyclics.push_back(q);
        }
    }
    out.factors = invariant_factors_from_cyclics(cyclics);
    long long prod = 1;
    for (long long f : out.factors) prod *= f;
    if (prod != g.n) throw InvariantViolation("order profile inconsistent");
    return out;
}

// Permutation group on {0..m-1}, closed under composition.
struct PermGroup {
    std::vector<std::vector<int>> elems;       // sorted, deterministic
    std::vector<std::vector<int>> generators;

    size_t order() const { return elems.size(); }

    bool contains(const std::vector<int>& p) const {
        return std::binary_search(elems.begin(), elems.end(), p);
    }

    FiniteGroup cayley() const {
        FiniteGroup g;
        g.n = static_cast<int>(elems.size());
        std::map<std::vector<int>, int> idx;
        for (int i = 0; i < g.n; ++i) idx[elems[i]] = i;
        int m = elems.empty() ? 0 : static_cast<int>(elems[0].size());
        std::vector<int> ident(m);
        std::iota(ident.begin(), ident.end(), 0);
        g.table.assign(g.n, std::vector<int>(g.n, 0));
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j) {
                std::vector<int> c(m);
                for (int x = 0; x < m; ++x) c[x] = elems[i][elems[j][x]];
                auto it = idx.find(c);
                if (it == idx.end()) throw InvariantViolation("permutation set not closed");
                g.table[i][j] = it->second;
            }
        auto it = idx.find(ident);
        if (it == idx.end()) throw InvariantViolation("identity missing");
        g.id = it->second;
        return g;
    }
};

inline std::vector<int> perm_identity(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

inline std::vector<int> perm_compose(const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> c(p.size());
    for (size_t i = 0; i < q.size(); ++i) c[i] = p[q[i]];
    return c;
}

inline std::vector<int> perm_inverse(const std::vector<int>& p) {
    std::vector<int> inv(p.size());
    for (size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
    return inv;
}

inline PermGroup perm_closure(int m, std::vector<std::vector<int>> gens) {
    std::vector<int> ident(m);
    std::iota(ident.begin(), ident.end(), 0);
    std::set<std::vector<int>> seen{ident};
    std::vector<std::vector<int>> queue{ident};
    for (size_t h = 0; h < queue.size(); ++h) {
        for (const auto& g : gens) {
            auto c = perm_compose(g, queue[h]);
            if (seen.insert(c).second) queue.push_back(c);
        }
        if (queue.size() > 2000000) throw BoundExceeded("permutation closure too large");
    }
    PermGroup out;
    out.elems.assign(seen.begin(), seen.end());
    out.generators = std::move(gens);
    return out;
}

inline std::string cycle_notation(const std::vector<int>& p, const std::vector<std::string>& labels) {
    std::string s;
    std::vector<char> done(p.size(), 0);
    for (size_t i = 0; i < p.size(); ++i) {
        if (done[i] || p[i] == static_cast<int>(i)) continue;
        s += "(";
        size_t j = i;
        bool first = true;
        while (!done[j]) {
            if (!first) s += " ";
            s += labels[j];
            done[j] = 1;
            first = false;
            j = static_cast<size_t>(p[j]);
        }
        s += ")";
    }
    return s.empty() ? "()" : s;
}

}  // namespace wzw
