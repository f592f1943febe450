#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "wzw/error.hpp"
#include "wzw/numeric.hpp"

namespace wzw {

enum class Family { A, B, C, G2 };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::G2: return "G2";
    }
    return "?";
}

inline Family family_from_string(const std::string& s) {
    if (s == "A" || s == "a") return Family::A;
    if (s == "B" || s == "b") return Family::B;
    if (s == "C" || s == "c") return Family::C;
    if (s == "G2" || s == "g2" || s == "G" || s == "g") return Family::G2;
    throw UsageError("unknown family '" + s + "' (expected A, B, C or G2)");
}

// Dynkin labels (lambda_1 .. lambda_r).
using Weight = std::vector<int>;

struct AlgebraSpec {
    Family family = Family::A;
    int rank = 1;
    int level = 1;

    void validate() const {
        if (rank < 1) throw UsageError("rank must be >= 1");
        if (level < 1) throw UsageError("level must be >= 1");
        if (family == Family::G2 && rank != 2) throw UsageError("G2 has rank 2");
    }

    std::string str() const {
        return family_name(family) + " r=" + std::to_string(rank) + " k=" + std::to_string(level);
    }

    friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) {
        return a.family == b.family && a.rank == b.rank && a.level == b.level;
    }
    friend bool operator<(const AlgebraSpec& a, const AlgebraSpec& b) {
        if (a.family != b.family) return a.family < b.family;
        if (a.rank != b.rank) return a.rank < b.rank;
        return a.level < b.level;
    }
};

// Integer matrix acting on Dynkin-label coordinates.
struct IMat {
    int r = 0;
    std::vector<int> a;  // row-major r x r

    static IMat identity(int r) {
        IMat m;
        m.r = r;
        m.a.assign(static_cast<size_t>(r) * r, 0);
        for (int i = 0; i < r; ++i) m.a[static_cast<size_t>(i) * r + i] = 1;
        return m;
    }
    int at(int i, int j) const { return a[static_cast<size_t>(i) * r + j]; }
    int& at(int i, int j) { return a[static_cast<size_t>(i) * r + j]; }

    std::vector<int> apply(const std::vector<int>& v) const {
        std::vector<int> w(r, 0);
        for (int i = 0; i < r; ++i) {
            int s = 0;
            for (int j = 0; j < r; ++j) s += at(i, j) * v[j];
            w[i] = s;
        }
        return w;
    }
    friend IMat operator*(const IMat& x, const IMat& y) {
        IMat z = identity(x.r);
        for (int i = 0; i < x.r; ++i)
            for (int j = 0; j < x.r; ++j) {
                int s = 0;
                for (int k = 0; k < x.r; ++k) s += x.at(i, k) * y.at(k, j);
                z.at(i, j) = s;
            }
        return z;
    }
    friend bool operator<(const IMat& x, const IMat& y) { return x.a < y.a; }
    friend bool operator==(const IMat& x, const IMat& y) { return x.a == y.a; }
};

// Static data for one algebra: Cartan matrix, (co)marks, the Table-2 matrix K
// (stored as the integer matrix KI = L0*K), highest root, sign rule.
struct LieData {
    AlgebraSpec spec;
    int r = 0;
    std::vector<std::vector<int>> cartan;   // A_ij; alpha_j has labels = column j
    std::vector<int> marks;                 // a_j
    std::vector<int> colabels;              // a^vee_j (Table 1)
    int hdual = 0;                          // dual Coxeter number
    int m = 0;                              // K = m * (quadratic form matrix)
    long long L0 = 1;                       // common denominator of K
    std::vector<std::vector<long long>> KI; // L0 * K, integer
    std::vector<int> theta;                 // highest root, Dynkin labels
    Weight rho;                             // all-ones

    // D(k) of the twist formulas: 2*m*(k + hdual).
    long long twist_denominator(int k) const { return 2LL * m * (k + hdual); }

    // +1/2 phase shift when the family sign prefactor is -1. For type A the
    // sign character (-1)^{sum j lambda_j} only descends to the Z_{r+1}
    // grading when r+1 is even; for even r the unimodal structure is the
    // standard one and no sign applies.
    bool twist_sign_negative(const Weight& w) const {
        long long s = 0;
        switch (spec.family) {
            case Family::A:
                if (r % 2 == 0) return false;
                for (int j = 0; j < r; ++j) s += static_cast<long long>(j + 1) * w[j];
                return (s % 2) != 0;
            case Family::C:
                for (int j = 0; j < r; j += 2) s += w[j];  // lambda_1, lambda_3, ...
                return (s % 2) != 0;
            default: return false;
        }
    }

    // L0*m*(x, y) for Dynkin-label vectors; exact integer.
    long long form(const std::vector<int>& x, const std::vector<int>& y) const {
        long long s = 0;
        for (int i = 0; i < r; ++i) {
            if (!x[i]) continue;
            long long row = 0;
            for (int j = 0; j < r; ++j) row += KI[i][j] * y[j];
            s += x[i] * row;
        }
        return s;
    }

    long long level_of(const std::vector<int>& v) const {
        long long s = 0;
        for (int i = 0; i < r; ++i) s += static_cast<long long>(colabels[i]) * v[i];
        return s;
    }
};

inline LieData lie_data(const AlgebraSpec& spec) {
    spec.validate();
    LieData d;
    d.spec = spec;
    int r = d.r = spec.rank;
    d.rho.assign(r, 1);

    auto tridiag = [&](int rr) {
        std::vector<std::vector<int>> A(rr, std::vector<int>(rr, 0));
        for (int i = 0; i < rr; ++i) {
            A[i][i] = 2;
            if (i + 1 < rr) A[i][i + 1] = A[i + 1][i] = -1;
        }
        return A;
    };

    switch (spec.family) {
        case Family::A: {
            d.cartan = tridiag(r);
            d.marks.assign(r, 1);
            d.colabels.assign(r, 1);
            d.hdual = r + 1;
            d.m = 1;
            d.L0 = r + 1;
            d.KI.assign(r, std::vector<long long>(r, 0));
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j)
                    d.KI[i][j] = static_cast<long long>(r + 1) * std::min(i + 1, j + 1) -
                                 static_cast<long long>(i + 1) * (j + 1);
            break;
        }
        case Family::B: {
            d.cartan = tridiag(r);
            if (r >= 2) {
                d.cartan[r - 1][r - 2] = -2;  // alpha_r short
                d.cartan[r - 2][r - 1] = -1;
            }
            d.marks.assign(r, 2);
            d.marks[0] = 1;
            d.colabels.assign(r, 2);
            d.colabels[0] = 1;
            d.colabels[r - 1] = 1;
            d.hdual = 2 * r - 1;
            d.m = 2;
            d.L0 = 2;
            d.KI.assign(r, std::vector<long long>(r, 0));
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) {
                    int pw = (i == r - 1 ? 1 : 0) + (j == r - 1 ? 1 : 0);
                    // 2 * [ 2 min(i,j) / 2^pw ]
                    long long num = 4LL * std::min(i + 1, j + 1);
                    d.KI[i][j] = num >> pw;
                }
            break;
        }
        case Family::C: {
            d.cartan = tridiag(r);
            if (r >= 2) {
                d.cartan[r - 1][r - 2] = -1;  // alpha_r long
                d.cartan[r - 2][r - 1] = -2;
            }
            d.marks.assign(r, 2);
            d.marks[r - 1] = 1;
            d.colabels.assign(r, 1);
            d.hdual = r + 1;
            d.m = 2;
            d.L0 = 1;
            d.KI.assign(r, std::vector<long long>(r, 0));
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) d.KI[i][j] = std::min(i + 1, j + 1);
            break;
        }
        case Family::G2: {
            d.cartan = {{2, -3}, {-1, 2}};  // alpha_1 short
            d.marks = {3, 2};
            d.colabels = {1, 2};
            d.hdual = 4;
            d.m = 3;
            d.L0 = 1;
            d.KI = {{2, 3}, {3, 6}};
            break;
        }
    }

    d.theta.assign(r, 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) d.theta[i] += d.cartan[i][j] * d.marks[j];
    return d;
}

// Level-k dominant weights, lexicographically ordered.
inline std::vector<Weight> alcove(const AlgebraSpec& spec, long long bound = 2000) {
    LieData d = lie_data(spec);
    std::vector<Weight> out;
    Weight w(d.r, 0);
    std::function<void(int, int)> rec = [&](int pos, int budget) {
        if (pos == d.r) {
            out.push_back(w);
            if (static_cast<long long>(out.size()) > bound)
                throw BoundExceeded("alcove size exceeds bound " + std::to_string(bound));
            return;
        }
        for (int v = 0; v * d.colabels[pos] <= budget; ++v) {
            w[pos] = v;
            rec(pos + 1, budget - v * d.colabels[pos]);
        }
        w[pos] = 0;
    };
    rec(0, spec.level);
    std::sort(out.begin(), out.end());
    return out;
}

struct WeylGroup {
    std::vector<IMat> elems;  // acting on Dynkin labels
    std::vector<int> dets;    // +-1

    size_t order() const { return elems.size(); }
};

inline WeylGroup weyl_group(const AlgebraSpec& spec, long long bound = 1000000) {
    LieData d = lie_data(spec);
    int r = d.r;
    std::vector<IMat> gens;
    for (int i = 0; i < r; ++i) {
        IMat s = IMat::identity(r);
        // s_i(v)_m = v_m - v_i A_{mi}
        for (int m = 0; m < r; ++m) s.at(m, i) -= d.cartan[m][i];
        gens.push_back(s);
    }
    std::map<IMat, int> seen;
    std::vector<IMat> queue{IMat::identity(r)};
    seen[queue[0]] = +1;
    for (size_t h = 0; h < queue.size(); ++h) {
        IMat cur = queue[h];
        int dc = seen[cur];
        for (const IMat& g : gens) {
            IMat nx = g * cur;
            if (seen.emplace(nx, -dc).second) {
                queue.push_back(nx);
                if (static_cast<long long>(queue.size()) > bound)
                    throw BoundExceeded("Weyl group exceeds bound " + std::to_string(bound));
            }
        }
    }
    WeylGroup W;
    for (const auto& [m, dt] : seen) {
        W.elems.push_back(m);
        W.dets.push_back(dt);
    }
    return W;
}

// All roots, as (alpha-basis coords, Dynkin-label coords) pairs.
struct RootSystem {
    std::vector<std::vector<int>> alpha;   // simple-root coordinates
    std::vector<std::vector<int>> labels;  // Dynkin-label coordinates
    std::vector<size_t> positive;          // indices of positive roots
};

inline RootSystem root_system(const LieData& d) {
    int r = d.r;
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> alpha, labels;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> queue;
    for (int i = 0; i < r; ++i) {
        std::vector<int> a(r, 0);
        a[i] = 1;
        std::vector<int> lab(r);
        for (int m = 0; m < r; ++m) lab[m] = d.cartan[m][i];
        if (seen.insert(a).second) queue.emplace_back(a, lab);
    }
    for (size_t h = 0; h < queue.size(); ++h) {
        auto [a, lab] = queue[h];
        for (int i = 0; i < r; ++i) {
            // s_i in alpha-coords: c_j -> c_j - A_{ij'} ... reflect via labels
            int li = lab[i];
            std::vector<int> lab2 = lab;
            for (int m = 0; m < r; ++m) lab2[m] -= li * d.cartan[m][i];
            std::vector<int> a2 = a;
            a2[i] -= li;  // s_i(alpha) = alpha - <alpha, alpha_i^vee> alpha_i
            if (seen.insert(a2).second) queue.emplace_back(a2, lab2);
        }
    }
    RootSystem rs;
    for (auto& [a, lab] : queue) {
        rs.alpha.push_back(a);
        rs.labels.push_back(lab);
    }
    for (size_t i = 0; i < rs.alpha.size(); ++i) {
        bool pos = true;
        for (int c : rs.alpha[i])
            if (c < 0) pos = false;
        if (pos) rs.positive.push_back(i);
    }
    return rs;
}

}  // namespace wzw
