#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <vector>

#include "wzw/fusion.hpp"
#include "wzw/lie.hpp"
#include "wzw/rational_phase.hpp"

namespace wzw {

// Exact twist exponent: (lambda . K . (lambda+2)^T) / D(k), plus a half-turn
// when the family sign prefactor is -1.
inline RationalPhase twist(const LieData& d, int level, const Weight& lam) {
    Weight shifted(d.r);
    for (int i = 0; i < d.r; ++i) shifted[i] = lam[i] + 2;
    long long num = d.form(lam, shifted);  // = L0 * (lambda . K . (lambda+2))
    RationalPhase t(num, d.L0 * d.twist_denominator(level));
    if (d.twist_sign_negative(lam)) t = t + RationalPhase::half();
    return t;
}

inline RationalPhase twist(const AlgebraSpec& spec, const Weight& lam) {
    return twist(lie_data(spec), spec.level, lam);
}

struct TwistTable {
    AlgebraSpec spec;
    std::vector<RationalPhase> t;  // aligned with ring basis

    const RationalPhase& of(int idx) const { return t[idx]; }
};

inline TwistTable twist_table(const FusionRing& ring) {
    if (!ring.has_spec) throw UsageError("twist table needs a Lie-theoretic ring");
    LieData d = lie_data(ring.spec);
    TwistTable tt;
    tt.spec = ring.spec;
    tt.t.reserve(ring.n);
    for (const auto& w : ring.basis) tt.t.push_back(twist(d, ring.spec.level, w));
    if (!tt.t[ring.unit].is_zero()) throw InvariantViolation("unit twist nonzero");
    for (int a = 0; a < ring.n; ++a)
        if (!(tt.t[a] == tt.t[ring.dual[a]])) throw InvariantViolation("dual twists differ");
    return tt;
}

// Quantum dimension by the Weyl sine product at the shifted level.
inline double qdim(const LieData& d, const RootSystem& rs, int level, const Weight& lam) {
    long long L = level + d.hdual;
    double scale = M_PI / (static_cast<double>(d.L0) * d.m * L);
    Weight lrho(d.r);
    for (int i = 0; i < d.r; ++i) lrho[i] = lam[i] + 1;
    double out = 1.0;
    for (size_t idx : rs.positive) {
        const auto& al = rs.labels[idx];
        out *= std::sin(scale * d.form(lrho, al)) / std::sin(scale * d.form(d.rho, al));
    }
    return out;
}

inline double qdim(const AlgebraSpec& spec, const Weight& lam) {
    LieData d = lie_data(spec);
    RootSystem rs = root_system(d);
    return qdim(d, rs, spec.level, lam);
}

inline std::vector<double> qdim_table(const AlgebraSpec& spec, const std::vector<Weight>& basis) {
    LieData d = lie_data(spec);
    RootSystem rs = root_system(d);
    std::vector<double> out;
    out.reserve(basis.size());
    for (const auto& w : basis) out.push_back(qdim(d, rs, spec.level, w));
    return out;
}

struct SMatrixOracle {
    Eigen::MatrixXcd S;
    double unitarity_error = 0;   // max |S S^dag - I|
    double symmetry_error = 0;    // max |S - S^T|
    std::string method;           // "weyl-sum" or "sine-determinant"
};

namespace detail {

inline void normalize_smatrix(Eigen::MatrixXcd& S) {
    int n = static_cast<int>(S.rows());
    double norm0 = S.row(0).norm();
    S /= norm0;
    std::complex<double> s00 = S(0, 0);
    S *= std::conj(s00) / std::abs(s00);
}

inline Eigen::MatrixXcd smatrix_weyl_sum(const LieData& d, const std::vector<Weight>& basis,
                                         const WeylGroup& W) {
    int n = static_cast<int>(basis.size());
    int r = d.r;
    long long L = d.spec.level + d.hdual;
    long long T = d.L0 * d.m * L;  // exponent modulus
    std::vector<std::complex<double>> table(static_cast<size_t>(T));
    for (long long j = 0; j < T; ++j) {
        double a = -2.0 * M_PI * static_cast<double>(j) / static_cast<double>(T);
        table[static_cast<size_t>(j)] = {std::cos(a), std::sin(a)};
    }
    // precompute w(lambda+rho) for all lambda, w
    std::vector<Weight> shifted(n, Weight(r));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < r; ++j) shifted[i][j] = basis[i][j] + 1;
    size_t nw = W.order();
    std::vector<std::vector<int>> wx(static_cast<size_t>(n) * nw);
    for (int i = 0; i < n; ++i)
        for (size_t w = 0; w < nw; ++w) wx[static_cast<size_t>(i) * nw + w] = W.elems[w].apply(shifted[i]);
    Eigen::MatrixXcd S(n, n);
    std::vector<long long> Ky(r);
    for (int mu = 0; mu < n; ++mu) {
        for (int i = 0; i < r; ++i) {
            long long s = 0;
            for (int j = 0; j < r; ++j) s += d.KI[i][j] * shifted[mu][j];
            Ky[i] = s;
        }
        for (int la = mu; la < n; ++la) {
            std::complex<double> acc{0, 0};
            const auto* base = &wx[static_cast<size_t>(la) * nw];
            for (size_t w = 0; w < nw; ++w) {
                long long e = 0;
                const auto& x = base[w];
                for (int i = 0; i < r; ++i) e += x[i] * Ky[i];
                e %= T;
                if (e < 0) e += T;
                if (W.dets[w] > 0) acc += table[static_cast<size_t>(e)];
                else acc -= table[static_cast<size_t>(e)];
            }
            S(la, mu) = acc;
            S(mu, la) = acc;
        }
    }
    return S;
}

// For B and C the signed-permutation Weyl group factorizes the Kac-Peterson
// sum into an r x r determinant of sines in orthogonal coordinates.
inline Eigen::MatrixXcd smatrix_sine_det(const LieData& d, const std::vector<Weight>& basis) {
    int n = static_cast<int>(basis.size());
    int r = d.r;
    long long L = d.spec.level + d.hdual;
    bool typeB = d.spec.family == Family::B;
    // doubled orthogonal coordinates of v + rho (integers for both families)
    auto coords = [&](const Weight& v) {
        std::vector<long long> x(r, 0);
        for (int i = r - 1; i >= 0; --i) {
            long long tail = (i + 1 < r) ? x[i + 1] : 0;
            x[i] = tail + 2LL * (v[i] + 1);
        }
        if (typeB) {
            // last label contributes half: x_i = sum_{j>=i, j<r} v_j + v_r/2
            for (int i = 0; i < r; ++i) x[i] -= (v[r - 1] + 1);
        }
        return x;
    };
    std::vector<std::vector<long long>> xs(n);
    for (int i = 0; i < n; ++i) xs[i] = coords(basis[i]);
    double scale = typeB ? M_PI / (2.0 * L) : M_PI / (4.0 * L);
    Eigen::MatrixXcd S(n, n);
    Eigen::MatrixXd M(r, r);
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j)
                    M(i, j) = std::sin(scale * static_cast<double>(xs[a][i] * xs[b][j]));
            double det = M.determinant();
            S(a, b) = det;
            S(b, a) = det;
        }
    return S;
}

}  // namespace detail

inline SMatrixOracle smatrix_oracle(const FusionRing& ring, long long weyl_bound = 1000000) {
    if (!ring.has_spec) throw UsageError("S-matrix needs a Lie-theoretic ring");
    LieData d = lie_data(ring.spec);
    SMatrixOracle out;
    if (ring.spec.family == Family::B || ring.spec.family == Family::C) {
        out.S = detail::smatrix_sine_det(d, ring.basis);
        out.method = "sine-determinant";
    } else {
        WeylGroup W = weyl_group(ring.spec, weyl_bound);
        out.S = detail::smatrix_weyl_sum(d, ring.basis, W);
        out.method = "weyl-sum";
    }
    detail::normalize_smatrix(out.S);
    int n = ring.n;
    out.unitarity_error = (out.S * out.S.adjoint() - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
    out.symmetry_error = (out.S - out.S.transpose()).cwiseAbs().maxCoeff();
    if (out.unitarity_error > 1e-9) throw InvariantViolation("S-matrix not unitary within tolerance");
    if (out.symmetry_error > 1e-9) throw InvariantViolation("S-matrix not symmetric within tolerance");
    for (int i = 0; i < n; ++i)
        if (out.S(0, i).real() <= 0 || std::abs(out.S(0, i).imag()) > 1e-9)
            throw InvariantViolation("S first row not positive");
    return out;
}

struct VerlindeReport {
    double residual = 0;         // max |S D_a - N_a S|
    double certified_bound = 0;  // sqrt(n) * residual >= max |N_KW - N_Verlinde|
    double exact_max = -1;       // dense deviation when computed
    bool pass = false;
};

inline VerlindeReport verlinde_check(const FusionRing& ring, const SMatrixOracle& oracle,
                                     int dense_threshold = 120) {
    const Eigen::MatrixXcd& S = oracle.S;
    int n = ring.n;
    VerlindeReport rep;
    // transposed layout: columns are contiguous for the sparse accumulation
    Eigen::MatrixXcd St = S.transpose();
    Eigen::MatrixXcd NSt(n, n), SDt(n, n);
    for (int a = 0; a < n; ++a) {
        Eigen::VectorXcd diag(n);
        for (int s = 0; s < n; ++s) diag(s) = S(a, s) / S(0, s);
        SDt = diag.asDiagonal() * St;
        NSt.setZero();
        for (int b = 0; b < n; ++b)
            for (auto [c, m] : ring.channels(a, b)) NSt.col(b) += static_cast<double>(m) * St.col(c);
        rep.residual = std::max(rep.residual, (SDt - NSt).cwiseAbs().maxCoeff());
        if (n <= dense_threshold) {
            Eigen::MatrixXcd Nver = (SDt.transpose() * S.adjoint()).eval();
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    double dev = std::abs(Nver(b, c) - static_cast<double>(ring.N(a, b, c)));
                    rep.exact_max = std::max(rep.exact_max, dev);
                }
        }
    }
    rep.certified_bound = std::sqrt(static_cast<double>(n)) * rep.residual;
    double governing = (rep.exact_max >= 0) ? std::max(rep.exact_max, rep.certified_bound) : rep.certified_bound;
    rep.pass = governing < 1e-6;
    return rep;
}

// Order of an invertible basis element under fusion.
inline int invertible_order(const FusionRing& ring, int g) {
    int x = g, k = 1;
    while (x != ring.unit) {
        const auto& ch = ring.channels(x, g);
        if (ch.size() != 1 || ch[0].second != 1) throw UsageError("element is not invertible");
        x = ch[0].first;
        ++k;
        if (k > ring.n + 1) throw InvariantViolation("invertible order overflow");
    }
    return k;
}

// g^e (x) X for an invertible g; e may be negative.
inline int invertible_twisted(const FusionRing& ring, int g, long long e, int X) {
    int M = invertible_order(ring, g);
    long long r = ((e % M) + M) % M;
    int acc = X;
    for (long long i = 0; i < r; ++i) {
        const auto& ch = ring.channels(acc, g);
        if (ch.size() != 1 || ch[0].second != 1)
            throw InvariantViolation("invertible action did not stay simple");
        acc = ch[0].first;
    }
    return acc;
}

// The integer n mod M with sigma_{X,g} sigma_{g,X} = e^{2 pi i n / M},
// recovered from the balancing relation.
inline int monodromy_exponent(const FusionRing& ring, const TwistTable& tt, int g, int X) {
    int M = invertible_order(ring, g);
    int gX = invertible_twisted(ring, g, 1, X);
    RationalPhase delta = tt.of(gX) - tt.of(g) - tt.of(X);
    if (M % delta.den != 0)
        throw NonQuantizedMonodromy("monodromy " + delta.str() + " is not a multiple of 1/" +
                                    std::to_string(M));
    return static_cast<int>((delta.num * (M / delta.den)) % M);
}

}  // namespace wzw
