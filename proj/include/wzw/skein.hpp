#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "wzw/lie.hpp"
#include "wzw/numeric.hpp"
#include "wzw/polynomial.hpp"

namespace wzw {

enum class SkeinSystem { PH, BMW, G2 };
enum class SolutionFamily {
    PH_PHI1,
    PH_PHI2,
    PH_PHI3,
    BMW_TRIVIAL,
    BMW_NONTRIVIAL,
    G2_PLUS,
    G2_MINUS,
};

inline std::string skein_name(SkeinSystem s) {
    switch (s) {
        case SkeinSystem::PH: return "PH";
        case SkeinSystem::BMW: return "BMW";
        case SkeinSystem::G2: return "G2";
    }
    return "?";
}

struct Equation {
    std::string tag;       // which defining relation it came from
    Polynomial cleared;    // denominators multiplied out
    Polynomial denom;      // the cleared factor; must not vanish on samples
};

struct EquationSystem {
    SkeinSystem kind;
    VarTable vars;
    std::vector<int> params;    // parameter variable ids
    std::vector<int> unknowns;  // automorphism coefficient ids
    std::vector<Equation> eqs;

    int nv() const { return vars.size(); }
};

namespace detail {

inline void push_equation(EquationSystem& sys, const std::string& tag, const RationalFunction& diff) {
    sys.eqs.push_back({tag, diff.num(), diff.den()});
}

}  // namespace detail

// The seven displayed equations from relations (iii)-(vii) plus the four
// derived the same way from relations (viii)-(ix). The 3-box of the image of
// a triangle expands over the vertex substitutions TL -> c1 TL + c2 S,
// S -> c3 TL + c4 S, with triangle values by S-vertex count.
inline EquationSystem ph_system() {
    EquationSystem sys;
    sys.kind = SkeinSystem::PH;
    sys.vars.names = {"delta", "gamma", "c1", "c2", "c3", "c4"};
    sys.params = {0, 1};
    sys.unknowns = {2, 3, 4, 5};
    int nv = sys.nv();
    auto V = [&](int i) { return RationalFunction::variable(nv, i); };
    auto C = [&](long long c) { return RationalFunction::constant(nv, c); };
    RationalFunction d = V(0), g = V(1), c1 = V(2), c2 = V(3), c3 = V(4), c4 = V(5);
    RationalFunction d2 = d * d;
    RationalFunction bTT = (d2 - C(2)) / d;                         // 2-box TL,TL
    RationalFunction bSS = g * d * (d2 - C(2)) / (d2 - C(1));       // 2-box S,S
    // triangle values (TL-coefficient, S-coefficient) by number of S vertices
    RationalFunction t0T = (d2 - C(3)) / d, t0S = C(0);
    RationalFunction t1T = C(0), t1S = C(0) - C(1) / d;
    RationalFunction t2T = C(0) - g * d / (d2 - C(1)), t2S = g - C(1);
    RationalFunction t3T = g * (g - C(1)) * d2 / (d2 - C(1));
    RationalFunction t3S = (d2 * d2 * g + d2 * (C(0) - C(2) * g * g + g - C(2)) +
                            C(2) * (g - C(1)) * (g - C(1))) /
                           (d * (d2 - C(1)));

    // 2-box relations
    detail::push_equation(sys, "iv", c1 * c1 * bTT + c2 * c2 * bSS - bTT);
    detail::push_equation(sys, "iii", c1 * c3 * bTT + c2 * c4 * bSS);
    detail::push_equation(sys, "v", c3 * c3 * bTT + c4 * c4 * bSS - bSS);

    // triangle relations: weights of the 0..3 S-vertex triangles per relation
    struct TriRel {
        std::string tag;
        RationalFunction w0, w1, w2, w3;  // vertex-substitution coefficients
        RationalFunction rhsT, rhsS;      // relation RHS applied to phi images
    };
    std::vector<TriRel> rels;
    rels.push_back({"vi", c1 * c1 * c1, C(3) * c1 * c1 * c2, C(3) * c1 * c2 * c2, c2 * c2 * c2,
                    t0T * c1, t0T * c2});
    rels.push_back({"vii", c3 * c1 * c1, c4 * c1 * c1 + C(2) * c3 * c1 * c2,
                    C(2) * c4 * c1 * c2 + c3 * c2 * c2, c4 * c2 * c2, t1S * c3, t1S * c4});
    rels.push_back({"viii", c1 * c3 * c3, c2 * c3 * c3 + C(2) * c1 * c3 * c4,
                    C(2) * c2 * c3 * c4 + c1 * c4 * c4, c2 * c4 * c4,
                    t2S * c3 + t2T * c1, t2S * c4 + t2T * c2});
    rels.push_back({"ix", c3 * c3 * c3, C(3) * c3 * c3 * c4, C(3) * c3 * c4 * c4, c4 * c4 * c4,
                    t3S * c3 + t3T * c1, t3S * c4 + t3T * c2});
    for (const auto& rel : rels) {
        RationalFunction lhsT = rel.w0 * t0T + rel.w1 * t1T + rel.w2 * t2T + rel.w3 * t3T;
        RationalFunction lhsS = rel.w0 * t0S + rel.w1 * t1S + rel.w2 * t2S + rel.w3 * t3S;
        detail::push_equation(sys, rel.tag + ".TL", lhsT - rel.rhsT);
        detail::push_equation(sys, rel.tag + ".S", lhsS - rel.rhsS);
    }
    return sys;
}

// The Kauffman-skein equation, the three Reidemeister-2 component equations,
// and the twist relation (i) whose partial trace carries the r^2+1 locus.
inline EquationSystem bmw_system() {
    EquationSystem sys;
    sys.kind = SkeinSystem::BMW;
    sys.vars.names = {"q", "r", "alpha", "beta", "gamma"};
    sys.params = {0, 1};
    sys.unknowns = {2, 3, 4};
    int nv = sys.nv();
    auto V = [&](int i) { return RationalFunction::variable(nv, i); };
    auto C = [&](long long c) { return RationalFunction::constant(nv, c); };
    RationalFunction q = V(0), r = V(1), a = V(2), b = V(3), g = V(4);
    RationalFunction s = q - q.inverse();
    RationalFunction dloop = C(1) + (r - r.inverse()) / s;

    detail::push_equation(sys, "iii", b - a - (g - C(1)) * s);
    detail::push_equation(sys, "R2.1", a * b + g * g - a * g * s - C(1));
    detail::push_equation(
        sys, "R2.2",
        a * a + b * b + a * b * ((r - r.inverse()) / s + C(1)) + a * g / r + g * b * r + g * a * s);
    detail::push_equation(sys, "R2.3", g * (a + b));
    detail::push_equation(sys, "i", a * dloop + b + g * r - r);
    return sys;
}

// Relations (iii) and (iv) of the trivalent presentation: bigon and triangle
// popping force alpha^2 = 1.
inline EquationSystem g2_system() {
    EquationSystem sys;
    sys.kind = SkeinSystem::G2;
    sys.vars.names = {"q", "alpha"};
    sys.params = {0};
    sys.unknowns = {1};
    int nv = sys.nv();
    auto V = [&](int i) { return RationalFunction::variable(nv, i); };
    auto C = [&](long long c) { return RationalFunction::constant(nv, c); };
    RationalFunction q = V(0), a = V(1);
    RationalFunction bigon =
        q.pow(10) + q.pow(8) + q.pow(2) + C(1) + q.pow(-2) + q.pow(-8) + q.pow(-10);
    RationalFunction tri = q.pow(4) + C(1) + q.pow(-4);
    detail::push_equation(sys, "iii", bigon * (a * a - C(1)));
    detail::push_equation(sys, "iv", tri * (a * a * a - a));
    return sys;
}

inline EquationSystem skein_system(SkeinSystem s) {
    switch (s) {
        case SkeinSystem::PH: return ph_system();
        case SkeinSystem::BMW: return bmw_system();
        case SkeinSystem::G2: return g2_system();
    }
    throw Error("unknown system");
}

// Substitute one parameter by a rational value in every equation.
inline EquationSystem specialize_system(EquationSystem sys, const std::string& var, const Rat& value) {
    int id = sys.vars.id(var);
    for (auto& eq : sys.eqs) {
        eq.cleared = eq.cleared.substitute(id, value);
        eq.denom = eq.denom.substitute(id, value);
        if (eq.denom.is_zero()) throw PoleError("specialization kills a denominator");
    }
    return sys;
}

// An assignment of the unknowns, living in Q(params)[u]/(u^2 - R).
struct SkeinAssignment {
    std::string name;
    RationalFunction radicand;      // R; zero polynomial means no radical
    std::vector<QuadExt> values;    // aligned with sys.unknowns
    Rat gamma_locus;                // set when the family only exists on gamma = value
    bool on_gamma_locus = false;
};

namespace detail {

inline QuadExt qe(const RationalFunction& x, const RationalFunction& R) {
    return QuadExt::scalar(x, R);
}

}  // namespace detail

inline SkeinAssignment ph_phi1(const EquationSystem& sys, int e1, int e2) {
    int nv = sys.nv();
    RationalFunction R = RationalFunction::constant(nv, 0);
    SkeinAssignment a;
    a.name = "phi1(" + std::to_string(e1) + "," + std::to_string(e2) + ")";
    a.radicand = R;
    a.values = {detail::qe(RationalFunction::constant(nv, e1), R),
                detail::qe(RationalFunction::constant(nv, 0), R),
                detail::qe(RationalFunction::constant(nv, 0), R),
                detail::qe(RationalFunction::constant(nv, e2), R)};
    return a;
}

inline SkeinAssignment ph_phi2(const EquationSystem& sys, int e1, int e2) {
    int nv = sys.nv();
    auto V = [&](int i) { return RationalFunction::variable(nv, i); };
    auto C = [&](long long c) { return RationalFunction::constant(nv, c); };
    RationalFunction d = V(0), g = V(1);
    RationalFunction d2 = d * d;
    RationalFunction Q = d2 * d2 * g + d2 * g * g - C(2) * d2 * g + d2 - g * g + C(2) * g - C(1);
    RationalFunction R = (d2 - C(1)) * (g - C(1)) * (g - C(1)) / Q;
    QuadExt u = QuadExt::root(R);
    QuadExt c1 = detail::qe(C(e1), R) * u;
    QuadExt c2 = c1 * detail::qe(d / (g - C(1)), R);
    QuadExt c3 = detail::qe(C(e2), R) * (detail::qe(C(1), R) - c1 * c1) / c2;
    QuadExt c4 = c1 * c2 * c3 / (c1 * c1 - detail::qe(C(1), R));
    SkeinAssignment a;
    a.name = "phi2(" + std::to_string(e1) + "," + std::to_string(e2) + ")";
    a.radicand = R;
    a.values = {c1, c2, c3, c4};
    return a;
}

inline SkeinAssignment ph_phi3(const EquationSystem& sys, int e1, int e2) {
    int nv = sys.nv();
    auto V = [&](int i) { return RationalFunction::variable(nv, i); };
    auto C = [&](long long c) { return RationalFunction::constant(nv, c); };
    RationalFunction d = V(0);
    RationalFunction R = (d * d - C(1)) / (d * d);
    QuadExt u = QuadExt::root(R);
    QuadExt c2 = detail::qe(C(e1), R) * u;
    QuadExt c3 = detail::qe(C(e2), R) * c2.inverse();
    SkeinAssignment a;
    a.name = "phi3(" + std::to_string(e1) + "," + std::to_string(e2) + ")";
    a.radicand = R;
    a.values = {detail::qe(C(0), R), c2, c3, detail::qe(C(0), R)};
    a.gamma_locus = 1;
    a.on_gamma_locus = true;
    return a;
}

inline SkeinAssignment bmw_solution(const EquationSystem& sys, bool nontrivial) {
    int nv = sys.nv();
    auto V = [&](int i) { return RationalFunction::variable(nv, i); };
    auto C = [&](long long c) { return RationalFunction::constant(nv, c); };
    RationalFunction R = RationalFunction::constant(nv, 0);
    RationalFunction s = V(0) - V(0).inverse();
    SkeinAssignment a;
    a.radicand = R;
    if (!nontrivial) {
        a.name = "bmw(0,0,1)";
        a.values = {detail::qe(C(0), R), detail::qe(C(0), R), detail::qe(C(1), R)};
    } else {
        a.name = "bmw(q-1/q, -(q-1/q), -1)";
        a.values = {detail::qe(s, R), detail::qe(C(0) - s, R), detail::qe(C(0) - C(1), R)};
    }
    return a;
}

inline SkeinAssignment g2_solution(const EquationSystem& sys, const Rat& alpha) {
    int nv = sys.nv();
    RationalFunction R = RationalFunction::constant(nv, 0);
    SkeinAssignment a;
    a.name = "g2(alpha=" + alpha.str() + ")";
    a.radicand = R;
    a.values = {detail::qe(RationalFunction::constant(nv, alpha), R)};
    return a;
}

struct ResidualEntry {
    std::string tag;
    bool zero = false;           // exact symbolic zero
    QuadExt residual;            // the symbolic residual
};

struct ResidualReport {
    std::string solution;
    std::vector<ResidualEntry> entries;
    bool all_zero = true;
};

// Exact plug-in verification in Q(params)[u]/(u^2 - R).
inline ResidualReport verify_solution(const EquationSystem& sys, const SkeinAssignment& sol) {
    EquationSystem work = sys;
    if (sol.on_gamma_locus) work = specialize_system(sys, "gamma", sol.gamma_locus);
    int nv = sys.nv();
    RationalFunction R = sol.radicand;
    // map variable id -> value (params stay symbolic)
    std::vector<QuadExt> point;
    point.reserve(nv);
    std::map<int, int> unknown_slot;
    for (size_t i = 0; i < sys.unknowns.size(); ++i) unknown_slot[sys.unknowns[i]] = static_cast<int>(i);
    for (int v = 0; v < nv; ++v) {
        auto it = unknown_slot.find(v);
        if (it != unknown_slot.end()) point.push_back(sol.values[it->second]);
        else if (sol.on_gamma_locus && sys.vars.names[v] == "gamma")
            point.push_back(detail::qe(RationalFunction::constant(nv, sol.gamma_locus), R));
        else point.push_back(detail::qe(RationalFunction::variable(nv, v), R));
    }
    ResidualReport rep;
    rep.solution = sol.name;
    for (const auto& eq : work.eqs) {
        QuadExt acc = detail::qe(RationalFunction::constant(nv, 0), R);
        for (const auto& [expo, coef] : eq.cleared.terms()) {
            QuadExt term = detail::qe(RationalFunction::constant(nv, coef), R);
            for (int v = 0; v < nv; ++v)
                if (expo[v]) term = term * point[v].pow(expo[v]);
            acc = acc + term;
        }
        ResidualEntry ent;
        ent.tag = eq.tag;
        ent.residual = acc;
        ent.zero = acc.is_zero();
        if (!ent.zero) rep.all_zero = false;
        rep.entries.push_back(std::move(ent));
    }
    return rep;
}

// Exact arithmetic in Q(sqrt(R)) for a fixed rational R.
struct QuadNum {
    Rat a, b, R;  // a + b sqrt(R)

    bool is_zero() const { return a == 0 && b == 0; }
    friend QuadNum operator+(const QuadNum& x, const QuadNum& y) { return {x.a + y.a, x.b + y.b, x.R}; }
    friend QuadNum operator*(const QuadNum& x, const QuadNum& y) {
        return {x.a * y.a + x.b * y.b * x.R, x.a * y.b + x.b * y.a, x.R};
    }
};

struct ExactPitReport {
    std::string solution;
    int samples = 0;
    bool pass = false;           // residual exactly zero at every sample
    std::string first_failure;
};

// Exact probabilistic identity testing: at random rational parameter points
// the cleared equations must vanish exactly in Q(sqrt(R)); used for the
// radical families where full symbolic reduction is disproportionate.
inline ExactPitReport verify_solution_exact_pit(const EquationSystem& sys, const SkeinAssignment& sol,
                                                int nsamples = 20, unsigned seed = 99) {
    EquationSystem work = sys;
    if (sol.on_gamma_locus) work = specialize_system(sys, "gamma", sol.gamma_locus);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long long> num(-10000, 10000), den(1, 9999);
    int nv = sys.nv();
    ExactPitReport rep;
    rep.solution = sol.name;
    rep.pass = true;
    for (int iter = 0; iter < 60 * nsamples && rep.samples < nsamples; ++iter) {
        std::vector<Rat> par(nv, Rat(0));
        for (int v : sys.params) par[v] = Rat(num(rng), den(rng));
        if (sol.on_gamma_locus) par[sys.vars.id("gamma")] = sol.gamma_locus;
        try {
            Rat R = sol.radicand.is_zero() ? Rat(0) : sol.radicand.eval<Rat>(par);
            std::vector<QuadNum> pt(nv);
            for (int v = 0; v < nv; ++v) pt[v] = {par[v], Rat(0), R};
            std::map<int, int> slot;
            for (size_t i = 0; i < sys.unknowns.size(); ++i) slot[sys.unknowns[i]] = static_cast<int>(i);
            for (auto [v, i] : slot)
                pt[v] = {sol.values[i].a.eval<Rat>(par), sol.values[i].b.eval<Rat>(par), R};
            bool skip = false;
            for (const auto& eq : work.eqs)
                if (eq.denom.eval<Rat>(par) == 0) skip = true;
            if (skip) continue;
            for (const auto& eq : work.eqs) {
                QuadNum acc{Rat(0), Rat(0), R};
                for (const auto& [expo, coef] : eq.cleared.terms()) {
                    QuadNum term{coef, Rat(0), R};
                    for (int v = 0; v < nv; ++v)
                        for (int p = 0; p < expo[v]; ++p) term = term * pt[v];
                    acc = acc + term;
                }
                if (!acc.is_zero()) {
                    rep.pass = false;
                    if (rep.first_failure.empty()) rep.first_failure = eq.tag;
                }
            }
            ++rep.samples;
        } catch (const PoleError&) {
            continue;
        }
    }
    if (rep.samples < nsamples) rep.pass = false;
    return rep;
}

// Probabilistic identity testing: random rational parameter points of height
// <= 10^4, radical evaluated in 256-bit floats; per-equation residual must be
// below 1e-25 at every sample.
struct SampledReport {
    std::string solution;
    double max_residual = 0;
    int samples = 0;
    bool pass = false;
};

inline SampledReport verify_solution_sampled(const EquationSystem& sys, const SkeinAssignment& sol,
                                             int nsamples = 20, unsigned seed = 2024) {
    EquationSystem work = sys;
    if (sol.on_gamma_locus) work = specialize_system(sys, "gamma", sol.gamma_locus);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long long> num(-10000, 10000), den(1, 9999);
    int nv = sys.nv();
    SampledReport rep;
    rep.solution = sol.name;
    WideFloat worst(0);
    int done = 0;
    for (int iter = 0; iter < 40 * nsamples && done < nsamples; ++iter) {
        std::vector<Rat> par(nv, Rat(0));
        for (int v : sys.params) par[v] = Rat(num(rng), den(rng));
        if (sol.on_gamma_locus) par[sys.vars.id("gamma")] = sol.gamma_locus;
        try {
            // radicand and unknown values at the sample
            std::vector<WideComplex> pt(nv);
            for (int v = 0; v < nv; ++v)
                pt[v] = WideComplex(to_float<WideFloat>(par[v]));
            WideComplex uval(WideFloat(0));
            if (!sol.radicand.is_zero()) {
                Rat rv = sol.radicand.eval<Rat>(par);
                uval = WideComplex(to_float<WideFloat>(rv)).sqrt_();
            }
            std::map<int, int> slot;
            for (size_t i = 0; i < sys.unknowns.size(); ++i) slot[sys.unknowns[i]] = static_cast<int>(i);
            for (auto [v, i] : slot) {
                const QuadExt& qv = sol.values[i];
                WideComplex a = WideComplex(to_float<WideFloat>(qv.a.eval<Rat>(par)));
                WideComplex b = WideComplex(to_float<WideFloat>(qv.b.eval<Rat>(par)));
                pt[v] = a + b * uval;
            }
            // cleared denominators must not vanish at the sample
            bool ok = true;
            for (const auto& eq : work.eqs) {
                Rat dv = eq.denom.eval<Rat>(par);
                if (dv == 0) ok = false;
            }
            if (!ok) continue;
            for (const auto& eq : work.eqs) {
                WideComplex rv = eq.cleared.eval<WideComplex>(pt);
                WideFloat mag = rv.abs();
                if (mag > worst) worst = mag;
            }
            ++done;
        } catch (const PoleError&) {
            continue;  // resample
        }
    }
    rep.samples = done;
    rep.max_residual = static_cast<double>(worst);
    rep.pass = done >= nsamples && worst < WideFloat("1e-25");
    return rep;
}

// The vanishing condition attached to a named family.
inline Polynomial locus_condition(SolutionFamily fam) {
    switch (fam) {
        case SolutionFamily::BMW_NONTRIVIAL: {
            EquationSystem sys = bmw_system();
            int nv = sys.nv();
            auto r = Polynomial::variable(nv, sys.vars.id("r"));
            return r * r + Polynomial::constant(nv, 1);
        }
        case SolutionFamily::PH_PHI3: {
            EquationSystem sys = ph_system();
            int nv = sys.nv();
            return Polynomial::variable(nv, sys.vars.id("gamma")) - Polynomial::constant(nv, 1);
        }
        case SolutionFamily::PH_PHI1:
            return Polynomial::constant(ph_system().nv(), 1);
        case SolutionFamily::PH_PHI2:
            return Polynomial::constant(ph_system().nv(), 1);
        case SolutionFamily::BMW_TRIVIAL:
            return Polynomial::constant(bmw_system().nv(), 1);
        case SolutionFamily::G2_PLUS:
        case SolutionFamily::G2_MINUS:
            return Polynomial::constant(g2_system().nv(), 1);
    }
    throw Error("unknown family");
}

// High-precision parameter values of the planar algebras attached to C(g,k).
struct Specialization {
    std::map<std::string, WideComplex> values;
    // |r^2 + 1| at the specialized r-parameter (BMW cases)
    double bmw_locus_abs = -1;
};

inline WideComplex exp_i_pi(long long num, long long den) {
    WideFloat t = WideFloat(num) / (2 * WideFloat(den));  // e^{i pi x} = e^{2 pi i x/2}
    return exp2pi(t);
}

inline Specialization specialize_to_category(Family family, int r, int k) {
    Specialization out;
    switch (family) {
        case Family::A: {
            long long L = r + 1 + k;
            auto E = [&](long long n) { return exp_i_pi(n, L); };  // e^{2 i pi n / (2L)}
            WideComplex delta = (E(r + 1) - E(-(r + 1))) / (E(1) - E(-1));
            WideComplex gnum = E(2) - E(6 + 2 * (r + 1)) + E(4 + 4LL * (r + 1)) - E(2LL * (r + 1));
            WideComplex gden = E(4) - E(6 + 2 * (r + 1)) + E(2 + 4LL * (r + 1)) - E(2LL * (r + 1));
            out.values["delta"] = delta;
            out.values["gamma"] = gnum / gden;
            return out;
        }
        case Family::B: {
            long long D = 4LL * (2 * r - 1 + k);
            auto q = exp2pi(WideFloat(1) / WideFloat(D));
            WideComplex Q = q * q;
            WideComplex R(WideFloat(1));
            for (int i = 0; i < 4 * r; ++i) R = R * q;
            out.values["q"] = Q;
            out.values["r"] = R;
            out.bmw_locus_abs = static_cast<double>((R * R + WideComplex(WideFloat(1))).abs());
            return out;
        }
        case Family::C: {
            long long D = 4LL * (r + k + 1);
            auto q = exp2pi(WideFloat(1) / WideFloat(D));
            WideComplex R(WideFloat(1));
            for (int i = 0; i < 2 * r + 1; ++i) R = R * q;
            R = -R;
            out.values["q"] = q;
            out.values["r"] = R;
            out.bmw_locus_abs = static_cast<double>((R * R + WideComplex(WideFloat(1))).abs());
            return out;
        }
        case Family::G2: {
            long long D = 6LL * (4 + k);
            out.values["q"] = exp2pi(WideFloat(1) / WideFloat(D));
            return out;
        }
    }
    throw Error("unknown family");
}

}  // namespace wzw
