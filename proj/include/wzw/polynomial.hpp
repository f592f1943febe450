#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wzw/error.hpp"
#include "wzw/numeric.hpp"

namespace wzw {

// Names the variables of one equation system; polynomial exponent vectors
// are aligned to this table.
struct VarTable {
    std::vector<std::string> names;

    int id(const std::string& n) const {
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == n) return static_cast<int>(i);
        throw Error("unknown variable " + n);
    }
    int size() const { return static_cast<int>(names.size()); }
};

struct GaussRat {
    Rat re{0};
    Rat im{0};

    bool is_zero() const { return re == 0 && im == 0; }
    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
        Rat n = b.re * b.re + b.im * b.im;
        if (n == 0) throw PoleError("Gaussian division by zero");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
};

// Sparse multivariate polynomial over Q. Terms are kept in a sorted map from
// exponent vector to coefficient; zero coefficients are never stored.
class Polynomial {
  public:
    using Expo = std::vector<int>;
    using Terms = std::map<Expo, Rat>;

    Polynomial() = default;
    explicit Polynomial(int nvars) : nv_(nvars) {}

    static Polynomial constant(int nvars, const Rat& c) {
        Polynomial p(nvars);
        if (c != 0) p.ts_[Expo(nvars, 0)] = c;
        return p;
    }
    static Polynomial variable(int nvars, int i, int power = 1) {
        Polynomial p(nvars);
        Expo e(nvars, 0);
        e[i] = power;
        p.ts_[e] = 1;
        return p;
    }

    int nvars() const { return nv_; }
    bool is_zero() const { return ts_.empty(); }
    const Terms& terms() const { return ts_; }

    bool is_constant() const { return ts_.empty() || (ts_.size() == 1 && is_zero_expo(ts_.begin()->first)); }
    Rat constant_value() const {
        if (ts_.empty()) return 0;
        return ts_.begin()->second;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : ts_) {
            int s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        Polynomial r = a;
        for (const auto& [e, c] : b.ts_) r.add_term(e, c);
        return r;
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        Polynomial r = a;
        for (const auto& [e, c] : b.ts_) r.add_term(e, -c);
        return r;
    }
    Polynomial operator-() const {
        Polynomial r(nv_);
        for (const auto& [e, c] : ts_) r.ts_[e] = -c;
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r(std::max(a.nv_, b.nv_));
        for (const auto& [ea, ca] : a.ts_)
            for (const auto& [eb, cb] : b.ts_) {
                Expo e(r.nv_, 0);
                for (int i = 0; i < r.nv_; ++i)
                    e[i] = (i < (int)ea.size() ? ea[i] : 0) + (i < (int)eb.size() ? eb[i] : 0);
                r.add_term(e, ca * cb);
            }
        return r;
    }
    Polynomial pow(int k) const {
        Polynomial r = constant(nv_, 1);
        for (int i = 0; i < k; ++i) r = r * (*this);
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return (a - b).is_zero(); }

    void scale(const Rat& c) {
        if (c == 0) {
            ts_.clear();
            return;
        }
        for (auto& [e, v] : ts_) v *= c;
    }

    // Exact division attempt; returns false when *this is not a polynomial
    // multiple of d. Works for any nonzero divisor via leading-term reduction.
    bool try_divide(const Polynomial& d, Polynomial& quot) const {
        if (d.is_zero()) throw Error("division by zero polynomial");
        Polynomial rem = *this;
        Polynomial q(nv_);
        auto lead = *d.ts_.rbegin();
        while (!rem.is_zero()) {
            auto lr = *rem.ts_.rbegin();
            Expo e(nv_, 0);
            for (int i = 0; i < nv_; ++i) {
                e[i] = lr.first[i] - lead.first[i];
                if (e[i] < 0) return false;
            }
            Rat c = lr.second / lead.second;
            Polynomial mono(nv_);
            mono.ts_[e] = c;
            q = q + mono;
            rem = rem - mono * d;
        }
        quot = q;
        return true;
    }
    bool divisible_by(const Polynomial& d) const {
        Polynomial q;
        return try_divide(d, q);
    }

    template <typename Value>
    Value eval(const std::vector<Value>& point) const {
        Value acc = value_cast<Value>(Rat(0));
        for (const auto& [e, c] : ts_) {
            Value t = value_cast<Value>(c);
            for (int i = 0; i < nv_; ++i)
                for (int k = 0; k < e[i]; ++k) t = t * point[i];
            acc = acc + t;
        }
        return acc;
    }

    // Divide every monomial by prod x_i^{mn_i}; exponents must stay >= 0.
    Polynomial shift_down(const std::vector<int>& mn) const {
        Polynomial out(nv_);
        for (const auto& [e, c] : ts_) {
            Expo e2 = e;
            for (int i = 0; i < nv_; ++i) e2[i] -= mn[i];
            out.ts_[e2] = c;
        }
        return out;
    }

    // Partial evaluation of one variable at a rational value.
    Polynomial substitute(int var, const Rat& value) const {
        Polynomial out(nv_);
        for (const auto& [e, c] : ts_) {
            Rat coef = c;
            for (int k = 0; k < e[var]; ++k) coef *= value;
            Expo e2 = e;
            e2[var] = 0;
            out.add_term(e2, coef);
        }
        return out;
    }

    std::string str(const VarTable& vt) const {
        if (ts_.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto it = ts_.rbegin(); it != ts_.rend(); ++it) {
            const auto& [e, c] = *it;
            if (!first) s += (c > 0 ? " + " : " - ");
            else if (c < 0)
                s += "-";
            Rat a = c > 0 ? c : Rat(-c);
            std::string mono;
            for (int i = 0; i < nv_; ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += vt.names[i];
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty() || a != 1) {
                s += a.str();
                if (!mono.empty()) s += "*";
            }
            s += mono;
            first = false;
        }
        return s;
    }

    // Divide out the rational content (makes the leading coefficient +-1-free
    // scaling stable without multivariate gcd).
    Rat content() const {
        if (ts_.empty()) return 1;
        Int gnum = 0, glcm = 1;
        for (const auto& [e, c] : ts_) {
            gnum = boost::multiprecision::gcd(gnum, boost::multiprecision::numerator(c));
            glcm = boost::multiprecision::lcm(glcm, boost::multiprecision::denominator(c));
        }
        if (gnum == 0) return 1;
        return Rat(gnum, glcm);
    }

  private:
    static bool is_zero_expo(const Expo& e) {
        for (int x : e)
            if (x) return false;
        return true;
    }

    template <typename Value>
    static Value value_cast(const Rat& c) {
        if constexpr (std::is_same_v<Value, Rat>) return c;
        else if constexpr (std::is_same_v<Value, GaussRat>) return GaussRat{c, 0};
        else if constexpr (std::is_same_v<Value, BigComplex>) return BigComplex(to_float<BigFloat>(c));
        else if constexpr (std::is_same_v<Value, WideComplex>) return WideComplex(to_float<WideFloat>(c));
        else return static_cast<Value>(c);
    }

    void add_term(const Expo& e, const Rat& c) {
        auto it = ts_.find(e);
        if (it == ts_.end()) {
            if (c != 0) ts_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) ts_.erase(it);
        }
    }

    int nv_ = 0;
    Terms ts_;
};

// num/den with a nonzero denominator. No canonical gcd reduction; equality is
// decided by cross-multiplication. Constant denominators are folded into num.
class RationalFunction {
  public:
    RationalFunction() : nu_(0), de_(Polynomial::constant(0, 1)) {}
    RationalFunction(Polynomial n, Polynomial d) : nu_(std::move(n)), de_(std::move(d)) {
        if (de_.is_zero()) throw Error("RationalFunction: zero denominator");
        normalize();
    }
    explicit RationalFunction(Polynomial n) : nu_(n), de_(Polynomial::constant(n.nvars(), 1)) {}
    static RationalFunction constant(int nvars, const Rat& c) {
        return RationalFunction(Polynomial::constant(nvars, c));
    }
    static RationalFunction variable(int nvars, int i) {
        return RationalFunction(Polynomial::variable(nvars, i));
    }

    const Polynomial& num() const { return nu_; }
    const Polynomial& den() const { return de_; }
    bool is_zero() const { return nu_.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.nu_ * b.de_ + b.nu_ * a.de_, a.de_ * b.de_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.nu_ * b.de_ - b.nu_ * a.de_, a.de_ * b.de_);
    }
    RationalFunction operator-() const { return RationalFunction(-nu_, de_); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.nu_ * b.nu_, a.de_ * b.de_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw PoleError("division by zero rational function");
        return RationalFunction(a.nu_ * b.de_, a.de_ * b.nu_);
    }
    RationalFunction inverse() const {
        if (is_zero()) throw PoleError("inverse of zero");
        return RationalFunction(de_, nu_);
    }
    RationalFunction pow(int k) const {
        if (k < 0) return inverse().pow(-k);
        RationalFunction r = constant(nu_.nvars(), 1);
        for (int i = 0; i < k; ++i) r = r * (*this);
        return r;
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return (a.nu_ * b.de_) == (b.nu_ * a.de_);
    }

    template <typename Value>
    Value eval(const std::vector<Value>& point) const {
        Value d = de_.eval(point);
        if constexpr (std::is_same_v<Value, Rat>) {
            if (d == 0) throw PoleError("pole at evaluation point");
        } else if constexpr (std::is_same_v<Value, GaussRat>) {
            if (d.is_zero()) throw PoleError("pole at evaluation point");
        } else {
            if (d.abs2() == 0) throw PoleError("pole at evaluation point");
        }
        return nu_.eval(point) / d;
    }

    std::string str(const VarTable& vt) const {
        if (de_.is_constant() && de_.constant_value() == 1) return nu_.str(vt);
        return "(" + nu_.str(vt) + ")/(" + de_.str(vt) + ")";
    }

  private:
    void normalize() {
        if (nu_.is_zero()) {
            de_ = Polynomial::constant(nu_.nvars(), 1);
            return;
        }
        if (de_.is_constant()) {
            nu_.scale(Rat(1) / de_.constant_value());
            de_ = Polynomial::constant(nu_.nvars(), 1);
            return;
        }
        strip_monomial_content();
        Rat c = de_.content();
        if (c != 1) {
            nu_.scale(Rat(1) / c);
            de_.scale(Rat(1) / c);
        }
    }

    // cancel a common monomial factor of num and den (cheap, no gcd)
    void strip_monomial_content() {
        int nv = nu_.nvars();
        std::vector<int> mn(nv, 1 << 30);
        for (const auto* p : {&nu_, &de_})
            for (const auto& [e, c] : p->terms())
                for (int i = 0; i < nv; ++i) mn[i] = std::min(mn[i], e[i]);
        bool any = false;
        for (int i = 0; i < nv; ++i)
            if (mn[i] > 0) any = true;
        if (!any) return;
        nu_ = nu_.shift_down(mn);
        de_ = de_.shift_down(mn);
    }

    Polynomial nu_, de_;
};

// Element a + b*u of the quadratic extension with u^2 = R; used to verify the
// square-root-bearing solution families exactly.
struct QuadExt {
    RationalFunction a, b, R;

    static QuadExt scalar(const RationalFunction& x, const RationalFunction& R) {
        return {x, RationalFunction::constant(x.num().nvars(), 0), R};
    }
    static QuadExt root(const RationalFunction& R) {
        int nv = R.num().nvars();
        return {RationalFunction::constant(nv, 0), RationalFunction::constant(nv, 1), R};
    }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) { return {x.a + y.a, x.b + y.b, x.R}; }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) { return {x.a - y.a, x.b - y.b, x.R}; }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        return {x.a * y.a + x.b * y.b * x.R, x.a * y.b + x.b * y.a, x.R};
    }
    QuadExt inverse() const {
        RationalFunction n = a * a - b * b * R;
        if (n.is_zero()) throw PoleError("non-invertible quadratic element");
        return {a / n, -b / n, R};
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }
    QuadExt pow(int k) const {
        QuadExt r = scalar(RationalFunction::constant(a.num().nvars(), 1), R);
        QuadExt base = *this;
        int n = k;
        if (n < 0) {
            base = inverse();
            n = -n;
        }
        for (int i = 0; i < n; ++i) r = r * base;
        return r;
    }
};

}  // namespace wzw
