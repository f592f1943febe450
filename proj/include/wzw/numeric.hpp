#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "wzw/rational_phase.hpp"

namespace wzw {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

// Binary floating point with a compile-time mantissa width in bits.
// Default evaluation precision is 128 bits; residual tests use 256.
template <unsigned Bits>
using FloatT = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<Bits, boost::multiprecision::backends::digit_base_2>>;

using BigFloat = FloatT<128>;
using WideFloat = FloatT<256>;

template <typename F>
F pi_const() {
    return boost::math::constants::pi<F>();
}

template <typename F>
F to_float(const Rat& q) {
    return static_cast<F>(q);
}

template <typename F>
struct ComplexT {
    F re{0};
    F im{0};

    ComplexT() = default;
    ComplexT(F r) : re(std::move(r)) {}
    ComplexT(F r, F i) : re(std::move(r)), im(std::move(i)) {}

    friend ComplexT operator+(const ComplexT& a, const ComplexT& b) { return {a.re + b.re, a.im + b.im}; }
    friend ComplexT operator-(const ComplexT& a, const ComplexT& b) { return {a.re - b.re, a.im - b.im}; }
    ComplexT operator-() const { return {-re, -im}; }
    friend ComplexT operator*(const ComplexT& a, const ComplexT& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ComplexT operator/(const ComplexT& a, const ComplexT& b) {
        F n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }

    F abs2() const { return re * re + im * im; }
    F abs() const { return sqrt(abs2()); }

    ComplexT conj() const { return {re, -im}; }

    // Principal square root.
    ComplexT sqrt_() const {
        using std::atan2;
        F r = abs();
        if (r == 0) return {F(0), F(0)};
        F theta = atan2(im, re) / 2;
        F s = sqrt(r);
        return {s * cos(theta), s * sin(theta)};
    }
};

using BigComplex = ComplexT<BigFloat>;
using WideComplex = ComplexT<WideFloat>;

// e^{2 pi i t}
template <typename F>
ComplexT<F> exp2pi(const F& t) {
    F a = 2 * pi_const<F>() * t;
    return {cos(a), sin(a)};
}

template <typename F>
ComplexT<F> exp2pi(const RationalPhase& t) {
    return exp2pi<F>(F(t.num) / F(t.den));
}

}  // namespace wzw
