#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "wzw/error.hpp"

namespace wzw {

// A phase e^{2 pi i t} stored as the exact rational exponent t mod 1,
// normalized so that 0 <= num < den and gcd(num, den) = 1.
struct RationalPhase {
    long long num = 0;
    long long den = 1;

    RationalPhase() = default;

    RationalPhase(long long n, long long d) {
        if (d == 0) throw Error("RationalPhase: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        n %= d;
        if (n < 0) n += d;
        long long g = std::gcd(n, d);
        num = n / g;
        den = d / g;
    }

    static RationalPhase zero() { return {}; }
    static RationalPhase half() { return {1, 2}; }

    bool is_zero() const { return num == 0; }

    friend RationalPhase operator+(const RationalPhase& a, const RationalPhase& b) {
        __int128 d = static_cast<__int128>(a.den) * b.den;
        __int128 n = static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den;
        __int128 g = gcd128(n, d);
        return RationalPhase(static_cast<long long>(n / g), static_cast<long long>(d / g));
    }

    RationalPhase operator-() const { return RationalPhase(-num, den); }

    friend RationalPhase operator-(const RationalPhase& a, const RationalPhase& b) { return a + (-b); }

    // t * m mod 1 for an integer multiplier m.
    RationalPhase times(long long m) const {
        __int128 n = static_cast<__int128>(num) * m;
        __int128 d = den;
        n %= d;
        if (n < 0) n += d;
        __int128 g = gcd128(n, d);
        return RationalPhase(static_cast<long long>(n / g), static_cast<long long>(d / g));
    }

    friend bool operator==(const RationalPhase& a, const RationalPhase& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const RationalPhase& a, const RationalPhase& b) { return !(a == b); }
    friend bool operator<(const RationalPhase& a, const RationalPhase& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  private:
    static __int128 gcd128(__int128 a, __int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }
};

// Sum of m_i * t_i mod 1, exact.
inline RationalPhase phase_combine(const std::vector<std::pair<RationalPhase, long long>>& ops) {
    RationalPhase acc;
    for (const auto& [t, m] : ops) acc = acc + t.times(m);
    return acc;
}

}  // namespace wzw
