#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace qrr {

// Exact rational arithmetic on 64-bit words. Exponent grids, truncation
// orders and alphabet offsets in this project are all small fractions, so
// word-size storage is enough; intermediates go through 128 bits and any
// overflow throws instead of wrapping.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) {
        if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
        normalize();
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational::make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                              i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational::make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
        return Rational::make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        i128 l = i128(a.num_) * b.den_;
        i128 r = i128(b.num_) * a.den_;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // floor(value * mult) for a positive integer mult
    long long floor_times(long long mult) const {
        i128 n = i128(num_) * mult;
        i128 d = den_;
        i128 q = n / d;
        if (n % d != 0 && (n < 0)) --q;
        return checked(q);
    }
    long long ceil_times(long long mult) const {
        i128 n = i128(num_) * mult;
        i128 d = den_;
        i128 q = n / d;
        if (n % d != 0 && (n > 0)) ++q;
        return checked(q);
    }
    long long floor() const { return floor_times(1); }

    double to_double() const { return double(num_) / double(den_); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    using i128 = __int128;

    long long num_ = 0;
    long long den_ = 1;

    static long long checked(i128 v) {
        if (v > INT64_MAX / 2 || v < INT64_MIN / 2)
            throw std::overflow_error("Rational: 64-bit overflow");
        return (long long)v;
    }
    static Rational make(i128 n, i128 d) {
        if (d < 0) { n = -n; d = -d; }
        i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        Rational r;
        r.num_ = checked(n);
        r.den_ = checked(d);
        return r;
    }
    static i128 gcd128(i128 a, i128 b) {
        while (b) { i128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }
    void normalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }
};

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

inline long long lcm_ll(long long a, long long b) {
    long long g = std::gcd(a, b);
    __int128 l = (__int128)(a / g) * b;
    if (l > INT64_MAX / 4) throw std::overflow_error("lcm overflow");
    return (long long)l;
}

} // namespace qrr
