#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "gnq/errors.hpp"

namespace gnq {

// Exact rational number on __int128 numerator/denominator.  Arithmetic
// pre-cancels gcds and checks every product, so overflow surfaces as a loud
// OverflowError instead of silent wraparound; comparisons use continued-
// fraction descent and never overflow.  Polynomial gcds over Q (cyclotomic
// inversion) are the only place intermediate heights get large, and they stay
// far below 2^127 at the conductors this library touches.
class Rational {
  public:
    using Wide = __int128;

    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    static Rational from_wide(Wide n, Wide d) {
        Rational r;
        r.num_ = n;
        r.den_ = d;
        r.normalize();
        return r;
    }

    // checked narrowing; angle denominators and conductors stay tiny
    long long num() const { return narrow(num_); }
    long long den() const { return narrow(den_); }
    Wide num_wide() const { return num_; }
    Wide den_wide() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Wide g = gcd_wide(a.den_, b.den_);
        Wide bd = a.den_ / g, dd = b.den_ / g;
        // a.num * (b.den/g) + b.num * (a.den/g), over a.den * (b.den/g)
        Wide lhs = checked_mul(a.num_, dd);
        Wide rhs = checked_mul(b.num_, bd);
        Wide num = checked_add(lhs, rhs);
        Wide den = checked_mul(a.den_, dd);
        return Rational::from_wide(num, den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Wide g1 = gcd_wide(a.num_, b.den_), g2 = gcd_wide(b.num_, a.den_);
        Wide num = checked_mul(a.num_ / g1, b.num_ / g2);
        Wide den = checked_mul(a.den_ / g2, b.den_ / g1);
        return Rational::from_wide(num, den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw Error("rational division by zero");
        Rational inv;
        inv.num_ = b.den_;
        inv.den_ = b.num_;
        if (inv.den_ < 0) {
            inv.num_ = -inv.num_;
            inv.den_ = -inv.den_;
        }
        return a * inv;
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = compare_frac(a.num_, a.den_, b.num_, b.den_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    double to_double() const { return double(num_) / double(den_); }

    std::string str() const {
        if (den_ == 1) return wide_str(num_);
        return wide_str(num_) + "/" + wide_str(den_);
    }

    // Parses "p" or "p/q".  Throws ParseError on anything else.
    static Rational parse(const std::string& s);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  private:
    Wide num_, den_;

    static Wide gcd_wide(Wide a, Wide b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            Wide t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Wide checked_mul(Wide a, Wide b) {
        Wide out;
        if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("rational product overflow");
        return out;
    }
    static Wide checked_add(Wide a, Wide b) {
        Wide out;
        if (__builtin_add_overflow(a, b, &out)) throw OverflowError("rational sum overflow");
        return out;
    }

    void normalize() {
        if (den_ == 0) throw Error("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Wide g = gcd_wide(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    // exact comparison of a/b vs c/d (b, d > 0) by continued-fraction
    // descent; no products, no overflow
    static int compare_frac(Wide a, Wide b, Wide c, Wide d) {
        while (true) {
            Wide qa = a >= 0 ? a / b : -((-a + b - 1) / b);  // floor division
            Wide qc = c >= 0 ? c / d : -((-c + d - 1) / d);
            if (qa != qc) return qa < qc ? -1 : 1;
            Wide ra = a - qa * b, rc = c - qc * d;  // fractional numerators in [0, b), [0, d)
            if (ra == 0 && rc == 0) return 0;
            if (ra == 0) return -1;
            if (rc == 0) return 1;
            // ra/b vs rc/d  <=>  d/rc vs b/ra (positive parts, reciprocals flip)
            Wide na = d, nb = rc, nc = b, nd = ra;
            a = na;
            b = nb;
            c = nc;
            d = nd;
        }
    }

    static long long narrow(Wide v) {
        if (v > (Wide)INT64_MAX || v < -(Wide)INT64_MAX)
            throw OverflowError("rational component exceeds 64 bits");
        return (long long)v;
    }

    static std::string wide_str(Wide v) {
        if (v == 0) return "0";
        bool neg = v < 0;
        unsigned __int128 u = neg ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
        std::string s;
        while (u) {
            s.insert(s.begin(), char('0' + (int)(u % 10)));
            u /= 10;
        }
        return neg ? "-" + s : s;
    }
};

inline Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    size_t slash = s.find('/');
    try {
        size_t used = 0;
        long long n = std::stoll(s.substr(0, slash), &used);
        if (used != (slash == std::string::npos ? s.size() : slash))
            throw ParseError("bad rational literal: " + s);
        if (slash == std::string::npos) return Rational(n);
        long long d = std::stoll(s.substr(slash + 1), &used);
        if (used != s.size() - slash - 1 || d == 0) throw ParseError("bad rational literal: " + s);
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal: " + s);
    } catch (const std::out_of_range&) {
        throw ParseError("rational literal out of range: " + s);
    }
}

}  // namespace gnq
