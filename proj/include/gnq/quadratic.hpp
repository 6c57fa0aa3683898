#pragma once

#include <cmath>
#include <ostream>
#include <string>

#include "gnq/rational.hpp"

namespace gnq {

// Element a + b*sqrt(D) of a real quadratic field Q(sqrt(D)), D squarefree.
// D == 1 is reserved for the rationals (then b == 0 by canonicalization).
// Arithmetic between two genuinely irrational values with different D throws
// MixedFieldError; rationals promote freely into any Q(sqrt(D)).
class QuadraticValue {
  public:
    QuadraticValue() : a_(0), b_(0), d_(1) {}
    QuadraticValue(Rational a) : a_(a), b_(0), d_(1) {}
    QuadraticValue(long long a) : a_(a), b_(0), d_(1) {}
    QuadraticValue(Rational a, Rational b, long long d);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    long long D() const { return d_; }

    bool is_rational() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_integer() const { return is_rational() && a_.is_integer(); }
    Rational rational_part() const;  // throws if not rational

    QuadraticValue operator-() const { return QuadraticValue(-a_, -b_, d_); }
    friend QuadraticValue operator+(const QuadraticValue& x, const QuadraticValue& y);
    friend QuadraticValue operator-(const QuadraticValue& x, const QuadraticValue& y);
    friend QuadraticValue operator*(const QuadraticValue& x, const QuadraticValue& y);
    friend QuadraticValue operator/(const QuadraticValue& x, const QuadraticValue& y);
    QuadraticValue& operator+=(const QuadraticValue& o) { return *this = *this + o; }
    QuadraticValue& operator-=(const QuadraticValue& o) { return *this = *this - o; }
    QuadraticValue& operator*=(const QuadraticValue& o) { return *this = *this * o; }

    friend bool operator==(const QuadraticValue& x, const QuadraticValue& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_.is_zero() || x.d_ == y.d_);
    }

    // Exact sign of the real number a + b*sqrt(D), by sign analysis of a, b
    // and a^2 - D b^2.  No floating point involved.
    int sign() const;
    friend bool operator<(const QuadraticValue& x, const QuadraticValue& y) {
        return (x - y).sign() < 0;
    }
    friend bool operator>(const QuadraticValue& x, const QuadraticValue& y) { return y < x; }
    friend bool operator<=(const QuadraticValue& x, const QuadraticValue& y) { return !(y < x); }
    friend bool operator>=(const QuadraticValue& x, const QuadraticValue& y) { return !(x < y); }

    double to_double() const { return a_.to_double() + b_.to_double() * std::sqrt(double(d_)); }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const QuadraticValue& v) {
        return os << v.str();
    }

  private:
    Rational a_, b_;
    long long d_;
};

// Largest real root of x^2 - b x - c for integers b >= 0, c >= 1, in
// canonical form (square factors of the discriminant pulled out, rational
// when the discriminant is a perfect square).
QuadraticValue largest_root_quadratic(long long b, long long c);

// a + b*sqrt(D)  |->  a - b*sqrt(D); the nontrivial element of
// Gal(Q(sqrt(D))/Q), identity on rationals.
QuadraticValue galois_conjugate(const QuadraticValue& x);

// Signed field norm x * conj(x) = a^2 - D b^2.
Rational algebraic_norm(const QuadraticValue& x);

// |a^2 - D b^2|; divisibility arguments on norms use the magnitude.
Rational algebraic_norm_abs(const QuadraticValue& x);

// Trace x + conj(x) = 2a.
Rational algebraic_trace(const QuadraticValue& x);

// True when x is an algebraic integer: monic minimal polynomial over Z,
// i.e. trace and norm both integers (rational case: x itself an integer).
bool is_algebraic_integer(const QuadraticValue& x);

// Squarefree part s and cofactor m with n = s * m^2, n >= 1.
struct SquarefreeSplit {
    long long squarefree;
    long long square_root_part;
};
SquarefreeSplit squarefree_split(long long n);

}  // namespace gnq
