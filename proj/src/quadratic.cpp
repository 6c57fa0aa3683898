#include "gnq/quadratic.hpp"

namespace gnq {

SquarefreeSplit squarefree_split(long long n) {
    if (n < 1) throw Error("squarefree_split requires n >= 1");
    long long sf = 1, sq = 1;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) sq *= p;
        if (e % 2) sf *= p;
    }
    sf *= n;  // leftover prime
    return {sf, sq};
}

QuadraticValue::QuadraticValue(Rational a, Rational b, long long d) : a_(a), b_(b), d_(d) {
    if (d_ < 1) throw Error("quadratic field index D must be >= 1");
    auto split = squarefree_split(d_);
    if (split.square_root_part != 1) {
        d_ = split.squarefree;
        b_ = b_ * Rational(split.square_root_part);
    }
    if (b_.is_zero() || d_ == 1) {
        // sqrt(1) = 1 folds into the rational part
        if (d_ == 1) a_ += b_;
        b_ = Rational(0);
        d_ = 1;
    }
}

Rational QuadraticValue::rational_part() const {
    if (!is_rational()) throw Error("value " + str() + " is not rational");
    return a_;
}

namespace {

// Common field for two operands; rationals live in every Q(sqrt(D)).
long long join_field(const QuadraticValue& x, const QuadraticValue& y) {
    if (x.is_rational()) return y.is_rational() ? 1 : y.D();
    if (y.is_rational()) return x.D();
    if (x.D() != y.D())
        throw MixedFieldError("mixed quadratic fields: sqrt(" + std::to_string(x.D()) +
                              ") vs sqrt(" + std::to_string(y.D()) + ")");
    return x.D();
}

}  // namespace

QuadraticValue operator+(const QuadraticValue& x, const QuadraticValue& y) {
    long long d = join_field(x, y);
    return QuadraticValue(x.a_ + y.a_, x.b_ + y.b_, d);
}

QuadraticValue operator-(const QuadraticValue& x, const QuadraticValue& y) {
    long long d = join_field(x, y);
    return QuadraticValue(x.a_ - y.a_, x.b_ - y.b_, d);
}

QuadraticValue operator*(const QuadraticValue& x, const QuadraticValue& y) {
    long long d = join_field(x, y);
    return QuadraticValue(x.a_ * y.a_ + x.b_ * y.b_ * Rational(d), x.a_ * y.b_ + x.b_ * y.a_, d);
}

QuadraticValue operator/(const QuadraticValue& x, const QuadraticValue& y) {
    if (y.is_zero()) throw Error("quadratic division by zero");
    long long d = join_field(x, y);
    // x / y = x * conj(y) / norm(y)
    Rational n = algebraic_norm(y);
    QuadraticValue numer = x * galois_conjugate(y);
    return QuadraticValue(numer.a_ / n, numer.b_ / n, d);
}

int QuadraticValue::sign() const {
    int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare |a| against |b| sqrt(D) via squares.
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * Rational(d_);
    if (lhs == rhs) return 0;
    return (lhs > rhs) ? sa : sb;
}

std::string QuadraticValue::str() const {
    if (is_rational()) return a_.str();
    std::string s;
    if (!a_.is_zero()) s = a_.str();
    if (!s.empty() && b_.sign() > 0) s += "+";
    if (b_ == Rational(-1))
        s += "-";
    else if (!(b_ == Rational(1)))
        s += b_.str() + "*";
    s += "sqrt(" + std::to_string(d_) + ")";
    return s;
}

QuadraticValue largest_root_quadratic(long long b, long long c) {
    if (c < 1 || b < 0) throw PreconditionError("largest_root_quadratic requires b >= 0, c >= 1");
    long long disc = b * b + 4 * c;
    auto split = squarefree_split(disc);
    if (split.squarefree == 1)  // perfect square discriminant: rational root
        return QuadraticValue(Rational(b + split.square_root_part, 2));
    return QuadraticValue(Rational(b, 2), Rational(split.square_root_part, 2), split.squarefree);
}

QuadraticValue galois_conjugate(const QuadraticValue& x) {
    return QuadraticValue(x.a(), -x.b(), x.D());
}

Rational algebraic_norm(const QuadraticValue& x) {
    return x.a() * x.a() - x.b() * x.b() * Rational(x.D());
}

Rational algebraic_norm_abs(const QuadraticValue& x) {
    Rational n = algebraic_norm(x);
    return n.sign() < 0 ? -n : n;
}

Rational algebraic_trace(const QuadraticValue& x) { return x.a() + x.a(); }

bool is_algebraic_integer(const QuadraticValue& x) {
    if (x.is_rational()) return x.a().is_integer();
    return algebraic_trace(x).is_integer() && algebraic_norm(x).is_integer();
}

}  // namespace gnq
