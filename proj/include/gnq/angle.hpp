#pragma once

#include <ostream>

#include "gnq/rational.hpp"

namespace gnq {

// Root of unity exp(2*pi*i*t) stored as the rational angle t, reduced into
// [0, 1).  Addition of angles is multiplication of the roots.
class RationalAngle {
  public:
    RationalAngle() : t_(0) {}
    explicit RationalAngle(Rational t) : t_(reduce(t)) {}
    RationalAngle(long long num, long long den) : t_(reduce(Rational(num, den))) {}

    const Rational& t() const { return t_; }
    bool is_trivial() const { return t_.is_zero(); }
    long long order() const { return t_.den(); }  // order of the root of unity

    RationalAngle operator+(const RationalAngle& o) const { return RationalAngle(t_ + o.t_); }
    RationalAngle operator-(const RationalAngle& o) const { return RationalAngle(t_ - o.t_); }
    RationalAngle operator-() const { return RationalAngle(-t_); }
    RationalAngle scaled(long long c) const { return RationalAngle(t_ * Rational(c)); }

    friend bool operator==(const RationalAngle& a, const RationalAngle& b) {
        return a.t_ == b.t_;
    }

    std::string str() const { return t_.str(); }
    friend std::ostream& operator<<(std::ostream& os, const RationalAngle& a) {
        return os << a.str();
    }

    static RationalAngle parse(const std::string& s) { return RationalAngle(Rational::parse(s)); }

  private:
    Rational t_;

    static Rational reduce(Rational t) {
        long long k = t.num() / t.den();
        t -= Rational(k);
        if (t.sign() < 0) t += Rational(1);
        return t;
    }
};

}  // namespace gnq
