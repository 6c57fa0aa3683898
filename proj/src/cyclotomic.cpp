#include "gnq/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <numbers>

namespace gnq {

long long euler_phi(long long n) {
    long long result = n;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Exact division of integer polynomials, used to peel cyclotomic factors
// out of x^n - 1.  quotient * divisor == dividend is guaranteed by theory.
std::vector<long long> poly_div_exact(const std::vector<long long>& dividend,
                                      const std::vector<long long>& divisor) {
    std::vector<long long> rem = dividend;
    std::vector<long long> quot(dividend.size() - divisor.size() + 1, 0);
    long long lead = divisor.back();
    for (size_t i = quot.size(); i-- > 0;) {
        long long q = rem[i + divisor.size() - 1] / lead;
        quot[i] = q;
        if (q == 0) continue;
        for (size_t j = 0; j < divisor.size(); ++j) rem[i + j] -= q * divisor[j];
    }
    for (long long r : rem)
        if (r != 0) throw Error("inexact polynomial division in cyclotomic computation");
    return quot;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(long long n) {
    static std::map<long long, std::vector<long long>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n < 1) throw Error("cyclotomic polynomial index must be positive");

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<long long> poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (long long d = 1; d < n; ++d) {
        if (n % d) continue;
        poly = poly_div_exact(poly, cyclotomic_polynomial(d));
    }
    return cache.emplace(n, std::move(poly)).first->second;
}

CycloValue::CycloValue(long long conductor) : n_(conductor), c_(euler_phi(conductor), Rational(0)) {
    if (conductor < 1) throw Error("conductor must be positive");
}

CycloValue::CycloValue(long long conductor, const Rational& constant) : CycloValue(conductor) {
    c_[0] = constant;
}

CycloValue::CycloValue(long long conductor, std::vector<Rational> raw) : CycloValue(conductor) {
    reduce_from(raw);
}

void CycloValue::reduce_from(std::vector<Rational>& poly) {
    const auto& phi = cyclotomic_polynomial(n_);
    size_t deg = phi.size() - 1;  // = phi(n_)
    // long division by the monic Phi_n
    for (size_t i = poly.size(); i-- > deg;) {
        Rational q = poly[i];
        if (q.is_zero()) continue;
        for (size_t j = 0; j < phi.size(); ++j)
            poly[i - deg + j] -= q * Rational(phi[j]);
    }
    for (size_t i = 0; i < deg && i < poly.size(); ++i) c_[i] = poly[i];
}

bool CycloValue::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool CycloValue::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rational CycloValue::rational_part() const {
    if (!is_rational()) throw Error("cyclotomic value is not rational");
    return c_[0];
}

CycloValue CycloValue::operator-() const {
    CycloValue r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

namespace {
void require_same_conductor(const CycloValue& x, const CycloValue& y) {
    if (x.conductor() != y.conductor())
        throw MixedFieldError("mixed cyclotomic conductors: " + std::to_string(x.conductor()) +
                              " vs " + std::to_string(y.conductor()));
}
}  // namespace

CycloValue operator+(const CycloValue& x, const CycloValue& y) {
    require_same_conductor(x, y);
    std::vector<Rational> c(x.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = x.c_[i] + y.c_[i];
    return CycloValue(x.n_, std::move(c));
}

CycloValue operator-(const CycloValue& x, const CycloValue& y) { return x + (-y); }

CycloValue operator*(const CycloValue& x, const CycloValue& y) {
    require_same_conductor(x, y);
    std::vector<Rational> prod(2 * x.c_.size(), Rational(0));
    for (size_t i = 0; i < x.c_.size(); ++i) {
        if (x.c_[i].is_zero()) continue;
        for (size_t j = 0; j < y.c_.size(); ++j) {
            if (y.c_[j].is_zero()) continue;
            prod[i + j] += x.c_[i] * y.c_[j];
        }
    }
    return CycloValue(x.n_, std::move(prod));
}

CycloValue CycloValue::inverse() const {
    if (is_zero()) throw Error("cyclotomic division by zero");
    // Extended Euclid in Q[x]: u * this + v * Phi_n = gcd = const, so
    // inverse = u / const.  Phi_n irreducible makes the gcd a nonzero scalar.
    const auto& phi_i = cyclotomic_polynomial(n_);
    std::vector<Rational> r0(phi_i.begin(), phi_i.end());
    std::vector<Rational> r1(c_.begin(), c_.end());
    while (!r1.empty() && r1.back().is_zero()) r1.pop_back();
    std::vector<Rational> u0{Rational(0)}, u1{Rational(1)};  // coeffs of 'this'

    auto deg = [](const std::vector<Rational>& p) { return (long long)p.size() - 1; };
    while (true) {
        // r0 = q * r1 + r; track u alongside
        std::vector<Rational> r = r0, q(std::max<long long>(deg(r0) - deg(r1) + 1, 1), Rational(0));
        while (deg(r) >= deg(r1) && !(r.size() == 1 && r[0].is_zero())) {
            long long shift = deg(r) - deg(r1);
            Rational f = r.back() / r1.back();
            q[shift] += f;
            for (size_t j = 0; j < r1.size(); ++j) r[shift + j] -= f * r1[j];
            while (r.size() > 1 && r.back().is_zero()) r.pop_back();
            if (r.size() == 1 && r[0].is_zero()) break;
        }
        // u_new = u0 - q * u1
        std::vector<Rational> un(std::max(u0.size(), q.size() + u1.size()), Rational(0));
        for (size_t i = 0; i < u0.size(); ++i) un[i] += u0[i];
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < u1.size(); ++j) un[i + j] -= q[i] * u1[j];
        while (un.size() > 1 && un.back().is_zero()) un.pop_back();
        if (r.size() == 1 && r[0].is_zero()) {
            // r1 is the gcd; must be a nonzero constant
            if (deg(r1) != 0) throw Error("cyclotomic inverse: nonconstant gcd");
            std::vector<Rational> inv(u1.size());
            for (size_t i = 0; i < u1.size(); ++i) inv[i] = u1[i] / r1[0];
            return CycloValue(n_, std::move(inv));
        }
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(un);
    }
}

CycloValue operator/(const CycloValue& x, const CycloValue& y) { return x * y.inverse(); }

std::complex<double> CycloValue::to_complex() const {
    std::complex<double> acc(0.0, 0.0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        double ang = 2.0 * std::numbers::pi * double(i) / double(n_);
        acc += c_[i].to_double() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
}

std::string CycloValue::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        bool neg = c_[i].sign() < 0;
        if (s.empty())
            s = neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        Rational mag = neg ? -c_[i] : c_[i];
        if (i == 0) {
            s += mag.str();
            continue;
        }
        if (!(mag == Rational(1))) s += mag.str() + "*";
        s += "z";
        if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
}

CycloValue CycloValue::root_of_unity_power(long long conductor, long long k) {
    k %= conductor;
    if (k < 0) k += conductor;
    std::vector<Rational> raw(k + 1, Rational(0));
    raw[k] = Rational(1);
    return CycloValue(conductor, std::move(raw));
}

CycloValue CycloValue::from_angle(long long conductor, const RationalAngle& t) {
    if (conductor % t.t().den() != 0)
        throw ConductorMismatch("angle " + t.str() + " does not live in Q(zeta_" +
                                std::to_string(conductor) + ")");
    return root_of_unity_power(conductor, t.t().num() * (conductor / t.t().den()));
}

int kronecker_symbol(long long a, long long n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    // factor out twos of n
    while (n % 2 == 0) {
        n /= 2;
        if (a % 2 == 0) return 0;
        long long am = ((a % 8) + 8) % 8;
        if (am == 3 || am == 5) result = -result;
    }
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long long nm = n % 8;
            if (nm == 3 || nm == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

long long quadratic_conductor(long long d) {
    if (d == 1) return 1;
    return (d % 4 == 1) ? d : 4 * d;
}

CycloValue embed_quadratic(const QuadraticValue& x, long long conductor) {
    CycloValue result(conductor, x.a());
    if (x.is_rational()) return result;

    long long delta = quadratic_conductor(x.D());
    if (conductor % delta != 0)
        throw ConductorMismatch("sqrt(" + std::to_string(x.D()) + ") does not live in Q(zeta_" +
                                std::to_string(conductor) + ")");
    // Gauss sum: sum_a (delta|a) zeta_delta^a = sqrt(delta) for delta > 0.
    CycloValue tau(conductor);
    long long stride = conductor / delta;
    for (long long a = 1; a < delta; ++a) {
        int chi = kronecker_symbol(delta, a);
        if (chi == 0) continue;
        CycloValue term = CycloValue::root_of_unity_power(conductor, a * stride);
        tau = (chi > 0) ? tau + term : tau - term;
    }
    // sqrt(D) = tau when delta = D, tau/2 when delta = 4D.
    Rational scale = (delta == x.D()) ? x.b() : x.b() / Rational(2);
    CycloValue scaled(conductor, scale);
    return result + scaled * tau;
}

}  // namespace gnq
