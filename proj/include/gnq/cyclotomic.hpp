#pragma once

#include <complex>
#include <vector>

#include "gnq/angle.hpp"
#include "gnq/quadratic.hpp"
#include "gnq/rational.hpp"

namespace gnq {

// Element of the cyclotomic field Q(zeta_N), stored as a dense vector of
// phi(N) rational coefficients of a polynomial in zeta_N reduced modulo the
// N-th cyclotomic polynomial.  The reduction is canonical, so equality is
// coefficient-wise.  Conductors in use stay small (<= 400 enforced by the
// callers that build data), so dense vectors are fine.
class CycloValue {
  public:
    explicit CycloValue(long long conductor);                                  // zero
    CycloValue(long long conductor, const Rational& constant);                 // rational constant
    CycloValue(long long conductor, std::vector<Rational> raw_power_coeffs);   // reduces degree >= phi(N)

    long long conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;           // all coefficients beyond the constant vanish
    Rational rational_part() const;     // throws if not rational

    CycloValue operator-() const;
    friend CycloValue operator+(const CycloValue& x, const CycloValue& y);
    friend CycloValue operator-(const CycloValue& x, const CycloValue& y);
    friend CycloValue operator*(const CycloValue& x, const CycloValue& y);
    friend CycloValue operator/(const CycloValue& x, const CycloValue& y);
    CycloValue inverse() const;
    CycloValue& operator+=(const CycloValue& o) { return *this = *this + o; }
    CycloValue& operator*=(const CycloValue& o) { return *this = *this * o; }

    friend bool operator==(const CycloValue& x, const CycloValue& y) {
        return x.n_ == y.n_ && x.c_ == y.c_;
    }

    std::complex<double> to_complex() const;

    std::string str() const;  // polynomial in z = zeta_N

    // zeta_N^k
    static CycloValue root_of_unity_power(long long conductor, long long k);
    // exp(2*pi*i*t); requires denominator of t to divide the conductor.
    static CycloValue from_angle(long long conductor, const RationalAngle& t);

  private:
    long long n_;
    std::vector<Rational> c_;  // length phi(n_)

    void reduce_from(std::vector<Rational>& poly);
};

long long euler_phi(long long n);

// Coefficients of the N-th cyclotomic polynomial (degree phi(N), monic),
// index i = coefficient of x^i.  Cached across calls.
const std::vector<long long>& cyclotomic_polynomial(long long n);

// Kronecker symbol (a|n), the fully extended Jacobi symbol.
int kronecker_symbol(long long a, long long n);

// Conductor of Q(sqrt(D)) for squarefree D >= 1: |disc| = D for D = 1 mod 4,
// 4D otherwise (1 for D = 1).
long long quadratic_conductor(long long d);

// Image of a + b*sqrt(D) in Q(zeta_N) via the Gauss-sum expression of
// sqrt(D); requires quadratic_conductor(D) | N, else ConductorMismatch.
CycloValue embed_quadratic(const QuadraticValue& x, long long conductor);

}  // namespace gnq
