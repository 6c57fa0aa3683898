#include "gnq/premodular.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

namespace gnq {

namespace {

long long datum_conductor(const std::vector<QuadraticValue>& dims,
                          const std::vector<RationalAngle>& twists) {
    long long n = 1;
    for (const auto& t : twists) n = std::lcm(n, t.order());
    for (const auto& d : dims)
        if (!d.is_rational()) n = std::lcm(n, quadratic_conductor(d.D()));
    return n;
}

std::complex<double> root_of_unity_numeric(const RationalAngle& t) {
    double ang = 2.0 * std::numbers::pi * t.t().to_double();
    return {std::cos(ang), std::sin(ang)};
}

}  // namespace

PremodularDatum make_datum(FusionRing ring, std::vector<QuadraticValue> dims,
                           std::vector<RationalAngle> twists) {
    const int n = ring.rank();
    if ((int)dims.size() != n || (int)twists.size() != n)
        throw PreconditionError("dims and twists must have length " + std::to_string(n));
    if (!(dims[0] == QuadraticValue(1)))
        throw NotACharacter("dims[0] must be 1, got " + dims[0].str());
    if (!twists[0].is_trivial())
        throw SphericalityViolation("twists[0] must be 0, got " + twists[0].str());
    for (int x = 0; x < n; ++x) {
        if (!(dims[ring.dual(x)] == dims[x]))
            throw SphericalityViolation("dims must satisfy dim(dual x) = dim(x) at index " +
                                        std::to_string(x));
        if (!(twists[ring.dual(x)] == twists[x]))
            throw SphericalityViolation("twists must satisfy theta(dual x) = theta(x) at index " +
                                        std::to_string(x));
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            QuadraticValue lhs = dims[x] * dims[y];
            QuadraticValue rhs(0);
            for (int k = 0; k < n; ++k)
                if (ring.N(x, y, k) > 0) rhs += QuadraticValue(ring.N(x, y, k)) * dims[k];
            if (!(lhs == rhs))
                throw NotACharacter("dims fail the character law at pair (" + std::to_string(x) +
                                    "," + std::to_string(y) + "): " + lhs.str() +
                                    " != " + rhs.str());
        }
    PremodularDatum d{std::move(ring), std::move(dims), std::move(twists), 1};
    d.conductor = datum_conductor(d.dims, d.twists);
    return d;
}

SMatrix s_matrix(const PremodularDatum& datum) {
    const int n = datum.ring.rank();
    const long long N = datum.conductor;
    SMatrix s;
    s.conductor = N;
    s.exact_mode = N <= 400;

    // numeric entries always, as an independent floating route
    s.numeric.assign((size_t)n * n, {0.0, 0.0});
    std::vector<long double> numeric_ld((size_t)n * n * 2, 0.0L);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            std::complex<double> acc(0, 0);
            std::complex<long double> accl(0, 0);
            for (int z = 0; z < n; ++z) {
                int c = datum.ring.N(x, y, z);
                if (c == 0) continue;
                auto term = double(c) * root_of_unity_numeric(datum.twists[z]) *
                            datum.dims[z].to_double();
                acc += term;
                long double ang = 2.0L * std::numbers::pi_v<long double> *
                                  (long double)datum.twists[z].t().num() /
                                  (long double)datum.twists[z].t().den();
                accl += (long double)c *
                        std::complex<long double>(std::cos(ang), std::sin(ang)) *
                        (long double)datum.dims[z].to_double();
            }
            auto pre = root_of_unity_numeric(-datum.twists[x] - datum.twists[y]);
            std::complex<double> val = pre * acc;
            long double angp = 2.0L * std::numbers::pi_v<long double> *
                               (long double)(-datum.twists[x] - datum.twists[y]).t().num() /
                               (long double)(-datum.twists[x] - datum.twists[y]).t().den();
            std::complex<long double> vall =
                std::complex<long double>(std::cos(angp), std::sin(angp)) * accl;
            s.numeric[(size_t)x * n + y] = val;
            numeric_ld[((size_t)x * n + y) * 2] = vall.real();
            numeric_ld[((size_t)x * n + y) * 2 + 1] = vall.imag();
        }

    if (s.exact_mode) {
        std::vector<CycloValue> dims_c, theta_c, theta_inv_c;
        dims_c.reserve(n);
        for (int x = 0; x < n; ++x) {
            dims_c.push_back(embed_quadratic(datum.dims[x], N));
            theta_c.push_back(CycloValue::from_angle(N, datum.twists[x]));
            theta_inv_c.push_back(CycloValue::from_angle(N, -datum.twists[x]));
        }
        std::vector<CycloValue> entries((size_t)n * n, CycloValue(N));
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                CycloValue acc(N);
                for (int z = 0; z < n; ++z) {
                    int c = datum.ring.N(x, y, z);
                    if (c == 0) continue;
                    acc += CycloValue(N, Rational(c)) * theta_c[z] * dims_c[z];
                }
                entries[(size_t)x * n + y] = theta_inv_c[x] * theta_inv_c[y] * acc;
            }
        // structural checks: symmetry, unit row = dims, numeric agreement
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (!(entries[(size_t)x * n + y] == entries[(size_t)y * n + x]))
                    throw Error("S-matrix is not symmetric at (" + std::to_string(x) + "," +
                                std::to_string(y) + ")");
                auto diff = entries[(size_t)x * n + y].to_complex() - s.numeric[(size_t)x * n + y];
                if (std::abs(diff) > 1e-10)
                    throw Error("exact and numeric S-matrix entries disagree at (" +
                                std::to_string(x) + "," + std::to_string(y) + ")");
            }
        for (int y = 0; y < n; ++y)
            if (!(entries[y] == dims_c[y]))
                throw Error("S-matrix row 0 does not equal the dimension character");
        s.exact = std::move(entries);
    } else {
        // certify the numeric entries by two-precision agreement
        for (size_t e = 0; e < s.numeric.size(); ++e) {
            long double dr = numeric_ld[e * 2] - (long double)s.numeric[e].real();
            long double di = numeric_ld[e * 2 + 1] - (long double)s.numeric[e].imag();
            if (std::abs((double)dr) + std::abs((double)di) > 1e-10)
                throw Error("numeric S-matrix entry not certified to 1e-10 width");
        }
    }
    return s;
}

bool centralizes(const PremodularDatum& datum, int x, int y) {
    auto s = s_matrix(datum);
    const int n = datum.ring.rank();
    if (s.exact) {
        CycloValue target = embed_quadratic(datum.dims[x] * datum.dims[y], datum.conductor);
        return s.at(x, y, n) == target;
    }
    double target = datum.dims[x].to_double() * datum.dims[y].to_double();
    return std::abs(s.numeric[(size_t)x * n + y] - std::complex<double>(target, 0)) < 1e-9;
}

std::vector<int> symmetric_center(const PremodularDatum& datum) {
    auto s = s_matrix(datum);
    const int n = datum.ring.rank();
    std::vector<int> center;
    for (int x = 0; x < n; ++x) {
        bool central = true;
        for (int y = 0; y < n && central; ++y) {
            if (s.exact) {
                CycloValue target =
                    embed_quadratic(datum.dims[x] * datum.dims[y], datum.conductor);
                central = s.at(x, y, n) == target;
            } else {
                double target = datum.dims[x].to_double() * datum.dims[y].to_double();
                central =
                    std::abs(s.numeric[(size_t)x * n + y] - std::complex<double>(target, 0)) <
                    1e-9;
            }
        }
        if (central) center.push_back(x);
    }
    // closure under product support and dual
    std::set<int> cset(center.begin(), center.end());
    for (int x : center) {
        if (!cset.count(datum.ring.dual(x)))
            throw Error("symmetric center is not closed under duality");
        for (int y : center)
            for (int k : datum.ring.product_support(x, y))
                if (!cset.count(k))
                    throw Error("symmetric center is not closed under products");
    }
    return center;
}

std::vector<TwistViolation> twist_constraint_on_H(const PremodularDatum& datum) {
    auto h_indices = fixed_point_subgroup(datum.ring);  // throws NotGeneralizedNearGroup
    int x0 = -1;
    for (int x = 0; x < datum.ring.rank(); ++x)
        if (!datum.ring.is_invertible(x)) {
            x0 = x;
            break;
        }
    bool self_adjoint = adjoint_subring(datum.ring).ring.rank() == datum.ring.rank();

    std::vector<TwistViolation> violations;
    for (int h : h_indices) {
        if (datum.twists[h].is_trivial()) continue;
        // single-term balancing: s_{h,X} = theta_h^-1 theta_X^-1 theta_{hX} dim(hX)
        // and hX = X, so s_{h,X} = theta_h^-1 dim(X)
        RationalAngle s_angle = -datum.twists[h];
        std::string s_str = "exp(2*pi*i*" + s_angle.str() + ") * " + datum.dims[x0].str();
        violations.push_back(
            {h, datum.twists[h], s_str, datum.dims[x0].str(), self_adjoint});
    }
    return violations;
}

}  // namespace gnq
