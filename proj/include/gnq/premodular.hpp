#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "gnq/cyclotomic.hpp"
#include "gnq/fusion_ring.hpp"

namespace gnq {

// Dimensions and twists attached to a fusion ring.  dims is an exact
// character with dims[0] = 1; twists are finite-order (rational angles) with
// twists[0] = 0; both are dual-symmetric.  The conductor is the least N with
// all S-matrix entries in Q(zeta_N).
struct PremodularDatum {
    FusionRing ring;
    std::vector<QuadraticValue> dims;
    std::vector<RationalAngle> twists;
    long long conductor = 1;
};

PremodularDatum make_datum(FusionRing ring, std::vector<QuadraticValue> dims,
                           std::vector<RationalAngle> twists);

// s_{X,Y} = theta_X^-1 theta_Y^-1 sum_Z N_{X,Y}^Z theta_Z dim(Z).
// Exact in Q(zeta_N) for conductor <= 400; larger conductors fall back to
// numeric entries certified to width < 1e-10 by two-precision agreement.
struct SMatrix {
    long long conductor = 1;
    std::optional<std::vector<CycloValue>> exact;  // rank*rank, row-major
    std::vector<std::complex<double>> numeric;     // always present
    bool exact_mode = true;

    const CycloValue& at(int x, int y, int rank) const { return (*exact)[x * rank + y]; }
};

SMatrix s_matrix(const PremodularDatum& datum);

// s_{X,Y} = dim(X) dim(Y), decided exactly.
bool centralizes(const PremodularDatum& datum, int x, int y);

// Basis indices centralizing everything; verified closed under product
// support and dual.
std::vector<int> symmetric_center(const PremodularDatum& datum);

struct TwistViolation {
    int h;                    // basis index in H with theta_h != 1
    RationalAngle twist;
    std::string s_value;      // s_{h,X} for a noninvertible X
    std::string dim_value;    // dim(X), the value the constraint forces
    bool self_adjoint_ring;   // true: genuine obstruction; false: conditional
};

// For generalized near-group rings: every h in the fixed-point subgroup with
// theta_h != 1 fails s_{h,X} = dim(X) (the balancing sum is the single term
// theta_h^-1 dim(X)).  Violations are tagged with whether the ring equals its
// adjoint, where the constraint is unconditional.
std::vector<TwistViolation> twist_constraint_on_H(const PremodularDatum& datum);

}  // namespace gnq
